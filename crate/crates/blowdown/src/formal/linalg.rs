//! Exact sparse rank computation over a field.

use std::collections::BTreeMap;


use crate::formal::Scalar;

/// Rank of the column span. Each column is a sparse list of (row, value)
/// entries with distinct rows. Left-looking elimination: every incoming
/// column is reduced against the pivots found so far.
pub(crate) fn sparse_rank<T, I>(columns: I) -> usize
where
    T: Scalar,
    I: IntoIterator<Item = Vec<(usize, T)>>,
{
    let mut pivots: BTreeMap<usize, Vec<(usize, T)>> = BTreeMap::new();
    for col in columns {
        let mut cur: BTreeMap<usize, T> = col.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        while let Some((&lead, lead_val)) = cur.iter().next() {
            match pivots.get(&lead) {
                Some(pivot_col) => {
                    let factor = lead_val.clone();
                    for (row, val) in pivot_col.clone() {
                        let delta = factor.clone() * val;
                        match cur.remove(&row) {
                            Some(old) => {
                                let diff = old - delta;
                                if !diff.is_zero() {
                                    cur.insert(row, diff);
                                }
                            }
                            None => {
                                cur.insert(row, -delta);
                            }
                        }
                    }
                }
                None => {
                    let inv = T::one() / lead_val.clone();
                    let normalized: Vec<(usize, T)> = cur
                        .iter()
                        .map(|(&r, v)| (r, v.clone() * inv.clone()))
                        .collect();
                    pivots.insert(lead, normalized);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// True when `target` lies in the span of `columns`.
#[cfg(test)]
pub(crate) fn in_span<T: Scalar>(columns: &[Vec<(usize, T)>], target: Vec<(usize, T)>) -> bool {
    let base = sparse_rank(columns.iter().cloned());
    let mut with_target: Vec<Vec<(usize, T)>> = columns.to_vec();
    with_target.push(target);
    sparse_rank(with_target) == base
}
