//! Truncated Cech cohomology on the two-chart cover: the independent oracle
//! for the w invariant.
//!
//! The coboundary (s0, s1) -> s0 - T^{-1} s1 is expressed in the chart-0
//! frame. Chart-0 sections span exactly the monomials with nonnegative z
//! exponent, so the cokernel is carried by the negative-exponent window;
//! relations from chart-1 sections are projected there and the dimension is
//! an exact rational rank computation. Results must be unchanged when both
//! the u-order and the z window grow by one, else the computation reports
//! instability instead of a value.

use crate::error::Error;
use crate::formal::bivariate::TruncatedBivariate;
use crate::formal::linalg::sparse_rank;
use crate::formal::matrix::TransitionMatrix2;
use crate::formal::Scalar;
use crate::Result;

/// Length of the first higher direct image of the k-th power of the divisor
/// line bundle: 0 for k <= 1, else k(k-1)/2. The convention-pinning oracle
/// for [`cech_w`] on rank-1 input.
pub fn line_bundle_w(k: i64) -> u64 {
    if k <= 1 {
        0
    } else {
        (k * (k - 1) / 2) as u64
    }
}

/// Window overrides for the truncated computation; defaults derive from the
/// matrix (u-order = recorded truncation, z half-width = u-order plus twice
/// the largest entry exponent).
#[derive(Debug, Clone, Default)]
pub struct CechOptions {
    pub n_max: Option<usize>,
    pub z_halfwidth: Option<i64>,
}

/// w = h^0 of the first higher direct image, by truncated Cech linear
/// algebra on the restriction to the n_max-th infinitesimal neighborhood.
pub fn cech_w<T: Scalar>(t: &TransitionMatrix2<T>, options: &CechOptions) -> Result<u64> {
    if let Some(n) = options.n_max {
        if n > t.u_truncation() {
            return Err(Error::TruncationExceeded {
                needed: n,
                available: t.u_truncation(),
            });
        }
    }
    let n = options.n_max.unwrap_or(t.u_truncation());
    let maxdeg = t.max_abs_z_exp().max(1);
    let l_half = options.z_halfwidth.unwrap_or(n as i64 + 2 * maxdeg).max(1);

    // the stabilization probe extends one u-order past the request; entries
    // are exact representatives, so the extension is by zero coefficients
    let inv = t.inverse_entries(n + 1);
    let first = cokernel_dim(&inv, 2, n, l_half);
    let second = cokernel_dim(&inv, 2, n + 1, l_half + 1);
    if first != second {
        return Err(Error::Unstable { first, second });
    }
    Ok(first)
}

/// Rank-1 variant on the transition z^k, used to pin the orientation and
/// frame conventions.
pub fn cech_w_rank1<T: Scalar>(k: i64, options: &CechOptions) -> Result<u64> {
    let n = options.n_max.unwrap_or((2 * k.unsigned_abs() + 2) as usize);
    let maxdeg = k.abs().max(1);
    let l_half = options.z_halfwidth.unwrap_or(n as i64 + 2 * maxdeg).max(1);
    let inv = [[TruncatedBivariate::<T>::z_power(-k, n + 1)]];
    let inv_rows: Vec<Vec<TruncatedBivariate<T>>> = vec![vec![inv[0][0].clone()]];
    let first = cokernel_dim_rows(&inv_rows, 1, n, l_half);
    let second = cokernel_dim_rows(&inv_rows, 1, n + 1, l_half + 1);
    if first != second {
        return Err(Error::Unstable { first, second });
    }
    Ok(first)
}

fn cokernel_dim<T: Scalar>(
    inv: &[[TruncatedBivariate<T>; 2]; 2],
    rank: usize,
    n: usize,
    l_half: i64,
) -> u64 {
    let rows: Vec<Vec<TruncatedBivariate<T>>> = inv
        .iter()
        .map(|row| row.to_vec())
        .collect();
    cokernel_dim_rows(&rows, rank, n, l_half)
}

/// Dimension of the cokernel of the coboundary restricted to the window of
/// monomials z^l u^i with -l_half <= l <= -1, 0 <= i <= n, per component.
///
/// Chart-0 generators cover the nonnegative exponents exactly, so only the
/// images T^{-1} * (zeta^a v^i e_k) of chart-1 monomials are materialized,
/// projected onto the window.
fn cokernel_dim_rows<T: Scalar>(
    inv: &[Vec<TruncatedBivariate<T>>],
    rank: usize,
    n: usize,
    l_half: i64,
) -> u64 {
    let width = l_half as usize;
    let row_id = |component: usize, i: usize, l: i64| -> usize {
        (component * (n + 1) + i) * width + (l + l_half) as usize
    };
    let dim = rank * (n + 1) * width;

    // columns of T^{-1}: the image of the source-th frame vector
    let inv_columns: Vec<Vec<&TruncatedBivariate<T>>> = (0..rank)
        .map(|source| inv.iter().take(rank).map(|row| &row[source]).collect())
        .collect();

    let mut columns: Vec<Vec<(usize, T)>> = Vec::new();
    for inv_col in &inv_columns {
        for v_exp in 0..=n {
            // multiplied by u^v_exp and truncated at order n
            let col: Vec<TruncatedBivariate<T>> = inv_col
                .iter()
                .map(|e| e.with_truncation(n).mul_monomial(0, v_exp))
                .collect();
            let Some(max_l) = col.iter().filter_map(|e| e.z_window().map(|w| w.1)).max()
            else {
                continue;
            };
            // zeta^a v^v_exp maps to z^(v_exp - a) u^v_exp; past a_stop the
            // whole image sits below the window
            let a_stop = max_l + v_exp as i64 + l_half;
            for a in 0..=a_stop.max(0) {
                let shift = v_exp as i64 - a;
                let mut column: Vec<(usize, T)> = Vec::new();
                for (k, entry) in col.iter().enumerate() {
                    for (i, l, c) in entry.terms() {
                        let nl = l + shift;
                        if (-l_half..0).contains(&nl) {
                            column.push((row_id(k, i, nl), c.clone()));
                        }
                    }
                }
                if !column.is_empty() {
                    column.sort_by_key(|&(r, _)| r);
                    columns.push(column);
                }
            }
        }
    }
    (dim - sparse_rank(columns)) as u64
}
