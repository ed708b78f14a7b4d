//! Splitting-type sequences for bundles of rank r >= 3 and the closed form
//! and upper bound for the w invariant.
//!
//! Only the conditions derivable at this level are validated (sortedness,
//! equal ranks, degree sum increasing by one per step); which elementary
//! transformations are legal per step is not re-derived here, so sequences
//! are accepted as supplied.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::Result;

/// The splitting type (a_1, ..., a_r) of a rank-r bundle on the exceptional
/// curve, sorted non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SplittingTuple {
    degrees: Vec<i64>,
}

impl SplittingTuple {
    pub fn new(degrees: Vec<i64>) -> Result<Self> {
        let mut bad = Vec::new();
        tuple_violations(&degrees, 0, &mut bad);
        if !bad.is_empty() {
            return Err(Error::InvalidRankR(bad));
        }
        Ok(Self { degrees })
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn sum(&self) -> i64 {
        self.degrees.iter().sum()
    }

    /// Second-smallest entry a(i, r-1).
    pub fn second_lowest(&self) -> i64 {
        self.degrees[self.degrees.len() - 2]
    }

    /// Smallest entry a(i, r).
    pub fn lowest(&self) -> i64 {
        *self.degrees.last().expect("rank >= 2")
    }
}

impl fmt::Display for SplittingTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Violations reported by [`RankRSequence::from_rows`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RankRViolation {
    /// Tuple at this index has fewer than two entries.
    RankTooSmall { index: usize },
    /// Tuple at this index is not sorted non-increasing.
    Unsorted { index: usize },
    /// Tuple at this index has a different rank from the first.
    RankMismatch { index: usize },
    /// Degree sum does not increase by exactly one at this step.
    SumIncrement { index: usize },
}

impl fmt::Display for RankRViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankRViolation::RankTooSmall { index } => write!(f, "rank_too_small@{index}"),
            RankRViolation::Unsorted { index } => write!(f, "unsorted@{index}"),
            RankRViolation::RankMismatch { index } => write!(f, "rank_mismatch@{index}"),
            RankRViolation::SumIncrement { index } => write!(f, "sum_increment@{index}"),
        }
    }
}

fn tuple_violations(degrees: &[i64], index: usize, out: &mut Vec<RankRViolation>) {
    if degrees.len() < 2 {
        out.push(RankRViolation::RankTooSmall { index });
    }
    if degrees.windows(2).any(|w| w[0] < w[1]) {
        out.push(RankRViolation::Unsorted { index });
    }
}

/// Checks a raw list of degree tuples and returns every violation.
pub fn validate_rank_r(rows: &[Vec<i64>]) -> Vec<RankRViolation> {
    let mut out = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        tuple_violations(row, i, &mut out);
    }
    if let Some(first) = rows.first() {
        let r = first.len();
        for (i, row) in rows.iter().enumerate().skip(1) {
            if row.len() != r {
                out.push(RankRViolation::RankMismatch { index: i });
            }
        }
        let base: i64 = first.iter().sum();
        for (i, row) in rows.iter().enumerate().skip(1) {
            let sum: i64 = row.iter().sum();
            if sum != base + i as i64 {
                out.push(RankRViolation::SumIncrement { index: i });
            }
        }
    }
    out
}

/// A nonempty sequence of equal-rank splitting tuples whose degree sums
/// increase by one per step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct RankRSequence {
    tuples: Vec<SplittingTuple>,
}

impl RankRSequence {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptyInput);
        }
        let bad = validate_rank_r(&rows);
        if !bad.is_empty() {
            return Err(Error::InvalidRankR(bad));
        }
        Ok(Self {
            tuples: rows.into_iter().map(|degrees| SplittingTuple { degrees }).collect(),
        })
    }

    pub fn tuples(&self) -> &[SplittingTuple] {
        &self.tuples
    }

    pub fn rank(&self) -> usize {
        self.tuples[0].rank()
    }

    pub fn t(&self) -> usize {
        self.tuples.len()
    }

    /// w = sum over i of max(-a(i, r) - 1, 0), valid under the hypothesis
    /// a(i, r-1) >= -1 for every i.
    pub fn w_exact(&self) -> Result<u64> {
        for (i, tup) in self.tuples.iter().enumerate() {
            let v = tup.second_lowest();
            if v < -1 {
                return Err(Error::ExactFormHypothesis { index: i, value: v });
            }
        }
        Ok(self
            .tuples
            .iter()
            .map(|t| (-t.lowest() - 1).max(0) as u64)
            .sum())
    }

    /// Upper bound sum over all i, j of max(-a(i, j) - 1, 0); never asserted
    /// as exact.
    pub fn w_bound(&self) -> u64 {
        self.tuples
            .iter()
            .flat_map(|t| t.degrees())
            .map(|&d| (-d - 1).max(0) as u64)
            .sum()
    }
}

impl fmt::Display for RankRSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.tuples.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join(";"))
    }
}

impl FromStr for RankRSequence {
    type Err = Error;

    /// Parses the text format "a,b,c;a,b,c;...", e.g. "0,0,-2;0,0,-1".
    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for chunk in s.split(';') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                return Err(Error::Parse(format!("empty tuple in \"{s}\"")));
            }
            let mut row = Vec::new();
            for comp in chunk.split(',') {
                let v = comp
                    .trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("bad integer \"{comp}\": {e}")))?;
                row.push(v);
            }
            rows.push(row);
        }
        Self::from_rows(rows)
    }
}
