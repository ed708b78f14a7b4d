//! Crate-wide error type.

use thiserror::Error;

use crate::rank_r::RankRViolation;
use crate::sequence::{format_properties, Property};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input sequence is empty")]
    EmptyInput,

    #[error("sequence is not admissible: violated properties [{}]", format_properties(.0))]
    NotAdmissible(Vec<Property>),

    #[error("w formula valid only for terminal value >= -1, got a_t = {0}")]
    TerminalBelowRange(i64),

    #[error("sequence is not normalized (a_1 + b_1 = {0}); normalize it first")]
    NotNormalized(i64),

    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("enumeration cap exceeded: effective j = {j} > cap {cap}; raise the cap to proceed")]
    EnumerationCap { j: i64, cap: i64 },

    #[error("sequence count overflowed")]
    Overflow,

    #[error("rank-r sequence invalid: violated [{}]", format_rank_r(.0))]
    InvalidRankR(Vec<RankRViolation>),

    #[error(
        "closed form needs a(i, r-1) >= -1 for every i; tuple {index} has a(i, r-1) = {value}; \
         use the bound instead"
    )]
    ExactFormHypothesis { index: usize, value: i64 },

    #[error("coefficient (i = {i}, l = {l}) lies outside the canonical window")]
    CoefficientOutsideWindow { i: i64, l: i64 },

    #[error("truncation exceeded: need u-order {needed}, have {available}")]
    TruncationExceeded { needed: usize, available: usize },

    #[error("determinant is not a nonzero constant times a power of z")]
    SingularDeterminant,

    #[error("bundle is already balanced: splitting ({a}, {b})")]
    BalancedTerminal { a: i64, b: i64 },

    #[error("associated sequence requires splitting type (j, -j), got ({a}, {b})")]
    UnsupportedSplitting { a: i64, b: i64 },

    #[error("cohomology rank did not stabilize: {first} at the base window, {second} enlarged")]
    Unstable { first: u64, second: u64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

fn format_rank_r(violations: &[RankRViolation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
