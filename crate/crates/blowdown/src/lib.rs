//! Elementary-transformation calculus for rank-2 vector bundles near an
//! exceptional curve.
//!
//! The combinatorial side works with admissible sequences of splitting
//! types: validation, the closed-form invariants w, z and the c2-defect,
//! exhaustive enumeration from a start pair, and auditors that compare the
//! classical coverage claims against what enumeration actually attains. The
//! symbolic side realizes bundles as truncated two-chart transition
//! matrices over exact rationals and cross-validates the invariants with a
//! Cech cohomology oracle. A thin rank-r layer carries the degree-sum
//! formula and bound for higher rank.

pub mod enumerate;
pub mod error;
pub mod formal;
pub mod rank_r;
pub mod sequence;

pub use enumerate::{
    attained_invariants, audit_lemma11, audit_prop04, audit_theorem02, audit_theorem05,
    count_maximal, enumerate_maximal, successors, visit_maximal, AttainedSet, AuditReport, Claim,
    PairAudit, RangeAudit, SplitAudit, DEFAULT_J_CAP,
};
pub use error::Error;
pub use formal::{
    cech_w, cech_w_rank1, line_bundle_w, BundleVerification, CanonicalExtension, CechOptions,
    MatrixDump, Scalar, TransitionMatrix2, TruncatedBivariate,
};
pub use rank_r::{validate_rank_r, RankRSequence, RankRViolation, SplittingTuple};
pub use sequence::{
    lemma11_box, split_sequence, validate_sequence, violations, AdmissibleSequence, Epsilon,
    InvariantReport, Lemma11Box, Property, SplittingPair,
};

pub type Result<T> = std::result::Result<T, Error>;

/// Version of the report schemas emitted by the tool.
pub const SCHEMA_VERSION: &str = "1";

/// Exact scalar used by the command-line tool and the default pipelines.
pub type Rational = num_rational::BigRational;

/// Truncated bivariate element over exact rationals.
pub type RationalSeries = TruncatedBivariate<Rational>;

/// Transition matrix over exact rationals.
pub type RationalBundle = TransitionMatrix2<Rational>;

/// Canonical extension data over exact rationals.
pub type RationalExtension = CanonicalExtension<Rational>;
