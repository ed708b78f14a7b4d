//! Symbolic realization of rank-2 bundles on the formal neighborhood of the
//! exceptional curve: truncated two-chart transition matrices, splitting
//! types by exact factorization, the elementary-transformation algorithm on
//! matrices, and an independent Cech oracle for the w invariant.
//!
//! Everything here is generic over an exact coefficient field; the crate
//! root fixes arbitrary precision rationals for the tool.

mod bivariate;
mod cech;
mod laurent;
mod linalg;
mod matrix;
mod scalar;
mod transform;

mod birkhoff;

pub use bivariate::{TruncatedBivariate, Triple};
pub use cech::{cech_w, cech_w_rank1, line_bundle_w, CechOptions};
pub use matrix::{window_contains, BivMat2, CanonicalExtension, DetDump, MatrixDump, TransitionMatrix2};
pub use scalar::Scalar;
pub use transform::BundleVerification;
