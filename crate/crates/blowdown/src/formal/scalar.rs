//! Scalar trait for the symbolic layer.

use std::fmt;
use std::ops::Neg;

use num_traits::Num;

/// Coefficients the symbolic layer is generic over: a field with exact
/// equality. Cohomology ranks are discontinuous in the coefficients, so the
/// intended instantiations are exact (the crate-root alias picks arbitrary
/// precision rationals).
pub trait Scalar: Num + Clone + Neg<Output = Self> + PartialEq + fmt::Debug + fmt::Display {}

impl<T> Scalar for T where
    T: Num + Clone + Neg<Output = T> + PartialEq + fmt::Debug + fmt::Display
{
}
