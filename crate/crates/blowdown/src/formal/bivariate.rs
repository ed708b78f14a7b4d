//! Truncated bivariate Laurent elements on the blow-up charts.
//!
//! Chart 0 carries coordinates (z, u) and chart 1 carries (zeta, v), glued
//! by zeta = 1/z, v = z*u; the exceptional curve is u = 0 = v. An element
//! is Laurent in z and a power series in u truncated beyond a fixed order:
//! terms above the truncation are discarded by every operation.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::formal::laurent::LaurentPoly;
use crate::formal::Scalar;
use crate::Result;

/// Sparse bivariate element keyed by (u exponent, z exponent).
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedBivariate<T> {
    u_trunc: usize,
    coeffs: BTreeMap<(usize, i64), T>,
}

impl<T: Scalar> TruncatedBivariate<T> {
    pub fn zero(u_trunc: usize) -> Self {
        Self {
            u_trunc,
            coeffs: BTreeMap::new(),
        }
    }

    /// c * z^l * u^i, dropped entirely when i exceeds the truncation.
    pub fn monomial(coeff: T, z_exp: i64, u_exp: usize, u_trunc: usize) -> Self {
        let mut out = Self::zero(u_trunc);
        if !coeff.is_zero() && u_exp <= u_trunc {
            out.coeffs.insert((u_exp, z_exp), coeff);
        }
        out
    }

    pub fn constant(coeff: T, u_trunc: usize) -> Self {
        Self::monomial(coeff, 0, 0, u_trunc)
    }

    pub fn z_power(exp: i64, u_trunc: usize) -> Self {
        Self::monomial(T::one(), exp, 0, u_trunc)
    }

    /// The monomial zeta^a * v^i of the other chart, expressed on chart 0:
    /// z^(i - a) * u^i.
    pub fn chart1_monomial(coeff: T, zeta_exp: i64, v_exp: usize, u_trunc: usize) -> Self {
        Self::monomial(coeff, v_exp as i64 - zeta_exp, v_exp, u_trunc)
    }

    pub fn u_truncation(&self) -> usize {
        self.u_trunc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, i64, &T)> {
        self.coeffs.iter().map(|(&(i, l), c)| (i, l, c))
    }

    pub fn coeff(&self, u_exp: usize, z_exp: i64) -> T {
        self.coeffs
            .get(&(u_exp, z_exp))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    /// Smallest and largest z exponent over the support.
    pub fn z_window(&self) -> Option<(i64, i64)> {
        let mut lo = None;
        let mut hi = None;
        for &(_, l) in self.coeffs.keys() {
            lo = Some(lo.map_or(l, |v: i64| v.min(l)));
            hi = Some(hi.map_or(l, |v: i64| v.max(l)));
        }
        Some((lo?, hi?))
    }

    pub fn max_abs_z_exp(&self) -> i64 {
        self.z_window().map_or(0, |(lo, hi)| lo.abs().max(hi.abs()))
    }

    pub fn max_u_exp(&self) -> Option<usize> {
        self.coeffs.keys().map(|&(i, _)| i).max()
    }

    fn insert(&mut self, key: (usize, i64), coeff: T) {
        if coeff.is_zero() || key.0 > self.u_trunc {
            return;
        }
        match self.coeffs.remove(&key) {
            Some(old) => {
                let sum = old + coeff;
                if !sum.is_zero() {
                    self.coeffs.insert(key, sum);
                }
            }
            None => {
                self.coeffs.insert(key, coeff);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.with_truncation(self.u_trunc.min(other.u_trunc));
        for (i, l, c) in other.terms() {
            out.insert((i, l), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            u_trunc: self.u_trunc,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&k, c)| (k, -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let trunc = self.u_trunc.min(other.u_trunc);
        let mut out = Self::zero(trunc);
        for (i1, l1, c1) in self.terms() {
            if i1 > trunc {
                continue;
            }
            for (i2, l2, c2) in other.terms() {
                if i1 + i2 > trunc {
                    continue;
                }
                out.insert((i1 + i2, l1 + l2), c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn scale(&self, s: &T) -> Self {
        if s.is_zero() {
            return Self::zero(self.u_trunc);
        }
        Self {
            u_trunc: self.u_trunc,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&k, c)| (k, c.clone() * s.clone()))
                .collect(),
        }
    }

    /// Multiplies by z^zs * u^us, discarding terms pushed past the
    /// truncation.
    pub fn mul_monomial(&self, z_shift: i64, u_shift: usize) -> Self {
        let mut out = Self::zero(self.u_trunc);
        for (i, l, c) in self.terms() {
            let ni = i + u_shift;
            if ni <= self.u_trunc {
                out.coeffs.insert((ni, l + z_shift), c.clone());
            }
        }
        out
    }

    pub fn mul_z_power(&self, z_shift: i64) -> Self {
        self.mul_monomial(z_shift, 0)
    }

    /// Exact division by u^m; the truncation order drops by m since the top
    /// m orders of the quotient are no longer determined.
    pub fn div_u(&self, m: usize) -> Result<Self> {
        if self.u_trunc < m {
            return Err(Error::TruncationExceeded {
                needed: m,
                available: self.u_trunc,
            });
        }
        let mut coeffs = BTreeMap::new();
        for (i, l, c) in self.terms() {
            if i < m {
                return Err(Error::Internal(format!(
                    "element not divisible by u^{m}: term at u^{i}"
                )));
            }
            coeffs.insert((i - m, l), c.clone());
        }
        Ok(Self {
            u_trunc: self.u_trunc - m,
            coeffs,
        })
    }

    /// Re-truncates to order n. Raising the order treats the stored terms
    /// as exact (missing coefficients are zero), which is how every
    /// constructor in this crate produces its data.
    pub fn with_truncation(&self, n: usize) -> Self {
        Self {
            u_trunc: n,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&(i, _), _)| i <= n)
                .map(|(&k, c)| (k, c.clone()))
                .collect(),
        }
    }

    /// The restriction to the exceptional curve: the u = 0 slice.
    pub(crate) fn u0(&self) -> LaurentPoly<T> {
        let mut out = LaurentPoly::zero();
        for (i, l, c) in self.terms() {
            if i == 0 {
                out = out.add(&LaurentPoly::monomial(c.clone(), l));
            }
        }
        out
    }

    pub(crate) fn from_laurent(p: &LaurentPoly<T>, u_trunc: usize) -> Self {
        let mut out = Self::zero(u_trunc);
        for (e, c) in p.terms() {
            out.coeffs.insert((0, e), c.clone());
        }
        out
    }

    /// Rewrites the element in the other chart's coordinates: the monomial
    /// z^l u^i equals zeta^(i - l) v^i, so exponents map (i, l) -> (i, i - l).
    /// Involutive.
    pub fn to_other_chart(&self) -> Self {
        Self {
            u_trunc: self.u_trunc,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(i, l), c)| ((i, i as i64 - l), c.clone()))
                .collect(),
        }
    }

    /// Regular on chart 0: no negative z exponents.
    pub fn is_chart0_regular(&self) -> bool {
        self.coeffs.keys().all(|&(_, l)| l >= 0)
    }

    /// Regular on chart 1: every monomial z^l u^i has l <= i.
    pub fn is_chart1_regular(&self) -> bool {
        self.coeffs.keys().all(|&(i, l)| l <= i as i64)
    }

    /// Some((u_exp, z_exp, coeff)) when the element is one monomial.
    pub fn as_monomial(&self) -> Option<(usize, i64, T)> {
        if self.coeffs.len() == 1 {
            let (&(i, l), c) = self.coeffs.iter().next().expect("one term");
            Some((i, l, c.clone()))
        } else {
            None
        }
    }

    /// Sparse dump entries (l, i, coefficient string), ordered by (i, l).
    pub fn to_triples(&self) -> Vec<Triple> {
        self.terms()
            .map(|(i, l, c)| Triple {
                l,
                i: i as i64,
                c: c.to_string(),
            })
            .collect()
    }
}

/// One sparse matrix-entry term in the stable dump format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Triple {
    pub l: i64,
    pub i: i64,
    pub c: String,
}

impl<T: Scalar> fmt::Display for TruncatedBivariate<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, l, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            if l != 0 {
                write!(f, "*z^{l}")?;
            }
            if i != 0 {
                write!(f, "*u^{i}")?;
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = num_rational::BigRational;
    type B = TruncatedBivariate<Q>;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    #[test]
    fn multiplication_truncates_u() {
        let a = B::monomial(q(1), 0, 2, 3);
        let b = B::monomial(q(1), 1, 2, 3);
        assert!(a.mul(&b).is_zero()); // u^4 beyond truncation 3
        let c = B::monomial(q(2), -1, 1, 3);
        assert_eq!(a.mul(&c), B::monomial(q(2), -1, 3, 3));
    }

    #[test]
    fn chart_change_is_involutive() {
        let mut x = B::zero(4);
        x = x.add(&B::monomial(q(3), -2, 1, 4));
        x = x.add(&B::monomial(q(-1), 5, 3, 4));
        assert_eq!(x.to_other_chart().to_other_chart(), x);
        // z^-2 u = zeta^3 v: chart-1 regular iff l <= i
        assert!(B::monomial(q(1), 1, 1, 4).is_chart1_regular());
        assert!(!B::monomial(q(1), 2, 1, 4).is_chart1_regular());
    }

    #[test]
    fn div_u_drops_truncation() {
        let x = B::monomial(q(5), 2, 3, 6);
        let y = x.div_u(1).unwrap();
        assert_eq!(y, B::monomial(q(5), 2, 2, 5));
        assert!(B::constant(q(1), 6).div_u(1).is_err());
    }

    #[test]
    fn cancellation_prunes_zeros() {
        let a = B::monomial(q(2), 1, 1, 4);
        let b = B::monomial(q(-2), 1, 1, 4);
        assert!(a.add(&b).is_zero());
    }

    #[test]
    fn window_and_monomial_queries() {
        let mut x = B::zero(4);
        x = x.add(&B::monomial(q(1), -3, 0, 4));
        x = x.add(&B::monomial(q(1), 2, 2, 4));
        assert_eq!(x.z_window(), Some((-3, 2)));
        assert_eq!(x.max_abs_z_exp(), 3);
        assert_eq!(x.as_monomial(), None);
        assert_eq!(
            B::z_power(-2, 4).as_monomial(),
            Some((0, -2, q(1)))
        );
    }
}
