//! Univariate Laurent polynomials in z, used by the factorization of
//! restrictions to the exceptional curve.

use std::collections::BTreeMap;
use std::fmt;


use crate::formal::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct LaurentPoly<T> {
    coeffs: BTreeMap<i64, T>,
}

impl<T: Scalar> LaurentPoly<T> {
    pub fn zero() -> Self {
        Self {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn monomial(coeff: T, exp: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self::monomial(T::one(), 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &T)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> T {
        self.coeffs.get(&exp).cloned().unwrap_or_else(T::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Some((exp, coeff)) when the polynomial is a single nonzero monomial.
    pub fn as_monomial(&self) -> Option<(i64, T)> {
        if self.coeffs.len() == 1 {
            let (&e, c) = self.coeffs.iter().next().expect("one term");
            Some((e, c.clone()))
        } else {
            None
        }
    }

    fn insert(&mut self, exp: i64, coeff: T) {
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.remove(&exp) {
            Some(old) => {
                let sum = old + coeff;
                if !sum.is_zero() {
                    self.coeffs.insert(exp, sum);
                }
            }
            None => {
                self.coeffs.insert(exp, coeff);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.insert(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.insert(e, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.insert(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn scale(&self, s: &T) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e, c.clone() * s.clone()))
                .collect(),
        }
    }

    pub fn shift(&self, by: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + by, c.clone())).collect(),
        }
    }

    /// Quotient of polynomial division self / divisor. Both operands must be
    /// supported in nonnegative exponents and deg(self) >= deg(divisor).
    pub fn div_quotient(&self, divisor: &Self) -> Self {
        debug_assert!(self.min_exp().is_none_or(|e| e >= 0));
        debug_assert!(divisor.min_exp().is_some_and(|e| e >= 0));
        let dlead = divisor.max_exp().expect("nonzero divisor");
        let dcoef = divisor.coeff(dlead);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rlead) = rem.max_exp() {
            if rlead < dlead {
                break;
            }
            let factor = rem.coeff(rlead) / dcoef.clone();
            let term = Self::monomial(factor, rlead - dlead);
            quot = quot.add(&term);
            rem = rem.sub(&term.mul(divisor));
        }
        quot
    }
}

impl<T: Scalar> fmt::Display for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z")?,
                _ => write!(f, "{c}*z^{e}")?,
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

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly<Q> {
        let mut p = LaurentPoly::zero();
        for &(e, c) in terms {
            p = p.add(&LaurentPoly::monomial(q(c), e));
        }
        p
    }

    #[test]
    fn arithmetic_basics() {
        let a = poly(&[(0, 1), (2, 3)]);
        let b = poly(&[(-1, 2)]);
        assert_eq!(a.mul(&b), poly(&[(-1, 2), (1, 6)]));
        assert_eq!(a.sub(&a), LaurentPoly::zero());
        assert_eq!(a.shift(3), poly(&[(3, 1), (5, 3)]));
    }

    #[test]
    fn division_quotient() {
        // (z^3 + 2z^2) / (z + 1) = z^2 + z - 1 rem 1
        let a = poly(&[(3, 1), (2, 2)]);
        let b = poly(&[(1, 1), (0, 1)]);
        let quot = a.div_quotient(&b);
        assert_eq!(quot, poly(&[(2, 1), (1, 1), (0, -1)]));
        let rem = a.sub(&quot.mul(&b));
        assert_eq!(rem, poly(&[(0, 1)]));
    }
}
