//! Factorization of an invertible 2x2 Laurent matrix into chart-regular
//! frame changes and a diagonal of z powers, yielding the splitting type of
//! the restriction to the exceptional curve.
//!
//! Row operations use coefficients polynomial in 1/z (chart 1), column
//! operations coefficients polynomial in z (chart 0), so the accumulated
//! factors are regular on their charts.


use crate::error::Error;
use crate::formal::laurent::LaurentPoly;
use crate::formal::Scalar;
use crate::Result;

pub(crate) type LMat2<T> = [[LaurentPoly<T>; 2]; 2];

#[derive(Debug, Clone)]
pub(crate) struct Birkhoff<T> {
    /// Left factor, entries polynomial in 1/z; q1 * m * q0 = diag(z^e0, z^e1).
    pub q1: LMat2<T>,
    /// Right factor, entries polynomial in z.
    pub q0: LMat2<T>,
    pub exps: (i64, i64),
}

pub(crate) fn identity<T: Scalar>() -> LMat2<T> {
    [
        [LaurentPoly::one(), LaurentPoly::zero()],
        [LaurentPoly::zero(), LaurentPoly::one()],
    ]
}

#[cfg(test)]
pub(crate) fn lmat_mul<T: Scalar>(a: &LMat2<T>, b: &LMat2<T>) -> LMat2<T> {
    let mut out = [
        [LaurentPoly::zero(), LaurentPoly::zero()],
        [LaurentPoly::zero(), LaurentPoly::zero()],
    ];
    for r in 0..2 {
        for c in 0..2 {
            out[r][c] = a[r][0].mul(&b[0][c]).add(&a[r][1].mul(&b[1][c]));
        }
    }
    out
}

fn col_swap<T: Scalar>(p: &mut LMat2<T>, q0: &mut LMat2<T>) {
    for row in p.iter_mut() {
        row.swap(0, 1);
    }
    for row in q0.iter_mut() {
        row.swap(0, 1);
    }
}

fn row_swap<T: Scalar>(p: &mut LMat2<T>, q1: &mut LMat2<T>) {
    p.swap(0, 1);
    q1.swap(0, 1);
}

/// col[target] += coef * col[source]
fn col_op<T: Scalar>(
    p: &mut LMat2<T>,
    q0: &mut LMat2<T>,
    target: usize,
    source: usize,
    coef: &LaurentPoly<T>,
) {
    for row in p.iter_mut() {
        row[target] = row[target].add(&row[source].mul(coef));
    }
    for row in q0.iter_mut() {
        row[target] = row[target].add(&row[source].mul(coef));
    }
}

/// row[target] += coef * row[source]
fn row_op<T: Scalar>(
    p: &mut LMat2<T>,
    q1: &mut LMat2<T>,
    target: usize,
    source: usize,
    coef: &LaurentPoly<T>,
) {
    for c in 0..2 {
        let delta = p[source][c].mul(coef);
        p[target][c] = p[target][c].add(&delta);
        let delta = q1[source][c].mul(coef);
        q1[target][c] = q1[target][c].add(&delta);
    }
}

fn scale_col<T: Scalar>(p: &mut LMat2<T>, q0: &mut LMat2<T>, col: usize, s: &T) {
    for row in p.iter_mut() {
        row[col] = row[col].scale(s);
    }
    for row in q0.iter_mut() {
        row[col] = row[col].scale(s);
    }
}

/// Column-reduces row 0 to (g, 0) by the Euclidean algorithm over z
/// polynomials.
fn reduce_top_row<T: Scalar>(p: &mut LMat2<T>, q0: &mut LMat2<T>) {
    loop {
        if p[0][1].is_zero() {
            return;
        }
        if p[0][0].is_zero() {
            col_swap(p, q0);
            continue;
        }
        let d0 = p[0][0].max_exp().expect("nonzero");
        let d1 = p[0][1].max_exp().expect("nonzero");
        if d0 >= d1 {
            let quot = p[0][0].div_quotient(&p[0][1]);
            let neg = quot.scale(&(-T::one()));
            col_op(p, q0, 0, 1, &neg);
        } else {
            col_swap(p, q0);
        }
    }
}

/// Factors m as q1 * m * q0 = diag(z^e0, z^e1). Requires det(m) to be a
/// nonzero constant times a power of z.
pub(crate) fn factor<T: Scalar>(m: &LMat2<T>) -> Result<Birkhoff<T>> {
    let det = m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0]));
    if det.as_monomial().is_none() {
        return Err(Error::SingularDeterminant);
    }

    let delta = m
        .iter()
        .flatten()
        .filter_map(|e| e.min_exp())
        .min()
        .expect("nonzero matrix");
    let mut p: LMat2<T> = [
        [m[0][0].shift(-delta), m[0][1].shift(-delta)],
        [m[1][0].shift(-delta), m[1][1].shift(-delta)],
    ];
    let mut q1 = identity();
    let mut q0 = identity();

    // each pass strictly raises the smaller diagonal exponent, which is
    // bounded by half the determinant exponent
    for _ in 0..1024 {
        reduce_top_row(&mut p, &mut q0);
        let (dg, gu) = p[0][0]
            .as_monomial()
            .ok_or_else(|| Error::Internal("diagonal entry not a monomial".into()))?;
        let (dh, hu) = p[1][1]
            .as_monomial()
            .ok_or_else(|| Error::Internal("diagonal entry not a monomial".into()))?;
        scale_col(&mut p, &mut q0, 0, &(T::one() / gu));
        scale_col(&mut p, &mut q0, 1, &(T::one() / hu));

        // kill the low part of the (1,0) entry with row operations over
        // C[1/z], then the high part with column operations over C[z]
        let low: Vec<(i64, T)> = p[1][0]
            .terms()
            .filter(|&(l, _)| l <= dg)
            .map(|(l, c)| (l, c.clone()))
            .collect();
        for (l, c) in low {
            let coef = LaurentPoly::monomial(-c, l - dg);
            row_op(&mut p, &mut q1, 1, 0, &coef);
        }
        let high: Vec<(i64, T)> = p[1][0]
            .terms()
            .filter(|&(l, _)| l >= dh)
            .map(|(l, c)| (l, c.clone()))
            .collect();
        for (l, c) in high {
            let coef = LaurentPoly::monomial(-c, l - dh);
            col_op(&mut p, &mut q0, 0, 1, &coef);
        }

        if p[1][0].is_zero() {
            debug_assert!(p[0][1].is_zero());
            return Ok(Birkhoff {
                q1,
                q0,
                exps: (dg + delta, dh + delta),
            });
        }
        row_swap(&mut p, &mut q1);
    }
    Err(Error::Internal("factorization did not terminate".into()))
}

/// Splitting type (a, b), a >= b, of the bundle with transition matrix m on
/// the exceptional curve: the transition z^k is the degree -k summand.
pub(crate) fn splitting_exponents<T: Scalar>(m: &LMat2<T>) -> Result<(i64, i64)> {
    let f = factor(m)?;
    let (d0, d1) = (-f.exps.0, -f.exps.1);
    Ok((d0.max(d1), d0.min(d1)))
}
