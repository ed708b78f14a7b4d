//! Rank-2 transition matrices on the formal neighborhood of the exceptional
//! curve.
//!
//! Convention, fixed project-wide and pinned by the line-bundle oracle: a
//! rank-1 transition factor z^k is the k-th power of the divisor line
//! bundle, sections transform as s1 = z^k * s0, and the restriction to the
//! curve has degree -k.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Error;
use crate::formal::birkhoff::{splitting_exponents, LMat2};
use crate::formal::bivariate::{Triple, TruncatedBivariate};
use crate::formal::Scalar;
use crate::sequence::SplittingPair;
use crate::Result;

pub type BivMat2<T> = [[TruncatedBivariate<T>; 2]; 2];

/// A 2x2 transition matrix with truncated bivariate entries. The
/// determinant must be a nonzero constant times a power of z, checked on
/// construction.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionMatrix2<T: Scalar> {
    entries: BivMat2<T>,
    u_trunc: usize,
    det_unit: T,
    det_exp: i64,
}

impl<T: Scalar> TransitionMatrix2<T> {
    pub fn new(entries: BivMat2<T>, u_trunc: usize) -> Result<Self> {
        let entries: BivMat2<T> = [
            [
                entries[0][0].with_truncation(u_trunc),
                entries[0][1].with_truncation(u_trunc),
            ],
            [
                entries[1][0].with_truncation(u_trunc),
                entries[1][1].with_truncation(u_trunc),
            ],
        ];
        let det = entries[0][0]
            .mul(&entries[1][1])
            .sub(&entries[0][1].mul(&entries[1][0]));
        let Some((u_exp, det_exp, det_unit)) = det.as_monomial() else {
            return Err(Error::SingularDeterminant);
        };
        if u_exp != 0 {
            return Err(Error::SingularDeterminant);
        }
        Ok(Self {
            entries,
            u_trunc,
            det_unit,
            det_exp,
        })
    }

    /// diag(z^k0, z^k1), the split bundle.
    pub fn diagonal_powers(k0: i64, k1: i64, u_trunc: usize) -> Self {
        let entries = [
            [
                TruncatedBivariate::z_power(k0, u_trunc),
                TruncatedBivariate::zero(u_trunc),
            ],
            [
                TruncatedBivariate::zero(u_trunc),
                TruncatedBivariate::z_power(k1, u_trunc),
            ],
        ];
        Self::new(entries, u_trunc).expect("diagonal z powers are always valid")
    }

    pub fn entry(&self, row: usize, col: usize) -> &TruncatedBivariate<T> {
        &self.entries[row][col]
    }

    pub fn entries(&self) -> &BivMat2<T> {
        &self.entries
    }

    pub fn u_truncation(&self) -> usize {
        self.u_trunc
    }

    pub fn det_exponent(&self) -> i64 {
        self.det_exp
    }

    pub fn det_unit(&self) -> &T {
        &self.det_unit
    }

    pub fn max_abs_z_exp(&self) -> i64 {
        self.entries
            .iter()
            .flatten()
            .map(|e| e.max_abs_z_exp())
            .max()
            .unwrap_or(0)
    }

    /// Truncates every entry to u-order n, the restriction to the n-th
    /// infinitesimal neighborhood. Idempotent; n = 0 is the matrix over the
    /// curve itself.
    pub fn restrict_to_infinitesimal(&self, n: usize) -> Result<Self> {
        if n > self.u_trunc {
            return Err(Error::TruncationExceeded {
                needed: n,
                available: self.u_trunc,
            });
        }
        let entries = [
            [
                self.entries[0][0].with_truncation(n),
                self.entries[0][1].with_truncation(n),
            ],
            [
                self.entries[1][0].with_truncation(n),
                self.entries[1][1].with_truncation(n),
            ],
        ];
        Self::new(entries, n)
    }

    pub(crate) fn u0_mat(&self) -> LMat2<T> {
        [
            [self.entries[0][0].u0(), self.entries[0][1].u0()],
            [self.entries[1][0].u0(), self.entries[1][1].u0()],
        ]
    }

    /// Splitting type of the restriction to the exceptional curve, computed
    /// by exact row/column reduction to diagonal z powers; the result is
    /// independent of the reduction path.
    pub fn splitting_type(&self) -> Result<SplittingPair> {
        let (a, b) = splitting_exponents(&self.u0_mat())?;
        SplittingPair::new(a, b)
    }

    /// Entries of the inverse matrix at the given working truncation. The
    /// monomial determinant makes this the adjugate over a monomial.
    pub(crate) fn inverse_entries(&self, working_trunc: usize) -> BivMat2<T> {
        let unit_inv = T::one() / self.det_unit.clone();
        let scale = |e: &TruncatedBivariate<T>, negate: bool| {
            let s = if negate {
                -unit_inv.clone()
            } else {
                unit_inv.clone()
            };
            e.with_truncation(working_trunc)
                .scale(&s)
                .mul_z_power(-self.det_exp)
        };
        [
            [
                scale(&self.entries[1][1], false),
                scale(&self.entries[0][1], true),
            ],
            [
                scale(&self.entries[1][0], true),
                scale(&self.entries[0][0], false),
            ],
        ]
    }

    /// New transition matrix a1 * self * a0 for frame changes a1 regular on
    /// chart 1 and a0 regular on chart 0 with unit constant determinants.
    /// Represents the same bundle.
    pub fn gauge(&self, a1: &BivMat2<T>, a0: &BivMat2<T>) -> Result<Self> {
        let m = mat_mul(a1, &mat_mul(&self.entries, a0, self.u_trunc), self.u_trunc);
        Self::new(m, self.u_trunc)
    }

    /// Stable sparse dump of the entries.
    pub fn dump(&self) -> MatrixDump {
        MatrixDump {
            u_truncation: self.u_trunc,
            det: DetDump {
                unit: self.det_unit.to_string(),
                exp: self.det_exp,
            },
            entries: [
                [
                    self.entries[0][0].to_triples(),
                    self.entries[0][1].to_triples(),
                ],
                [
                    self.entries[1][0].to_triples(),
                    self.entries[1][1].to_triples(),
                ],
            ],
        }
    }
}

pub(crate) fn mat_mul<T: Scalar>(a: &BivMat2<T>, b: &BivMat2<T>, trunc: usize) -> BivMat2<T> {
    let mut out = [
        [
            TruncatedBivariate::zero(trunc),
            TruncatedBivariate::zero(trunc),
        ],
        [
            TruncatedBivariate::zero(trunc),
            TruncatedBivariate::zero(trunc),
        ],
    ];
    for r in 0..2 {
        for c in 0..2 {
            out[r][c] = a[r][0].mul(&b[0][c]).add(&a[r][1].mul(&b[1][c]));
        }
    }
    out
}

/// Serializable sparse matrix dump, stable for golden tests.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixDump {
    pub u_truncation: usize,
    pub det: DetDump,
    pub entries: [[Vec<Triple>; 2]; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DetDump {
    pub unit: String,
    pub exp: i64,
}

impl MatrixDump {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("dump serialization cannot fail")
    }
}

/// The extension data of a bundle with splitting type (j, -j): the upper
/// triangular canonical form [[z^j, p], [0, z^-j]] with p supported in the
/// nonremovable window 1 <= i <= 2j - 2, i - j + 1 <= l <= j - 1.
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalExtension<T> {
    j: i64,
    p: BTreeMap<(i64, i64), T>,
}

impl<T: Scalar> CanonicalExtension<T> {
    /// Validates the coefficient table; keys are (i, l) with i the u
    /// exponent and l the z exponent.
    pub fn new(j: i64, coefficients: impl IntoIterator<Item = ((i64, i64), T)>) -> Result<Self> {
        if j < 1 {
            return Err(Error::Parameter(format!("j must be >= 1, got {j}")));
        }
        let mut p = BTreeMap::new();
        for ((i, l), c) in coefficients {
            if c.is_zero() {
                continue;
            }
            if !window_contains(j, i, l) {
                return Err(Error::CoefficientOutsideWindow { i, l });
            }
            if p.insert((i, l), c).is_some() {
                return Err(Error::Parameter(format!(
                    "duplicate coefficient at (i = {i}, l = {l})"
                )));
            }
        }
        Ok(Self { j, p })
    }

    pub fn split(j: i64) -> Result<Self> {
        Self::new(j, [])
    }

    pub fn j(&self) -> i64 {
        self.j
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (i64, i64, &T)> {
        self.p.iter().map(|(&(i, l), c)| (i, l, c))
    }

    /// Default truncation 2j + 2: one u-order per elementary transformation
    /// along the longest sequence, plus slack.
    pub fn default_truncation(&self) -> usize {
        (2 * self.j + 2) as usize
    }

    pub fn transition_matrix(&self) -> TransitionMatrix2<T> {
        self.transition_matrix_with_truncation(self.default_truncation())
            .expect("default truncation holds the whole window")
    }

    pub fn transition_matrix_with_truncation(
        &self,
        u_trunc: usize,
    ) -> Result<TransitionMatrix2<T>> {
        let max_i = self.p.keys().map(|&(i, _)| i as usize).max().unwrap_or(0);
        if u_trunc < max_i {
            return Err(Error::TruncationExceeded {
                needed: max_i,
                available: u_trunc,
            });
        }
        let mut p = TruncatedBivariate::zero(u_trunc);
        for (&(i, l), c) in &self.p {
            p = p.add(&TruncatedBivariate::monomial(c.clone(), l, i as usize, u_trunc));
        }
        let entries = [
            [TruncatedBivariate::z_power(self.j, u_trunc), p],
            [
                TruncatedBivariate::zero(u_trunc),
                TruncatedBivariate::z_power(-self.j, u_trunc),
            ],
        ];
        TransitionMatrix2::new(entries, u_trunc)
    }
}

/// The nonremovable window for extension coefficients: a monomial z^l u^i
/// added to p is gauge-trivial exactly when l >= j or l <= i - j.
pub fn window_contains(j: i64, i: i64, l: i64) -> bool {
    1 <= i && i <= 2 * j - 2 && i - j < l && l < j
}
