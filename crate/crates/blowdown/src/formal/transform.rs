//! The negative elementary transformation executed on transition matrices,
//! and the sequence/invariant pipeline it drives.

use serde::Serialize;

use crate::error::Error;
use crate::formal::birkhoff::{factor, Birkhoff};
use crate::formal::bivariate::TruncatedBivariate;
use crate::formal::cech::{cech_w, CechOptions};
use crate::formal::matrix::{mat_mul, BivMat2, TransitionMatrix2};
use crate::formal::Scalar;
use crate::sequence::InvariantReport;
use crate::{enumerate::successors, sequence::AdmissibleSequence, Result};

impl<T: Scalar> TransitionMatrix2<T> {
    /// The kernel of the projection onto the lowest-degree quotient of the
    /// restriction to the curve, as a new transition matrix.
    ///
    /// The frame change diagonalizing the restriction is lifted constantly
    /// in u; the second frame member is then rescaled by u on chart 0 and
    /// by v on chart 1. The degree sum rises by one and one u-order of
    /// truncation is consumed.
    pub fn elementary_transform(&self) -> Result<Self> {
        let Birkhoff { q1, q0, exps } = factor(&self.u0_mat())?;
        if exps.0 == exps.1 {
            return Err(Error::BalancedTerminal {
                a: -exps.0,
                b: -exps.1,
            });
        }
        if self.u_truncation() == 0 {
            return Err(Error::TruncationExceeded {
                needed: 1,
                available: 0,
            });
        }
        let n = self.u_truncation();
        let lift = |m: &[[crate::formal::laurent::LaurentPoly<T>; 2]; 2]| -> BivMat2<T> {
            [
                [
                    TruncatedBivariate::from_laurent(&m[0][0], n),
                    TruncatedBivariate::from_laurent(&m[0][1], n),
                ],
                [
                    TruncatedBivariate::from_laurent(&m[1][0], n),
                    TruncatedBivariate::from_laurent(&m[1][1], n),
                ],
            ]
        };
        let mut t1 = mat_mul(&lift(&q1), &mat_mul(self.entries(), &lift(&q0), n), n);
        // put the lowest-degree summand (largest z exponent) in component 1
        if exps.0 > exps.1 {
            t1 = [
                [t1[1][1].clone(), t1[1][0].clone()],
                [t1[0][1].clone(), t1[0][0].clone()],
            ];
        }
        // rescale the second frame member by u (chart 0) and v = z*u
        // (chart 1): entrywise [[T00, u*T01], [T10/(z*u), T11/z]]
        let new_trunc = n - 1;
        let e00 = t1[0][0].with_truncation(new_trunc);
        let e01 = t1[0][1].mul_monomial(0, 1).with_truncation(new_trunc);
        let e10 = t1[1][0].div_u(1)?.mul_z_power(-1).with_truncation(new_trunc);
        let e11 = t1[1][1].mul_z_power(-1).with_truncation(new_trunc);
        Self::new([[e00, e01], [e10, e11]], new_trunc)
    }

    /// Iterates the elementary transformation from a splitting type (j, -j)
    /// until the bundle balances, recording the sequence of splitting types.
    pub fn associated_sequence(&self) -> Result<AdmissibleSequence> {
        let start = self.splitting_type()?;
        if start.sum() != 0 {
            return Err(Error::UnsupportedSplitting {
                a: start.a(),
                b: start.b(),
            });
        }
        let j = start.a();
        let needed = (2 * j + 2) as usize;
        if self.u_truncation() < needed {
            return Err(Error::TruncationExceeded {
                needed,
                available: self.u_truncation(),
            });
        }
        let mut pairs = vec![start.as_tuple()];
        let mut prev = start;
        let mut cur = self.clone();
        while !prev.is_balanced() {
            cur = cur.elementary_transform()?;
            let next = cur.splitting_type()?;
            if !successors(prev).contains(&next) {
                return Err(Error::Internal(format!(
                    "transform left the successor relation: {prev} -> {next}"
                )));
            }
            pairs.push(next.as_tuple());
            prev = next;
        }
        AdmissibleSequence::from_pairs(pairs)
    }

    /// Invariants read off the associated sequence.
    pub fn invariants(&self) -> Result<InvariantReport> {
        self.associated_sequence()?.report()
    }

    /// Runs both pipelines: the sequence-derived invariants and the Cech
    /// rank computation. Disagreement is data, not a crash.
    pub fn verify(&self, options: &CechOptions) -> Result<BundleVerification> {
        let report = self.invariants()?;
        let w_cech = cech_w(self, options)?;
        Ok(BundleVerification {
            agree: report.w == w_cech,
            w_sequence: report.w,
            w_cech,
            report,
        })
    }
}

/// Cross-pipeline comparison of the w invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BundleVerification {
    pub agree: bool,
    pub w_sequence: u64,
    pub w_cech: u64,
    pub report: InvariantReport,
}

impl BundleVerification {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("verification serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formal::matrix::CanonicalExtension;
    use crate::sequence::{split_sequence, Epsilon};

    type Q = num_rational::BigRational;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    #[test]
    fn split_bundles_transform_summand_wise() {
        // diag(z^0, z^-2) has splitting (2, 0); the transform twists the
        // lower summand, giving (2, 1)
        let t = TransitionMatrix2::<Q>::diagonal_powers(0, -2, 4);
        assert_eq!(t.splitting_type().unwrap().as_tuple(), (2, 0));
        let t2 = t.elementary_transform().unwrap();
        assert_eq!(t2.splitting_type().unwrap().as_tuple(), (2, 1));
        assert_eq!(t2.u_truncation(), 3);
        assert_eq!(t2.det_exponent(), t.det_exponent() - 1);
    }

    #[test]
    fn canonical_split_steps_down_the_split_sequence() {
        let t = CanonicalExtension::<Q>::split(2).unwrap().transition_matrix();
        let t2 = t.elementary_transform().unwrap();
        assert_eq!(t2.splitting_type().unwrap().as_tuple(), (2, -1));
    }

    #[test]
    fn generic_p_lands_on_a_successor() {
        let t = CanonicalExtension::new(2, [((1, 0), q(1)), ((1, 1), q(2)), ((2, 1), q(1))])
            .unwrap()
            .transition_matrix();
        let t2 = t.elementary_transform().unwrap();
        let next = t2.splitting_type().unwrap();
        assert!(successors(t.splitting_type().unwrap()).contains(&next));
    }

    #[test]
    fn transform_rejects_balanced_input() {
        let t = TransitionMatrix2::<Q>::diagonal_powers(-1, -1, 3);
        assert_eq!(
            t.elementary_transform().unwrap_err(),
            Error::BalancedTerminal { a: 1, b: 1 }
        );
    }

    #[test]
    fn transform_degree_law() {
        let mut t = CanonicalExtension::new(3, [((1, 1), q(1)), ((2, 0), q(-2))])
            .unwrap()
            .transition_matrix();
        let mut pair = t.splitting_type().unwrap();
        let mut steps = 0;
        while !pair.is_balanced() {
            t = t.elementary_transform().unwrap();
            let next = t.splitting_type().unwrap();
            assert_eq!(next.sum(), pair.sum() + 1);
            pair = next;
            steps += 1;
        }
        assert!(steps <= 6);
    }

    #[test]
    fn associated_sequence_of_split_bundles() {
        for j in 1..=3 {
            let t = CanonicalExtension::<Q>::split(j).unwrap().transition_matrix();
            assert_eq!(
                t.associated_sequence().unwrap(),
                split_sequence(j, Epsilon::Zero).unwrap()
            );
        }
    }

    #[test]
    fn associated_sequence_with_p_zu_is_a_listed_path() {
        let t = CanonicalExtension::new(2, [((1, 1), q(1))])
            .unwrap()
            .transition_matrix();
        let seq = t.associated_sequence().unwrap();
        let all = crate::enumerate::enumerate_maximal(t.splitting_type().unwrap()).unwrap();
        assert!(all.contains(&seq));
        // this particular extension balances early
        assert_eq!(
            seq.pairs().iter().map(|p| p.as_tuple()).collect::<Vec<_>>(),
            vec![(2, -2), (1, 0), (1, 1)]
        );
    }

    #[test]
    fn associated_sequence_needs_enough_truncation() {
        let t = CanonicalExtension::<Q>::split(2)
            .unwrap()
            .transition_matrix_with_truncation(3)
            .unwrap();
        assert_eq!(
            t.associated_sequence().unwrap_err(),
            Error::TruncationExceeded {
                needed: 6,
                available: 3
            }
        );
    }

    #[test]
    fn invariants_of_split_bundles_match_formulas() {
        let t = CanonicalExtension::<Q>::split(2).unwrap().transition_matrix();
        let r = t.invariants().unwrap();
        assert_eq!((r.w, r.z, r.c2_defect), (1, Some(3), 4));
        let t = CanonicalExtension::<Q>::split(3).unwrap().transition_matrix();
        let r = t.invariants().unwrap();
        assert_eq!((r.w, r.z, r.c2_defect), (3, Some(6), 9));
    }

    #[test]
    fn verify_agrees_on_forced_case() {
        let t = CanonicalExtension::new(2, [((1, 1), q(1))])
            .unwrap()
            .transition_matrix();
        let v = t.verify(&CechOptions::default()).unwrap();
        assert!(v.agree);
        assert_eq!(v.w_sequence, 1);
        assert_eq!(v.w_cech, 1);
    }
}
