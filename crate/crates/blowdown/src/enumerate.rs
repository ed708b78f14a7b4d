//! Successor generation, exhaustive enumeration of admissible sequences, and
//! auditors that compare enumeration against the classical coverage claims.
//!
//! Audits never fail hard: a claim contradicted by enumeration is data
//! (`holds = false`), since several claims genuinely fail at small
//! parameters.

use std::collections::{BTreeSet, HashMap};

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::sequence::{
    lemma11_box, split_sequence, AdmissibleSequence, Epsilon, SplittingPair,
};
use crate::Result;

/// Default bound on the effective j of an enumeration start; counts grow
/// exponentially in the gap.
pub const DEFAULT_J_CAP: i64 = 14;

/// All legal next splitting types after one negative elementary
/// transformation of (a, b): the pairs (a', b') with a' + b' = a + b + 1 and
/// b < b' <= a' <= a, sorted by decreasing a'. Empty for balanced input.
pub fn successors(p: SplittingPair) -> Vec<SplittingPair> {
    if p.is_balanced() {
        return Vec::new();
    }
    let (a, b) = p.as_tuple();
    let hi = (a + b + 1).div_euclid(2);
    (b + 1..=hi)
        .map(|nb| SplittingPair::new(a + b + 1 - nb, nb).expect("a' >= b' by construction"))
        .collect()
}

fn effective_j(start: SplittingPair) -> i64 {
    start.gap().div_euclid(2)
}

fn check_cap(start: SplittingPair, cap: i64) -> Result<()> {
    let j = effective_j(start);
    if j > cap {
        return Err(Error::EnumerationCap { j, cap });
    }
    Ok(())
}

/// Depth-first visit of every maximal successor path from `start`, in
/// canonical order (children by decreasing a'). The visitor sees each
/// completed sequence as a pair slice; the return value is the path count.
pub fn visit_maximal<F>(start: SplittingPair, cap: i64, mut visit: F) -> Result<u128>
where
    F: FnMut(&[SplittingPair]) -> Result<()>,
{
    check_cap(start, cap)?;
    let mut buf = vec![start];
    let mut count: u128 = 0;
    dfs(&mut buf, &mut count, &mut visit)?;
    Ok(count)
}

fn dfs<F>(buf: &mut Vec<SplittingPair>, count: &mut u128, visit: &mut F) -> Result<()>
where
    F: FnMut(&[SplittingPair]) -> Result<()>,
{
    let cur = *buf.last().expect("buffer nonempty");
    if cur.is_balanced() {
        *count = count.checked_add(1).ok_or(Error::Overflow)?;
        return visit(buf);
    }
    for next in successors(cur) {
        buf.push(next);
        dfs(buf, count, visit)?;
        buf.pop();
    }
    Ok(())
}

/// Every admissible sequence starting at `start`, in canonical order.
pub fn enumerate_maximal(start: SplittingPair) -> Result<Vec<AdmissibleSequence>> {
    enumerate_maximal_capped(start, DEFAULT_J_CAP)
}

pub fn enumerate_maximal_capped(
    start: SplittingPair,
    cap: i64,
) -> Result<Vec<AdmissibleSequence>> {
    let mut out = Vec::new();
    visit_maximal(start, cap, |pairs| {
        let seq = AdmissibleSequence::from_pairs(pairs.iter().map(|p| p.as_tuple()).collect())?;
        out.push(seq);
        Ok(())
    })?;
    Ok(out)
}

/// Number of maximal sequences from `start`, computed without materializing
/// them. Depends only on the gap a - b.
pub fn count_maximal(start: SplittingPair) -> Result<u128> {
    count_maximal_capped(start, DEFAULT_J_CAP)
}

pub fn count_maximal_capped(start: SplittingPair, cap: i64) -> Result<u128> {
    check_cap(start, cap)?;
    let mut memo: HashMap<i64, u128> = HashMap::new();
    count_gap(start.gap(), &mut memo)
}

fn count_gap(gap: i64, memo: &mut HashMap<i64, u128>) -> Result<u128> {
    if gap == 0 {
        return Ok(1);
    }
    if let Some(&c) = memo.get(&gap) {
        return Ok(c);
    }
    // successor gaps are gap - 1, gap - 3, ... down to parity
    let mut total: u128 = 0;
    let mut g = gap - 1;
    while g >= 0 {
        total = total
            .checked_add(count_gap(g, memo)?)
            .ok_or(Error::Overflow)?;
        g -= 2;
    }
    memo.insert(gap, total);
    Ok(total)
}

/// The set of invariant pairs (z, w) attained by the sequences from a
/// normalized start (j, -j + eps).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttainedSet {
    pub j: i64,
    pub epsilon: i64,
    /// (z, w) pairs, each realized by at least one enumerated sequence.
    pub pairs: BTreeSet<(i64, i64)>,
}

impl AttainedSet {
    /// The attained values of k = z + w.
    pub fn k_values(&self) -> BTreeSet<i64> {
        self.pairs.iter().map(|&(z, w)| z + w).collect()
    }

    pub fn min_w(&self) -> Option<i64> {
        self.pairs.iter().map(|&(_, w)| w).min()
    }
}

/// Enumerates all maximal sequences from (j, -j + eps) and collects their
/// (z, w) invariants.
pub fn attained_invariants(j: i64, epsilon: Epsilon) -> Result<AttainedSet> {
    attained_invariants_capped(j, epsilon, DEFAULT_J_CAP)
}

pub fn attained_invariants_capped(j: i64, epsilon: Epsilon, cap: i64) -> Result<AttainedSet> {
    if j < 1 {
        return Err(Error::Parameter(format!("j must be >= 1, got {j}")));
    }
    let start = SplittingPair::new(j, -j + epsilon.value())?;
    let mut pairs = BTreeSet::new();
    visit_maximal(start, cap, |path| {
        let seq = AdmissibleSequence::from_pairs(path.iter().map(|p| p.as_tuple()).collect())?;
        let z = seq.z_invariant()? as i64;
        let w = seq.w_invariant()? as i64;
        pairs.insert((z, w));
        Ok(())
    })?;
    Ok(AttainedSet {
        j,
        epsilon: epsilon.value(),
        pairs,
    })
}

/// Identifier of an audited claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    Thm02,
    Thm05,
    Prop04,
    Lemma11,
}

impl Claim {
    pub fn label(&self) -> &'static str {
        match self {
            Claim::Thm02 => "Thm0.2",
            Claim::Thm05 => "Thm0.5",
            Claim::Prop04 => "Prop0.4",
            Claim::Lemma11 => "Lemma1.1",
        }
    }
}

/// Audit of a claimed (z, w) region against the attained set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairAudit {
    pub claim: Claim,
    pub j: i64,
    pub epsilon: i64,
    pub claimed_w: (i64, i64),
    pub claimed_z: (i64, i64),
    pub attained: BTreeSet<(i64, i64)>,
    /// Claimed but not attained. Defined empty for bounds-only claims.
    pub missing: Vec<(i64, i64)>,
    /// Attained but outside the claimed region.
    pub extra: Vec<(i64, i64)>,
    /// Smallest attained w; reported for the lower-bound claim.
    pub min_attained_w: Option<i64>,
    pub holds: bool,
}

/// Audit of a claimed range of k = z + w values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeAudit {
    pub claim: Claim,
    pub j: i64,
    pub epsilon: i64,
    pub claimed_k: (i64, i64),
    pub attained: BTreeSet<i64>,
    pub missing: Vec<i64>,
    pub extra: Vec<i64>,
    pub holds: bool,
}

/// Audit of the split characterization at sequence level: the target
/// c2-defect must be attained by the split sequence alone, and every
/// non-split sequence attaining the extremal w is listed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitAudit {
    pub claim: Claim,
    pub j: i64,
    pub epsilon: i64,
    pub c2_target: i64,
    pub w_target: i64,
    /// Sequences with c2_defect equal to the target.
    pub attained: Vec<AdmissibleSequence>,
    /// The split sequence, when it fails to attain the target.
    pub missing: Vec<AdmissibleSequence>,
    /// Non-split sequences attaining the target.
    pub extra: Vec<AdmissibleSequence>,
    /// Non-split sequences with the extremal w; informational.
    pub iii_counterexamples: Vec<AdmissibleSequence>,
    pub holds: bool,
}

/// Outcome of one audit; `holds` is false exactly when the enumeration
/// contradicts the claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditReport {
    Pairs(PairAudit),
    Range(RangeAudit),
    Split(SplitAudit),
}

impl AuditReport {
    pub fn holds(&self) -> bool {
        match self {
            AuditReport::Pairs(a) => a.holds,
            AuditReport::Range(a) => a.holds,
            AuditReport::Split(a) => a.holds,
        }
    }

    pub fn claim(&self) -> Claim {
        match self {
            AuditReport::Pairs(a) => a.claim,
            AuditReport::Range(a) => a.claim,
            AuditReport::Split(a) => a.claim,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("audit serialization cannot fail")
    }
}

impl Serialize for AuditReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            AuditReport::Pairs(a) => {
                let mut m = serializer.serialize_map(None)?;
                m.serialize_entry("claim", a.claim.label())?;
                m.serialize_entry("j", &a.j)?;
                m.serialize_entry("epsilon", &a.epsilon)?;
                m.serialize_entry(
                    "claimed",
                    &ClaimedBox {
                        w: a.claimed_w,
                        z: a.claimed_z,
                    },
                )?;
                m.serialize_entry("attained", &a.attained)?;
                m.serialize_entry("missing", &a.missing)?;
                m.serialize_entry("extra", &a.extra)?;
                if let Some(mw) = a.min_attained_w {
                    m.serialize_entry("min_attained_w", &mw)?;
                }
                m.serialize_entry("holds", &a.holds)?;
                m.end()
            }
            AuditReport::Range(a) => {
                let mut m = serializer.serialize_map(None)?;
                m.serialize_entry("claim", a.claim.label())?;
                m.serialize_entry("j", &a.j)?;
                m.serialize_entry("epsilon", &a.epsilon)?;
                m.serialize_entry("claimed", &ClaimedRange { k: a.claimed_k })?;
                m.serialize_entry("attained", &a.attained)?;
                m.serialize_entry("missing", &a.missing)?;
                m.serialize_entry("extra", &a.extra)?;
                m.serialize_entry("holds", &a.holds)?;
                m.end()
            }
            AuditReport::Split(a) => {
                let texts =
                    |v: &Vec<AdmissibleSequence>| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
                let mut m = serializer.serialize_map(None)?;
                m.serialize_entry("claim", a.claim.label())?;
                m.serialize_entry("j", &a.j)?;
                m.serialize_entry("epsilon", &a.epsilon)?;
                m.serialize_entry(
                    "claimed",
                    &ClaimedSplit {
                        c2_defect: a.c2_target,
                        w: a.w_target,
                    },
                )?;
                m.serialize_entry("attained", &texts(&a.attained))?;
                m.serialize_entry("missing", &texts(&a.missing))?;
                m.serialize_entry("extra", &texts(&a.extra))?;
                m.serialize_entry("iii_counterexamples", &texts(&a.iii_counterexamples))?;
                m.serialize_entry("holds", &a.holds)?;
                m.end()
            }
        }
    }
}

#[derive(Serialize)]
struct ClaimedBox {
    w: (i64, i64),
    z: (i64, i64),
}

#[derive(Serialize)]
struct ClaimedRange {
    k: (i64, i64),
}

#[derive(Serialize)]
struct ClaimedSplit {
    c2_defect: i64,
    w: i64,
}

/// Checks full coverage of the claimed box: every (z, w) in the box should
/// be attained and nothing outside it.
pub fn audit_theorem02(j: i64, epsilon: Epsilon) -> Result<AuditReport> {
    audit_theorem02_capped(j, epsilon, DEFAULT_J_CAP)
}

pub fn audit_theorem02_capped(j: i64, epsilon: Epsilon, cap: i64) -> Result<AuditReport> {
    let boxed = lemma11_box(j, epsilon)?;
    let att = attained_invariants_capped(j, epsilon, cap)?;
    let mut missing = Vec::new();
    for z in boxed.z_min..=boxed.z_max {
        for w in boxed.w_min..=boxed.w_max {
            if !att.pairs.contains(&(z, w)) {
                missing.push((z, w));
            }
        }
    }
    let extra: Vec<(i64, i64)> = att
        .pairs
        .iter()
        .copied()
        .filter(|&(z, w)| !boxed.contains(z, w))
        .collect();
    let holds = missing.is_empty() && extra.is_empty();
    Ok(AuditReport::Pairs(PairAudit {
        claim: Claim::Thm02,
        j,
        epsilon: epsilon.value(),
        claimed_w: (boxed.w_min, boxed.w_max),
        claimed_z: (boxed.z_min, boxed.z_max),
        attained: att.pairs,
        missing,
        extra,
        min_attained_w: None,
        holds,
    }))
}

/// Checks containment only: every attained (z, w) should lie inside the
/// claimed box. Gaps inside the box do not contradict the bounds, so
/// `missing` is empty by definition; the minimum attained w is reported for
/// the lower-bound sharpness check.
pub fn audit_lemma11(j: i64, epsilon: Epsilon) -> Result<AuditReport> {
    audit_lemma11_capped(j, epsilon, DEFAULT_J_CAP)
}

pub fn audit_lemma11_capped(j: i64, epsilon: Epsilon, cap: i64) -> Result<AuditReport> {
    let boxed = lemma11_box(j, epsilon)?;
    let att = attained_invariants_capped(j, epsilon, cap)?;
    let extra: Vec<(i64, i64)> = att
        .pairs
        .iter()
        .copied()
        .filter(|&(z, w)| !boxed.contains(z, w))
        .collect();
    let holds = extra.is_empty();
    Ok(AuditReport::Pairs(PairAudit {
        claim: Claim::Lemma11,
        j,
        epsilon: epsilon.value(),
        claimed_w: (boxed.w_min, boxed.w_max),
        claimed_z: (boxed.z_min, boxed.z_max),
        min_attained_w: att.min_w(),
        attained: att.pairs,
        missing: Vec::new(),
        extra,
        holds,
    }))
}

/// Checks that the attained k = z + w values are exactly {j, ..., j^2}
/// (splitting type (j, -j), so eps = 0 is fixed).
pub fn audit_theorem05(j: i64) -> Result<AuditReport> {
    audit_theorem05_capped(j, DEFAULT_J_CAP)
}

pub fn audit_theorem05_capped(j: i64, cap: i64) -> Result<AuditReport> {
    if j < 1 {
        return Err(Error::Parameter(format!("j must be >= 1, got {j}")));
    }
    let att = attained_invariants_capped(j, Epsilon::Zero, cap)?;
    let ks = att.k_values();
    let claimed = (j, j * j);
    let missing: Vec<i64> = (claimed.0..=claimed.1).filter(|k| !ks.contains(k)).collect();
    let extra: Vec<i64> = ks
        .iter()
        .copied()
        .filter(|&k| k < claimed.0 || k > claimed.1)
        .collect();
    let holds = missing.is_empty() && extra.is_empty();
    Ok(AuditReport::Range(RangeAudit {
        claim: Claim::Thm05,
        j,
        epsilon: 0,
        claimed_k: claimed,
        attained: ks,
        missing,
        extra,
        holds,
    }))
}

/// Sequence-level audit of the split characterization: (A) the c2-defect
/// target j(j - eps) must be attained exactly by the split sequence, and
/// (B) every non-split sequence attaining the extremal w is listed as a
/// counterexample to the w-characterization.
pub fn audit_prop04(j: i64, epsilon: Epsilon) -> Result<AuditReport> {
    audit_prop04_capped(j, epsilon, DEFAULT_J_CAP)
}

pub fn audit_prop04_capped(j: i64, epsilon: Epsilon, cap: i64) -> Result<AuditReport> {
    if j < 1 {
        return Err(Error::Parameter(format!("j must be >= 1, got {j}")));
    }
    let eps = epsilon.value();
    let c2_target = j * (j - eps);
    let w_target = j * (j - 1) / 2 - eps * j;
    let split = split_sequence(j, epsilon)?;
    let start = SplittingPair::new(j, -j + eps)?;

    let mut attained = Vec::new();
    let mut counterexamples = Vec::new();
    visit_maximal(start, cap, |path| {
        let seq = AdmissibleSequence::from_pairs(path.iter().map(|p| p.as_tuple()).collect())?;
        if seq.c2_defect() == c2_target {
            attained.push(seq.clone());
        }
        if seq.w_invariant()? as i64 == w_target && seq != split {
            counterexamples.push(seq);
        }
        Ok(())
    })?;

    let missing = if attained.contains(&split) {
        Vec::new()
    } else {
        vec![split.clone()]
    };
    let extra: Vec<AdmissibleSequence> =
        attained.iter().filter(|s| **s != split).cloned().collect();
    let holds = missing.is_empty() && extra.is_empty();
    Ok(AuditReport::Split(SplitAudit {
        claim: Claim::Prop04,
        j,
        epsilon: eps,
        c2_target,
        w_target,
        attained,
        missing,
        extra,
        iii_counterexamples: counterexamples,
        holds,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pair(a: i64, b: i64) -> SplittingPair {
        SplittingPair::new(a, b).unwrap()
    }

    fn tuples(seq: &AdmissibleSequence) -> Vec<(i64, i64)> {
        seq.pairs().iter().map(|p| p.as_tuple()).collect()
    }

    #[test]
    fn successor_examples() {
        for b in -5..=5 {
            assert_eq!(
                successors(pair(b + 4, b)),
                vec![pair(b + 4, b + 1), pair(b + 3, b + 2)]
            );
        }
        assert_eq!(successors(pair(3, 3)), Vec::new());
        assert_eq!(
            successors(pair(3, -3)),
            vec![pair(3, -2), pair(2, -1), pair(1, 0)]
        );
    }

    #[test]
    fn enumerate_gap_two() {
        let seqs = enumerate_maximal(pair(2, 0)).unwrap();
        assert_eq!(seqs.len(), 1);
        assert_eq!(tuples(&seqs[0]), vec![(2, 0), (2, 1), (2, 2)]);
    }

    #[test]
    fn enumerate_gap_four_matches_listed_paths() {
        let b = 0;
        let seqs = enumerate_maximal(pair(b + 4, b)).unwrap();
        let expected = vec![
            vec![(b + 4, b), (b + 4, b + 1), (b + 4, b + 2), (b + 4, b + 3), (b + 4, b + 4)],
            vec![(b + 4, b), (b + 4, b + 1), (b + 3, b + 3)],
            vec![(b + 4, b), (b + 3, b + 2), (b + 3, b + 3)],
        ];
        assert_eq!(seqs.iter().map(tuples).collect::<Vec<_>>(), expected);
    }

    #[test]
    fn enumerate_gap_six_has_eight_paths() {
        let seqs = enumerate_maximal(pair(3, -3)).unwrap();
        assert_eq!(seqs.len(), 8);
        // canonical order: the (3,-2) branch first, then (2,-1), then (1,0)
        assert_eq!(
            tuples(&seqs[0]),
            vec![(3, -3), (3, -2), (3, -1), (3, 0), (3, 1), (3, 2), (3, 3)]
        );
        assert_eq!(tuples(&seqs[7]), vec![(3, -3), (1, 0), (1, 1)]);
    }

    #[test]
    fn count_matches_enumeration() {
        for (a, b) in [(2, 0), (4, 0), (3, -3), (5, -5), (0, -7), (6, 6)] {
            let n = enumerate_maximal(pair(a, b)).unwrap().len() as u128;
            assert_eq!(count_maximal(pair(a, b)).unwrap(), n, "start ({a},{b})");
        }
        assert_eq!(count_maximal(pair(2, 0)).unwrap(), 1);
        assert_eq!(count_maximal(pair(4, 0)).unwrap(), 3);
        assert_eq!(count_maximal(pair(3, -3)).unwrap(), 8);
    }

    #[test]
    fn cap_is_enforced() {
        let err = enumerate_maximal(pair(15, -15)).unwrap_err();
        assert!(matches!(err, Error::EnumerationCap { j: 15, cap: 14 }));
        assert!(enumerate_maximal_capped(pair(15, -15), 15).is_ok());
    }

    #[test]
    fn attained_examples() {
        let att = attained_invariants(2, Epsilon::Zero).unwrap();
        assert_eq!(att.pairs, BTreeSet::from([(1, 1), (2, 1), (3, 1)]));

        let att = attained_invariants(1, Epsilon::Zero).unwrap();
        assert_eq!(att.pairs, BTreeSet::from([(1, 0)]));

        let att = attained_invariants(3, Epsilon::Zero).unwrap();
        assert_eq!(
            att.pairs,
            BTreeSet::from([
                (1, 2), (2, 2), (3, 2), (2, 3), (3, 3), (4, 3), (5, 3), (6, 3)
            ])
        );
    }

    #[test]
    fn theorem02_audit_examples() {
        assert!(audit_theorem02(2, Epsilon::Zero).unwrap().holds());
        assert!(audit_theorem02(1, Epsilon::Zero).unwrap().holds());

        let report = audit_theorem02(3, Epsilon::Zero).unwrap();
        assert!(!report.holds());
        match report {
            AuditReport::Pairs(a) => {
                assert_eq!(a.missing, vec![(1, 3), (4, 2), (5, 2), (6, 2)]);
                assert!(a.extra.is_empty());
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn theorem05_audit_examples() {
        for j in 1..=3 {
            let report = audit_theorem05(j).unwrap();
            assert!(report.holds(), "j = {j}");
            match report {
                AuditReport::Range(a) => {
                    assert_eq!(
                        a.attained,
                        (j..=j * j).collect::<BTreeSet<_>>(),
                        "j = {j}"
                    );
                }
                _ => unreachable!(),
            }
        }
    }

    #[test]
    fn prop04_audit_examples() {
        let r = audit_prop04(2, Epsilon::Zero).unwrap();
        assert!(r.holds());
        match &r {
            AuditReport::Split(a) => assert_eq!(a.iii_counterexamples.len(), 2),
            _ => unreachable!(),
        }

        let r = audit_prop04(3, Epsilon::Zero).unwrap();
        assert!(r.holds());
        match &r {
            AuditReport::Split(a) => assert_eq!(a.iii_counterexamples.len(), 4),
            _ => unreachable!(),
        }

        let r = audit_prop04(1, Epsilon::Zero).unwrap();
        assert!(r.holds());
        match &r {
            AuditReport::Split(a) => assert!(a.iii_counterexamples.is_empty()),
            _ => unreachable!(),
        }
    }

    #[test]
    fn lemma11_audit_reports_low_z_at_minus_one() {
        // the sequence (1,-2) -> (0,0) attains z = 0, outside the claimed
        // z >= 1; the audit reports rather than asserts
        let r = audit_lemma11(1, Epsilon::MinusOne).unwrap();
        match &r {
            AuditReport::Pairs(a) => {
                assert!(a.attained.contains(&(0, 1)));
                assert!(a.extra.contains(&(0, 1)));
                assert!(!a.holds);
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn sequences_from_normalized_start_bound_t_and_terminal() {
        for j in 1..=5 {
            for epsilon in Epsilon::BOTH {
                let eps = epsilon.value();
                let seqs =
                    enumerate_maximal(pair(j, -j + eps)).unwrap();
                for s in seqs {
                    let t = s.t() as i64;
                    assert!(t <= 2 * j + 1 - eps);
                    assert_eq!((eps + t - 1) % 2, 0);
                    assert_eq!(s.last().a(), (eps + t - 1) / 2);
                    assert!(s.last().a() >= 0);
                }
            }
        }
    }

    #[test]
    fn enumeration_is_deterministic_and_duplicate_free() {
        let a = enumerate_maximal(pair(4, -4)).unwrap();
        let b = enumerate_maximal(pair(4, -4)).unwrap();
        assert_eq!(a, b);
        let set: BTreeSet<_> = a.iter().collect();
        assert_eq!(set.len(), a.len());
    }

    #[test]
    fn audit_json_shapes() {
        let r = audit_theorem02(2, Epsilon::Zero).unwrap();
        assert_eq!(
            r.to_json(),
            "{\"claim\":\"Thm0.2\",\"j\":2,\"epsilon\":0,\
             \"claimed\":{\"w\":[1,1],\"z\":[1,3]},\
             \"attained\":[[1,1],[2,1],[3,1]],\"missing\":[],\"extra\":[],\
             \"holds\":true}"
        );
        let r = audit_theorem05(2).unwrap();
        assert_eq!(
            r.to_json(),
            "{\"claim\":\"Thm0.5\",\"j\":2,\"epsilon\":0,\
             \"claimed\":{\"k\":[2,4]},\"attained\":[2,3,4],\"missing\":[],\
             \"extra\":[],\"holds\":true}"
        );
    }

    proptest! {
        /// The closed-form successor rule agrees with a raw scan of the
        /// inequality system b < b' <= a' <= a, a' + b' = a + b + 1.
        #[test]
        fn successors_match_inequality_scan(a in -8i64..=8, gap in 0i64..=12) {
            let b = a - gap;
            let mut scan = Vec::new();
            if a > b {
                for ap in (b..=a).rev() {
                    for bp in b..=ap {
                        if ap + bp == a + b + 1 && bp > b {
                            scan.push((ap, bp));
                        }
                    }
                }
            }
            let got: Vec<(i64, i64)> = successors(pair(a, b))
                .iter()
                .map(|p| p.as_tuple())
                .collect();
            prop_assert_eq!(got, scan);
        }

        /// Every enumerated sequence walks the successor relation.
        #[test]
        fn enumerated_sequences_follow_successors(a in -4i64..=6, gap in 0i64..=8) {
            let seqs = enumerate_maximal(pair(a, a - gap)).unwrap();
            for s in seqs {
                for w in s.pairs().windows(2) {
                    prop_assert!(successors(w[0]).contains(&w[1]));
                }
            }
        }
    }
}
