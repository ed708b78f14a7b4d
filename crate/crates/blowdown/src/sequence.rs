//! Splitting types, admissible sequences, and their closed-form invariants.
//!
//! An admissible sequence records the splitting types produced by iterating
//! minimal-degree negative elementary transformations until the bundle
//! balances. The invariants `w`, `z` and the c2-defect are read off the
//! sequence alone.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::Result;

/// The splitting type (a, b), a >= b, of a rank-2 bundle on the exceptional
/// curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplittingPair {
    a: i64,
    b: i64,
}

impl SplittingPair {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if a < b {
            return Err(Error::Parameter(format!(
                "splitting pair needs a >= b, got ({a}, {b})"
            )));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn sum(&self) -> i64 {
        self.a + self.b
    }

    pub fn gap(&self) -> i64 {
        self.a - self.b
    }

    pub fn is_balanced(&self) -> bool {
        self.a == self.b
    }

    /// Twist by a multiple of the exceptional divisor: both degrees move by d.
    pub fn shifted(&self, d: i64) -> Self {
        Self {
            a: self.a + d,
            b: self.b + d,
        }
    }

    pub fn as_tuple(&self) -> (i64, i64) {
        (self.a, self.b)
    }
}

impl fmt::Display for SplittingPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.a, self.b)
    }
}

impl Serialize for SplittingPair {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(2))?;
        seq.serialize_element(&self.a)?;
        seq.serialize_element(&self.b)?;
        seq.end()
    }
}

/// The four defining properties of an admissible sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Property {
    /// a_i >= b_i for every i.
    #[serde(rename = "i")]
    I,
    /// a_i + b_i = a_1 + b_1 + i - 1 for every i > 1.
    #[serde(rename = "ii")]
    Ii,
    /// a_i >= a_{i+1} >= b_{i+1} > b_i for every i < t.
    #[serde(rename = "iii")]
    Iii,
    /// a_t = b_t, and a_i > b_i for every i < t.
    #[serde(rename = "iv")]
    Iv,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Property::I => "i",
            Property::Ii => "ii",
            Property::Iii => "iii",
            Property::Iv => "iv",
        };
        f.write_str(s)
    }
}

pub(crate) fn format_properties(props: &[Property]) -> String {
    props
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Checks a raw list of integer pairs against the four properties and
/// returns every property that fails. Empty result means admissible.
pub fn violations(pairs: &[(i64, i64)]) -> Vec<Property> {
    let t = pairs.len();
    if t == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();

    if pairs.iter().any(|&(a, b)| a < b) {
        out.push(Property::I);
    }

    let base = pairs[0].0 + pairs[0].1;
    if pairs
        .iter()
        .enumerate()
        .any(|(i, &(a, b))| a + b != base + i as i64)
    {
        out.push(Property::Ii);
    }

    if pairs.windows(2).any(|w| {
        let (a0, b0) = w[0];
        let (a1, b1) = w[1];
        !(a0 >= a1 && a1 >= b1 && b1 > b0)
    }) {
        out.push(Property::Iii);
    }

    let (at, bt) = pairs[t - 1];
    if at != bt || pairs[..t - 1].iter().any(|&(a, b)| a == b) {
        out.push(Property::Iv);
    }

    out
}

/// Validates a raw list of pairs and wraps it as an [`AdmissibleSequence`].
///
/// Errors name every violated property, or flag empty input.
pub fn validate_sequence(pairs: &[(i64, i64)]) -> Result<AdmissibleSequence> {
    AdmissibleSequence::from_pairs(pairs.to_vec())
}

/// A nonempty sequence of splitting pairs satisfying properties i-iv.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissibleSequence {
    pairs: Vec<SplittingPair>,
}

impl AdmissibleSequence {
    pub fn from_pairs(pairs: Vec<(i64, i64)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::EmptyInput);
        }
        let bad = violations(&pairs);
        if !bad.is_empty() {
            return Err(Error::NotAdmissible(bad));
        }
        Ok(Self {
            pairs: pairs
                .into_iter()
                .map(|(a, b)| SplittingPair { a, b })
                .collect(),
        })
    }

    pub fn pairs(&self) -> &[SplittingPair] {
        &self.pairs
    }

    /// Sequence length t.
    pub fn t(&self) -> usize {
        self.pairs.len()
    }

    pub fn first(&self) -> SplittingPair {
        self.pairs[0]
    }

    pub fn last(&self) -> SplittingPair {
        *self.pairs.last().expect("sequence is nonempty")
    }

    /// Shifts every pair by d. Admissibility is shift-invariant.
    pub fn shifted(&self, d: i64) -> Self {
        Self {
            pairs: self.pairs.iter().map(|p| p.shifted(d)).collect(),
        }
    }

    /// A sequence is normalized when its first pair is (j, -j + eps) with
    /// eps in {0, -1}, i.e. a_1 + b_1 lies in {0, -1}.
    pub fn is_normalized(&self) -> bool {
        matches!(self.first().sum(), 0 | -1)
    }

    /// Returns the normalized sequence together with the twist s applied as
    /// a shift of (-s, -s) to every pair.
    pub fn normalize(&self) -> (Self, i64) {
        let sum = self.first().sum();
        // unique s with sum - 2s in {0, -1}
        let s = (sum + 1).div_euclid(2);
        (self.shifted(-s), s)
    }

    /// For a normalized sequence, the parameters (j, eps) of the first pair
    /// (j, -j + eps). None if not normalized.
    pub fn normalized_params(&self) -> Option<(i64, i64)> {
        if self.is_normalized() {
            Some((self.first().a(), self.first().sum()))
        } else {
            None
        }
    }

    /// w = sum over i of max(-b_i - 1, 0).
    ///
    /// The closed form equals the length of the first higher direct image
    /// only when the terminal value a_t is at least -1; lower terminals are
    /// rejected rather than silently extended.
    pub fn w_invariant(&self) -> Result<u64> {
        let at = self.last().a();
        if at < -1 {
            return Err(Error::TerminalBelowRange(at));
        }
        Ok(self
            .pairs
            .iter()
            .map(|p| (-p.b() - 1).max(0) as u64)
            .sum())
    }

    /// c2-defect = sum_{i < t} a_i - a_t^2.
    pub fn c2_defect(&self) -> i64 {
        let at = self.last().a();
        let partial: i64 = self.pairs[..self.t() - 1].iter().map(|p| p.a()).sum();
        partial - at * at
    }

    /// z = c2_defect - w, defined for normalized sequences only.
    pub fn z_invariant(&self) -> Result<u64> {
        if !self.is_normalized() {
            return Err(Error::NotNormalized(self.first().sum()));
        }
        let w = self.w_invariant()? as i64;
        let z = self.c2_defect() - w;
        if z < 0 {
            return Err(Error::Internal(format!(
                "negative z = {z} for sequence {self}"
            )));
        }
        Ok(z as u64)
    }

    /// True when the sequence is, up to a uniform twist, the sequence of a
    /// split bundle.
    pub fn is_split(&self) -> bool {
        let (norm, _) = self.normalize();
        let (j, eps) = norm
            .normalized_params()
            .expect("normalized by construction");
        match Epsilon::try_from(eps) {
            Ok(e) => split_sequence(j, e).map(|s| s == norm).unwrap_or(false),
            Err(_) => false,
        }
    }

    /// Bundles every invariant into one record; z, j, eps are present only
    /// for normalized input.
    pub fn report(&self) -> Result<InvariantReport> {
        let w = self.w_invariant()?;
        let c2 = self.c2_defect();
        let (z, j, epsilon) = if self.is_normalized() {
            let (j, eps) = self.normalized_params().expect("checked");
            (Some(self.z_invariant()?), Some(j), Some(eps))
        } else {
            (None, None, None)
        };
        Ok(InvariantReport {
            sequence: self.clone(),
            t: self.t(),
            w,
            c2_defect: c2,
            z,
            j,
            epsilon,
            split: self.is_split(),
        })
    }
}

impl fmt::Display for AdmissibleSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.pairs {
            if !first {
                f.write_str(";")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for AdmissibleSequence {
    type Err = Error;

    /// Parses the text format "a,b;a,b;...", e.g. "3,-3;3,-2;1,1".
    fn from_str(s: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for chunk in s.split(';') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                return Err(Error::Parse(format!("empty pair in \"{s}\"")));
            }
            let comps: Vec<&str> = chunk.split(',').collect();
            if comps.len() != 2 {
                return Err(Error::Parse(format!(
                    "pair \"{chunk}\" must have exactly two components"
                )));
            }
            let a = comps[0]
                .trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("bad integer \"{}\": {e}", comps[0])))?;
            let b = comps[1]
                .trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("bad integer \"{}\": {e}", comps[1])))?;
            pairs.push((a, b));
        }
        Self::from_pairs(pairs)
    }
}

impl Serialize for AdmissibleSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.pairs.len()))?;
        for p in &self.pairs {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

/// Normalization offset eps in {0, -1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Epsilon {
    Zero,
    MinusOne,
}

impl Epsilon {
    pub const BOTH: [Epsilon; 2] = [Epsilon::Zero, Epsilon::MinusOne];

    pub fn value(&self) -> i64 {
        match self {
            Epsilon::Zero => 0,
            Epsilon::MinusOne => -1,
        }
    }
}

impl TryFrom<i64> for Epsilon {
    type Error = Error;

    fn try_from(v: i64) -> Result<Self> {
        match v {
            0 => Ok(Epsilon::Zero),
            -1 => Ok(Epsilon::MinusOne),
            other => Err(Error::Parameter(format!(
                "epsilon must be 0 or -1, got {other}"
            ))),
        }
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// The sequence of the split bundle with normalized splitting type
/// (j, -j + eps): a_i = j throughout, b_i = -j + eps + i - 1, ending at
/// a_t = b_t = j, so t = 2j + 1 - eps.
pub fn split_sequence(j: i64, epsilon: Epsilon) -> Result<AdmissibleSequence> {
    if j < 0 {
        return Err(Error::Parameter(format!("j must be >= 0, got {j}")));
    }
    let eps = epsilon.value();
    let t = 2 * j + 1 - eps;
    let pairs: Vec<(i64, i64)> = (1..=t).map(|i| (j, -j + eps + i - 1)).collect();
    AdmissibleSequence::from_pairs(pairs)
}

/// The claimed ranges for the invariants of a bundle with normalized
/// splitting type (j, -j + eps). These are audited claims, not an
/// attained-set statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lemma11Box {
    pub w_min: i64,
    pub w_max: i64,
    pub z_min: i64,
    pub z_max: i64,
}

impl Lemma11Box {
    pub fn contains(&self, z: i64, w: i64) -> bool {
        self.z_min <= z && z <= self.z_max && self.w_min <= w && w <= self.w_max
    }
}

/// Claimed bounds j - 1 - eps <= w <= j(j-1)/2 - eps*j and
/// 1 <= z <= j(j+1)/2.
pub fn lemma11_box(j: i64, epsilon: Epsilon) -> Result<Lemma11Box> {
    if j < 1 {
        return Err(Error::Parameter(format!("j must be >= 1, got {j}")));
    }
    let eps = epsilon.value();
    Ok(Lemma11Box {
        w_min: j - 1 - eps,
        w_max: j * (j - 1) / 2 - eps * j,
        z_min: 1,
        z_max: j * (j + 1) / 2,
    })
}

/// Invariants of one sequence. `z`, `j`, `epsilon` are null for
/// non-normalized sequences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub sequence: AdmissibleSequence,
    pub t: usize,
    pub w: u64,
    pub c2_defect: i64,
    pub z: Option<u64>,
    pub j: Option<i64>,
    pub epsilon: Option<i64>,
    pub split: bool,
}

impl InvariantReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}
