//! Comparison records shared by every checker.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::operator::HermitianOperator;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    /// Row-norm × column-norm bound on scalar Schur multipliers.
    Bennett,
    /// Hölder-bounded functions.
    HoldThm,
    /// Derivative in L¹ + L^∞.
    AbsCont,
    /// Derivative in L^p, 1 ≤ p < 2.
    Lp,
    /// Clamped logarithm `g_β`.
    GBeta,
    /// Extended logarithm, invertible generator.
    TildeLogInv,
    /// Extended logarithm, generator with a kernel.
    TildeLogNonInv,
    /// Interpolated logarithm bound with constant 13.
    LogInterp13,
    /// `[|D|, y]` against first and second derivatives.
    AbsFirst,
    /// `ad_{|D|}^n(y)` against `n + 1` derivatives.
    AbsHigher,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::Bennett,
        TheoremId::HoldThm,
        TheoremId::AbsCont,
        TheoremId::Lp,
        TheoremId::GBeta,
        TheoremId::TildeLogInv,
        TheoremId::TildeLogNonInv,
        TheoremId::LogInterp13,
        TheoremId::AbsFirst,
        TheoremId::AbsHigher,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Bennett => "Bennett",
            TheoremId::HoldThm => "HoldThm",
            TheoremId::AbsCont => "AbsCont",
            TheoremId::Lp => "Lp",
            TheoremId::GBeta => "GBeta",
            TheoremId::TildeLogInv => "TildeLogInv",
            TheoremId::TildeLogNonInv => "TildeLogNonInv",
            TheoremId::LogInterp13 => "LogInterp13",
            TheoremId::AbsFirst => "AbsFirst",
            TheoremId::AbsHigher => "AbsHigher",
        }
    }

    /// Whether instances for this theorem need a positive generator.
    pub fn needs_positive(self) -> bool {
        matches!(
            self,
            TheoremId::GBeta | TheoremId::TildeLogInv | TheoremId::TildeLogNonInv | TheoremId::LogInterp13
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let key = s.to_ascii_lowercase().replace(['-', '_'], "");
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name().to_ascii_lowercase() == key)
            .ok_or_else(|| Error::ConfigInvalid(format!("unknown theorem `{s}`")))
    }
}

/// `pass ⇔ lhs ≤ rhs·(1 + relative) + absolute`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub relative: f64,
    pub absolute: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            relative: 1e-9,
            absolute: 1e-12,
        }
    }
}

impl Tolerance {
    pub fn holds(&self, lhs: f64, rhs: f64) -> bool {
        lhs <= rhs * (1.0 + self.relative) + self.absolute
    }
}

/// Where an instance came from and what its spectrum looked like.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct InstanceDigest {
    pub seed: Option<u64>,
    pub trial: Option<u64>,
    pub dim: usize,
    pub spectral_min: f64,
    pub spectral_max: f64,
}

impl InstanceDigest {
    pub fn of(d: &HermitianOperator) -> Self {
        let (lo, hi) = d.spectral_range();
        Self {
            seed: None,
            trial: None,
            dim: d.dim(),
            spectral_min: lo,
            spectral_max: hi,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub theorem_id: TheoremId,
    pub params: BTreeMap<String, f64>,
    pub lhs: f64,
    pub rhs: f64,
    #[serde(serialize_with = "ser_extended", deserialize_with = "de_extended")]
    pub slack_ratio: f64,
    pub pass: bool,
    pub instance_digest: InstanceDigest,
}

impl InequalityReport {
    pub fn new(
        theorem_id: TheoremId,
        params: BTreeMap<String, f64>,
        lhs: f64,
        rhs: f64,
        digest: InstanceDigest,
    ) -> Self {
        let tol = Tolerance::default();
        Self {
            theorem_id,
            params,
            lhs,
            rhs,
            slack_ratio: slack_ratio(lhs, rhs),
            pass: tol.holds(lhs, rhs),
            instance_digest: digest,
        }
    }

    /// Re-evaluates `pass` under another tolerance. Side conditions folded
    /// into `pass` by the checker (recorded as `side_ok = 0`) still fail.
    pub fn with_tolerance(mut self, tol: Tolerance) -> Self {
        let side_ok = self.params.get("side_ok").is_none_or(|&v| v != 0.0);
        self.pass = side_ok && tol.holds(self.lhs, self.rhs);
        self
    }

    pub(crate) fn require(mut self, side_condition: bool) -> Self {
        self.params
            .insert("side_ok".into(), if side_condition { 1.0 } else { 0.0 });
        self.pass &= side_condition;
        self
    }
}

/// `lhs / rhs`, 0 for `0/0`, +∞ for a positive LHS against a zero RHS.
pub fn slack_ratio(lhs: f64, rhs: f64) -> f64 {
    if rhs == 0.0 {
        if lhs == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        lhs / rhs
    }
}

/// An intermediate inequality from one of the proofs, checked on its own.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepCheck {
    pub label: String,
    pub lhs: f64,
    pub rhs: f64,
    pub pass: bool,
}

impl StepCheck {
    pub fn new(label: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        Self {
            label: label.into(),
            lhs,
            rhs,
            pass: Tolerance::default().holds(lhs, rhs),
        }
    }
}

// JSON has no infinities; encode them as null and read null back as +∞.
pub(crate) fn ser_extended<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    if v.is_finite() {
        s.serialize_f64(*v)
    } else {
        s.serialize_none()
    }
}

pub(crate) fn de_extended<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
    Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::INFINITY))
}
