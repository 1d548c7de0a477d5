use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Result, WrightError};

/// The (λ, μ) pair of W_{λ,μ}. Only λ > −1 is enforced on construction;
/// each [`FunctionKind`] adds its own predicate on top.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct WrightParams {
    pub lambda: f64,
    pub mu: f64,
}

impl WrightParams {
    pub fn new(lambda: f64, mu: f64) -> Result<Self> {
        let p = Self { lambda, mu };
        p.check_entire()?;
        Ok(p)
    }

    /// λ + μ, the shifted argument of the second normalization.
    pub fn shifted(&self) -> f64 {
        self.lambda + self.mu
    }

    fn check_entire(&self) -> Result<()> {
        if self.lambda.is_finite() && self.mu.is_finite() && self.lambda > -1.0 {
            Ok(())
        } else {
            Err(WrightError::InvalidParams {
                kind: "raw",
                predicate: "lambda > -1 with finite lambda, mu",
                lambda: self.lambda,
                mu: self.mu,
            })
        }
    }
}

impl fmt::Display for WrightParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lambda={} mu={}", self.lambda, self.mu)
    }
}

/// Which member of the Wright family a coefficient stream describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FunctionKind {
    /// W_{λ,μ}(z) = Σ_{m≥0} z^m / (m! Γ(λm+μ))
    Raw,
    /// Γ(μ)·z·W_{λ,μ}(z)
    NormFirst,
    NormFirstDeriv,
    /// Γ(λ+μ)·[W_{λ,μ}(z) − 1/Γ(μ)]
    NormSecond,
    NormSecondDeriv,
    /// ∫₀^z NormFirst(t)/t dt
    AlexanderFirst,
}

/// The normalizing family a kind belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Raw,
    First,
    Second,
}

impl FunctionKind {
    pub const ALL: [FunctionKind; 6] = [
        FunctionKind::Raw,
        FunctionKind::NormFirst,
        FunctionKind::NormFirstDeriv,
        FunctionKind::NormSecond,
        FunctionKind::NormSecondDeriv,
        FunctionKind::AlexanderFirst,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FunctionKind::Raw => "raw",
            FunctionKind::NormFirst => "norm-first",
            FunctionKind::NormFirstDeriv => "norm-first-deriv",
            FunctionKind::NormSecond => "norm-second",
            FunctionKind::NormSecondDeriv => "norm-second-deriv",
            FunctionKind::AlexanderFirst => "alexander-first",
        }
    }

    pub fn family(self) -> Family {
        match self {
            FunctionKind::Raw => Family::Raw,
            FunctionKind::NormFirst | FunctionKind::NormFirstDeriv | FunctionKind::AlexanderFirst => Family::First,
            FunctionKind::NormSecond | FunctionKind::NormSecondDeriv => Family::Second,
        }
    }

    pub fn is_derivative(self) -> bool {
        matches!(self, FunctionKind::NormFirstDeriv | FunctionKind::NormSecondDeriv)
    }

    /// Value kinds are z times a series starting at 1; derivative kinds are
    /// the series starting at 1 itself.
    pub fn has_leading_z(self) -> bool {
        matches!(
            self,
            FunctionKind::NormFirst | FunctionKind::NormSecond | FunctionKind::AlexanderFirst
        )
    }

    /// The derivative kind of a normalized value kind, if there is one.
    pub fn derivative(self) -> Option<FunctionKind> {
        match self {
            FunctionKind::NormFirst => Some(FunctionKind::NormFirstDeriv),
            FunctionKind::NormSecond => Some(FunctionKind::NormSecondDeriv),
            _ => None,
        }
    }

    pub fn predicate(self) -> &'static str {
        match self.family() {
            Family::Raw => "lambda > -1",
            Family::First => "lambda > -1 and mu > 0",
            Family::Second => "lambda > -1 and lambda + mu > 0",
        }
    }

    pub fn is_valid(self, p: &WrightParams) -> bool {
        let entire = p.lambda.is_finite() && p.mu.is_finite() && p.lambda > -1.0;
        entire
            && match self.family() {
                Family::Raw => true,
                Family::First => p.mu > 0.0,
                Family::Second => p.shifted() > 0.0,
            }
    }

    pub fn validate(self, p: &WrightParams) -> Result<()> {
        if self.is_valid(p) {
            Ok(())
        } else {
            Err(WrightError::InvalidParams {
                kind: self.name(),
                predicate: self.predicate(),
                lambda: p.lambda,
                mu: p.mu,
            })
        }
    }
}

impl fmt::Display for FunctionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FunctionKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        FunctionKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown function kind `{s}`"))
    }
}
