use std::fmt;
use std::str::FromStr;

use super::GwError;

/// Which relations on `⟨-1⟩` the base field is assumed to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModelKind {
    /// No relations beyond `⟨-1⟩² = ⟨1⟩`.
    Generic,
    /// `k` contains a square root of `-1`, so `⟨-1⟩ = ⟨1⟩`.
    SqrtMinusOne,
    /// `k` is real closed; rank and signature are both available.
    RealClosed,
    /// `k = F_p` for an odd prime `p`, with `p` inverted in the coefficients.
    Finite(u64),
}

/// Semantic assumptions on the base field.
///
/// The characteristic exponent is 1 except for finite models, where it is
/// `p` and gets inverted in every coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldModel {
    kind: ModelKind,
}

fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldModel {
    pub const GENERIC: FieldModel = FieldModel {
        kind: ModelKind::Generic,
    };
    pub const SQRT_MINUS_ONE: FieldModel = FieldModel {
        kind: ModelKind::SqrtMinusOne,
    };
    pub const REAL_CLOSED: FieldModel = FieldModel {
        kind: ModelKind::RealClosed,
    };

    /// `F_p` for an odd prime `p`.
    pub fn finite(p: u64) -> Result<Self, GwError> {
        if !is_odd_prime(p) {
            return Err(GwError::NotAnOddPrime(p));
        }
        Ok(Self {
            kind: ModelKind::Finite(p),
        })
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn char_exponent(&self) -> u64 {
        match self.kind {
            ModelKind::Finite(p) => p,
            _ => 1,
        }
    }

    /// True when `⟨-1⟩ = ⟨1⟩` holds: a square root of `-1` is present,
    /// either by assumption or because `p ≡ 1 (mod 4)`.
    pub fn twist_is_trivial(&self) -> bool {
        match self.kind {
            ModelKind::SqrtMinusOne => true,
            ModelKind::Finite(p) => p % 4 == 1,
            ModelKind::Generic | ModelKind::RealClosed => false,
        }
    }

    /// True when `2(⟨1⟩ - ⟨-1⟩) = 0` is the only extra relation
    /// (finite fields with `p ≡ 3 (mod 4)`).
    pub fn twist_has_order_two(&self) -> bool {
        matches!(self.kind, ModelKind::Finite(p) if p % 4 == 3)
    }

    /// Finite fields are never formally real, so the fundamental ideal is
    /// nilpotent there.
    pub fn fundamental_ideal_is_nilpotent(&self) -> bool {
        matches!(self.kind, ModelKind::Finite(_) | ModelKind::SqrtMinusOne)
    }

    /// All four models in a fixed order, with the given finite prime.
    pub fn all_with_prime(p: u64) -> Result<[FieldModel; 4], GwError> {
        Ok([
            Self::GENERIC,
            Self::SQRT_MINUS_ONE,
            Self::REAL_CLOSED,
            Self::finite(p)?,
        ])
    }
}

impl fmt::Display for FieldModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ModelKind::Generic => f.write_str("generic"),
            ModelKind::SqrtMinusOne => f.write_str("sqrt-minus-one"),
            ModelKind::RealClosed => f.write_str("real-closed"),
            ModelKind::Finite(p) => write!(f, "finite:{p}"),
        }
    }
}

impl FromStr for FieldModel {
    type Err = GwError;

    /// Accepts `generic`, `sqrt-minus-one`, `real-closed`, `finite:p` and
    /// `finite:p:invert-char` (inversion of `p` is always on).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "generic" => Ok(Self::GENERIC),
            "sqrt-minus-one" => Ok(Self::SQRT_MINUS_ONE),
            "real-closed" => Ok(Self::REAL_CLOSED),
            other => {
                let rest = other
                    .strip_prefix("finite:")
                    .ok_or_else(|| GwError::UnknownModel(s.to_string()))?;
                let rest = rest.strip_suffix(":invert-char").unwrap_or(rest);
                let p: u64 = rest
                    .parse()
                    .map_err(|_| GwError::UnknownModel(s.to_string()))?;
                Self::finite(p)
            }
        }
    }
}
