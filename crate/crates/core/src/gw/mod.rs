//! Exact arithmetic in the subring of `GW(k)` spanned by `⟨1⟩` and `⟨-1⟩`.

mod coefficient;
mod element;
mod model;
mod render;
mod value;

pub use coefficient::{CoeffRing, Coefficient};
pub use element::GwElement;
pub use model::{FieldModel, ModelKind};
pub use render::{CoefficientJson, ElementJson, JsonInteger, ValueJson};
pub use value::{Exactness, GwValue};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GwError {
    #[error("coefficient has a denominator but the characteristic exponent is 1")]
    DenominatorWithoutCharacteristic,
    #[error("denominator is a power of {found}, expected a power of {char_exponent}")]
    ForeignDenominator { found: u64, char_exponent: u64 },
    #[error("{0} is not an odd prime")]
    NotAnOddPrime(u64),
    #[error("unknown field model {0:?}")]
    UnknownModel(String),
    #[error("signature is only defined for real closed fields, not {0}")]
    SignatureNeedsRealClosed(FieldModel),
    #[error("malformed coefficient {0:?}")]
    BadCoefficient(String),
    #[error("malformed element {0:?}")]
    BadElement(String),
}
