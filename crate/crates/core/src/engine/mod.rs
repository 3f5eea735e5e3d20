//! Syntax-directed evaluator for motivic Euler characteristics.

mod combine;
mod derivation;
mod eval;
mod rules;

pub use combine::{Combine, Localization, Term};
pub use derivation::{replay, Derivation, DerivationJson, ReplayError};
pub use eval::{eval_chi, eval_str};
pub use rules::{atom_value, Rule};

use crate::dsl::{Diagnostic, ParseError};
use crate::roots::RootError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("invalid expression: {}", .0.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Diagnostic>),
    #[error(transparent)]
    Roots(#[from] RootError),
}
