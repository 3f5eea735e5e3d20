//! Independent brute-force checks used by the tests and by `chi selftest`.

mod forms;
mod weyl_order;

pub use forms::{classify_form_fp, gw_fp_relation_check, DiagonalForm};
pub use weyl_order::{degrees, poincare_coefficients, weyl_order_closed_form};

use crate::dsl::CartanType;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("{0} is not an odd prime")]
    NotAnOddPrime(u64),
    #[error("entry {entry} vanishes mod {prime}")]
    DegenerateEntry { entry: i64, prime: u64 },
    #[error("no closed form for Cartan type {0}")]
    UnsupportedType(CartanType),
}
