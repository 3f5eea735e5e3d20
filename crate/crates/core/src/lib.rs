//! Motivic Euler characteristics as elements of the Grothendieck-Witt ring.
//!
//! Spaces are described in a small expression language ([`dsl`]), evaluated
//! by syntax-directed rewriting ([`engine`]) into exact elements of the
//! subring of `GW(k)` generated by `⟨-1⟩` ([`gw`]), under a chosen
//! [`FieldModel`]. Flag varieties and varieties of maximal tori are handled
//! through Weyl group enumeration ([`roots`]). Independent brute-force
//! checks live in [`oracles`].
//!
//! ```
//! use motivic_chi::{eval_str, FieldModel};
//!
//! let (value, _trace) = eval_str("GModN(E,6)", &FieldModel::SQRT_MINUS_ONE).unwrap();
//! assert!(value.is_exact());
//! assert_eq!(FieldModel::SQRT_MINUS_ONE.render(value.representative()), "1<1>");
//! ```

pub mod cli;
pub mod dsl;
pub mod engine;
pub mod gw;
pub mod oracles;
pub mod roots;

pub use dsl::{parse, pretty_print, validate, CartanType, Family, SpaceExpr};
pub use engine::{eval_chi, eval_str, replay, Derivation, EvalError};
pub use gw::{Coefficient, Exactness, FieldModel, GwElement, GwValue};
