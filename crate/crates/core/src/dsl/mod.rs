//! Expression language for motivic spaces: syntax tree, parser, validator
//! and printer.

mod ast;
mod cartan;
mod parser;
mod pretty;
mod validate;

pub use ast::{MvData, SpaceExpr, Stratum};
pub use cartan::{CartanParseError, CartanType, Family};
pub use parser::{parse, ParseError, ParseErrorKind, Position, MAX_NESTING};
pub use pretty::pretty_print;
pub use validate::{validate, Diagnostic};

/// Reads a `.chi` file body: one expression, `#` comments allowed.
pub fn parse_file(text: &str) -> Result<SpaceExpr, ParseError> {
    parse(text)
}
