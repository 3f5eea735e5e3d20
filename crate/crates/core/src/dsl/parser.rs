//! Recursive-descent parser for the space expression language.
//!
//! ```text
//! expr   := IDENT | IDENT "(" args ")" | "Stratified" "[" pairs? "]"
//! args   := arg ("," arg)*
//! arg    := expr | INT | FAMILY
//! pairs  := pair ("," pair)*
//! pair   := "(" expr "," INT ")"
//! ```
//!
//! Whitespace is insignificant and `#` starts a comment that runs to the end
//! of the line. Parsing happens in two passes: a generic tree of calls, then
//! a per-constructor signature check that produces the [`SpaceExpr`].

use std::fmt;

use super::ast::{MvData, Stratum};
use super::{CartanType, Family, SpaceExpr};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    Arity,
    UnknownConstructor,
    ArgumentType,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{pos}: {message}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub pos: Position,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Int(n) => write!(f, "integer `{n}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::LBracket => f.write_str("`[`"),
            Tok::RBracket => f.write_str("`]`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn syntax(pos: Position, message: impl Into<String>) -> ParseError {
    ParseError {
        kind: ParseErrorKind::Syntax,
        pos,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Position)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&ch) = chars.peek() {
        let pos = Position { line, column };
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars<'_>>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        };
        match ch {
            c if c.is_whitespace() => bump(&mut chars),
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    bump(&mut chars);
                }
            }
            '(' | ')' | '[' | ']' | ',' => {
                bump(&mut chars);
                out.push((
                    match ch {
                        '(' => Tok::LParen,
                        ')' => Tok::RParen,
                        '[' => Tok::LBracket,
                        ']' => Tok::RBracket,
                        _ => Tok::Comma,
                    },
                    pos,
                ));
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    digits.push(d);
                    bump(&mut chars);
                }
                let n = digits
                    .parse()
                    .map_err(|_| syntax(pos, format!("integer `{digits}` is out of range")))?;
                out.push((Tok::Int(n), pos));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut ident = String::new();
                while let Some(&d) = chars.peek() {
                    if !(d.is_ascii_alphanumeric() || d == '_') {
                        break;
                    }
                    ident.push(d);
                    bump(&mut chars);
                }
                out.push((Tok::Ident(ident), pos));
            }
            '-' => {
                return Err(syntax(
                    pos,
                    "unexpected `-`: integers in expressions are non-negative",
                ));
            }
            other => return Err(syntax(pos, format!("unexpected character `{other}`"))),
        }
    }
    out.push((Tok::Eof, Position { line, column }));
    Ok(out)
}

/// Untyped call tree produced by the first pass.
#[derive(Debug)]
enum Raw {
    Int(u64, Position),
    Call {
        name: String,
        pos: Position,
        args: Option<Vec<Raw>>,
    },
    Strata(Vec<(Raw, Raw)>, Position),
}

impl Raw {
    fn pos(&self) -> Position {
        match self {
            Raw::Int(_, p) | Raw::Strata(_, p) => *p,
            Raw::Call { pos, .. } => *pos,
        }
    }
}

/// Nesting limit; deeper input is rejected instead of exhausting the stack.
pub const MAX_NESTING: usize = 200;

struct Parser {
    toks: Vec<(Tok, Position)>,
    at: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &(Tok, Position) {
        &self.toks[self.at]
    }

    fn next(&mut self) -> (Tok, Position) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<Position, ParseError> {
        let (tok, pos) = self.next();
        if tok == want {
            Ok(pos)
        } else {
            Err(syntax(pos, format!("expected {want}, found {tok}")))
        }
    }

    fn item(&mut self) -> Result<Raw, ParseError> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            let pos = self.peek().1;
            return Err(syntax(
                pos,
                format!("expression nested deeper than {MAX_NESTING} levels"),
            ));
        }
        let out = self.item_inner();
        self.depth -= 1;
        out
    }

    fn item_inner(&mut self) -> Result<Raw, ParseError> {
        match self.next() {
            (Tok::Int(n), pos) => Ok(Raw::Int(n, pos)),
            (Tok::Ident(name), pos) => {
                if name == "Stratified" {
                    self.expect(Tok::LBracket)?;
                    return self.strata(pos);
                }
                if self.peek().0 == Tok::LParen {
                    self.next();
                    let mut args = vec![self.item()?];
                    loop {
                        match self.next() {
                            (Tok::Comma, _) => args.push(self.item()?),
                            (Tok::RParen, _) => break,
                            (tok, p) => {
                                return Err(syntax(p, format!("expected `,` or `)`, found {tok}")))
                            }
                        }
                    }
                    Ok(Raw::Call {
                        name,
                        pos,
                        args: Some(args),
                    })
                } else {
                    Ok(Raw::Call {
                        name,
                        pos,
                        args: None,
                    })
                }
            }
            (tok, pos) => Err(syntax(pos, format!("expected an expression, found {tok}"))),
        }
    }

    fn strata(&mut self, pos: Position) -> Result<Raw, ParseError> {
        let mut pairs = Vec::new();
        if self.peek().0 == Tok::RBracket {
            self.next();
            return Ok(Raw::Strata(pairs, pos));
        }
        loop {
            self.expect(Tok::LParen)?;
            let space = self.item()?;
            self.expect(Tok::Comma)?;
            let codim = self.item()?;
            self.expect(Tok::RParen)?;
            pairs.push((space, codim));
            match self.next() {
                (Tok::Comma, _) => continue,
                (Tok::RBracket, _) => break,
                (tok, p) => return Err(syntax(p, format!("expected `,` or `]`, found {tok}"))),
            }
        }
        Ok(Raw::Strata(pairs, pos))
    }
}

#[derive(Clone, Copy)]
enum Slot {
    Expr,
    Int,
    Family,
}

fn signature(name: &str) -> Option<&'static [Slot]> {
    use Slot::*;
    Some(match name {
        "Point" | "Gm" | "TateTwist" => &[],
        "Affine" | "Torus" | "Projective" => &[Int],
        "Product" | "Smash" | "DisjointUnion" | "PushoutCone" | "TorusFixed" => &[Expr, Expr],
        "ClosedOpenPair" | "PointedQuotient" => &[Expr, Expr, Expr, Int],
        "ThomTrivial" | "TorusSlice" => &[Int, Expr],
        "MayerVietoris" => &[Expr, Expr, Expr, Expr, Expr, Expr],
        "Flag" | "GModT" | "GModN" => &[Family, Int],
        _ => return None,
    })
}

enum Arg {
    Expr(SpaceExpr),
    Int(u64),
    Family(Family),
}

fn build(raw: Raw) -> Result<SpaceExpr, ParseError> {
    match raw {
        Raw::Int(n, pos) => Err(ParseError {
            kind: ParseErrorKind::ArgumentType,
            pos,
            message: format!("expected an expression, found integer `{n}`"),
        }),
        Raw::Strata(pairs, _) => {
            let mut strata = Vec::with_capacity(pairs.len());
            for (space, codim) in pairs {
                let space = build(space)?;
                let codim = match codim {
                    Raw::Int(n, _) => n,
                    other => {
                        return Err(ParseError {
                            kind: ParseErrorKind::ArgumentType,
                            pos: other.pos(),
                            message: "stratum codimension must be an integer".into(),
                        })
                    }
                };
                strata.push(Stratum { space, codim });
            }
            Ok(SpaceExpr::Stratified(strata))
        }
        Raw::Call { name, pos, args } => {
            let sig = signature(&name).ok_or_else(|| ParseError {
                kind: if Family::from_letter(&name).is_some() {
                    ParseErrorKind::ArgumentType
                } else {
                    ParseErrorKind::UnknownConstructor
                },
                pos,
                message: format!("unknown constructor `{name}`"),
            })?;
            let args = args.unwrap_or_default();
            if args.len() != sig.len() {
                return Err(ParseError {
                    kind: ParseErrorKind::Arity,
                    pos,
                    message: format!(
                        "`{name}` takes {} argument(s), found {}",
                        sig.len(),
                        args.len()
                    ),
                });
            }
            let mut typed = Vec::with_capacity(args.len());
            for (slot, arg) in sig.iter().zip(args) {
                let arg_pos = arg.pos();
                let type_err = |what: &str| ParseError {
                    kind: ParseErrorKind::ArgumentType,
                    pos: arg_pos,
                    message: format!("`{name}` expects {what} here"),
                };
                typed.push(match (slot, arg) {
                    (Slot::Int, Raw::Int(n, _)) => Arg::Int(n),
                    (Slot::Int, _) => return Err(type_err("an integer")),
                    (
                        Slot::Family,
                        Raw::Call {
                            name: letter,
                            args: None,
                            ..
                        },
                    ) => match Family::from_letter(&letter) {
                        Some(f) => Arg::Family(f),
                        None => return Err(type_err("a family letter A-G")),
                    },
                    (Slot::Family, _) => return Err(type_err("a family letter A-G")),
                    (Slot::Expr, Raw::Int(..)) => return Err(type_err("an expression")),
                    (Slot::Expr, raw) => Arg::Expr(build(raw)?),
                });
            }
            assemble(&name, pos, typed)
        }
    }
}

struct Args(std::collections::VecDeque<Arg>);

impl Args {
    fn expr(&mut self) -> Box<SpaceExpr> {
        match self.0.pop_front() {
            Some(Arg::Expr(e)) => Box::new(e),
            _ => unreachable!("signature checked"),
        }
    }

    fn int(&mut self) -> u64 {
        match self.0.pop_front() {
            Some(Arg::Int(n)) => n,
            _ => unreachable!("signature checked"),
        }
    }

    fn cartan(&mut self, pos: Position) -> Result<CartanType, ParseError> {
        let family = match self.0.pop_front() {
            Some(Arg::Family(f)) => f,
            _ => unreachable!("signature checked"),
        };
        let rank = u32::try_from(self.int()).map_err(|_| ParseError {
            kind: ParseErrorKind::ArgumentType,
            pos,
            message: "Cartan rank is out of range".into(),
        })?;
        Ok(CartanType::new(family, rank))
    }
}

fn assemble(name: &str, pos: Position, args: Vec<Arg>) -> Result<SpaceExpr, ParseError> {
    let mut a = Args(args.into());
    Ok(match name {
        "Point" => SpaceExpr::Point,
        "Gm" => SpaceExpr::Gm,
        "TateTwist" => SpaceExpr::TateTwist,
        "Affine" => SpaceExpr::Affine(a.int()),
        "Torus" => SpaceExpr::Torus(a.int()),
        "Projective" => SpaceExpr::Projective(a.int()),
        "Product" => SpaceExpr::Product(a.expr(), a.expr()),
        "Smash" => SpaceExpr::Smash(a.expr(), a.expr()),
        "DisjointUnion" => SpaceExpr::DisjointUnion(a.expr(), a.expr()),
        "PushoutCone" => SpaceExpr::PushoutCone {
            target: a.expr(),
            source: a.expr(),
        },
        "TorusFixed" => SpaceExpr::TorusFixed {
            space: a.expr(),
            fixed: a.expr(),
        },
        "ClosedOpenPair" => SpaceExpr::ClosedOpenPair {
            whole: a.expr(),
            open: a.expr(),
            closed: a.expr(),
            codim: a.int(),
        },
        "PointedQuotient" => SpaceExpr::PointedQuotient {
            whole: a.expr(),
            open: a.expr(),
            closed: a.expr(),
            codim: a.int(),
        },
        "ThomTrivial" => SpaceExpr::ThomTrivial {
            codim: a.int(),
            base: a.expr(),
        },
        "TorusSlice" => SpaceExpr::TorusSlice {
            corank: a.int(),
            slice: a.expr(),
        },
        "MayerVietoris" => SpaceExpr::MayerVietoris(Box::new(MvData {
            x1: *a.expr(),
            x2: *a.expr(),
            x12: *a.expr(),
            u1: *a.expr(),
            u2: *a.expr(),
            u12: *a.expr(),
        })),
        "Flag" => SpaceExpr::Flag(a.cartan(pos)?),
        "GModT" => SpaceExpr::GModT(a.cartan(pos)?),
        "GModN" => SpaceExpr::GModN(a.cartan(pos)?),
        _ => unreachable!("signature table and assembler disagree on `{name}`"),
    })
}

/// Parses one expression. Trailing input other than whitespace and comments
/// is an error.
pub fn parse(text: &str) -> Result<SpaceExpr, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
        depth: 0,
    };
    let raw = p.item()?;
    let (tok, pos) = p.next();
    if tok != Tok::Eof {
        return Err(syntax(pos, format!("expected end of input, found {tok}")));
    }
    build(raw)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atoms_and_constructors() {
        assert_eq!(parse("Gm").unwrap(), SpaceExpr::Gm);
        assert_eq!(
            parse("Stratified[(Affine(1),0),(Point,1)]").unwrap(),
            SpaceExpr::stratified([(SpaceExpr::Affine(1), 0), (SpaceExpr::Point, 1)])
        );
        assert_eq!(
            parse("GModN(A,1)").unwrap(),
            SpaceExpr::GModN(CartanType::new(Family::A, 1))
        );
        assert_eq!(
            parse("Stratified[]").unwrap(),
            SpaceExpr::Stratified(vec![])
        );
        assert_eq!(
            parse("  ThomTrivial( 2 ,\n Point )  # trailing\n").unwrap(),
            SpaceExpr::ThomTrivial {
                codim: 2,
                base: Box::new(SpaceExpr::Point)
            }
        );
    }

    #[test]
    fn negative_codimension_is_a_syntax_error() {
        let err = parse("ClosedOpenPair(Point, Point, Point, -1)").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Syntax);
        assert_eq!(
            err.pos,
            Position {
                line: 1,
                column: 37
            }
        );
    }

    #[test]
    fn error_kinds_and_positions() {
        let e = parse("Product(Gm)").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Arity);
        let e = parse("Sphere(2)").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownConstructor);
        let e = parse("Affine(Gm)").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::ArgumentType);
        let e = parse("Flag(H,2)").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::ArgumentType);
        let e = parse("Gm\n  Gm").unwrap_err();
        assert_eq!(e.pos, Position { line: 2, column: 3 });
        let e = parse("Product(Gm, Gm").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Syntax);
        let e = parse("Affine").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Arity);
        let e = parse("MayerVietoris(Point, Point, Point, Point, Point)").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Arity);
        assert!(parse("").is_err());
        assert!(parse("Affine(99999999999999999999999)").is_err());
        let deep = "Product(".repeat(10_000);
        assert_eq!(parse(&deep).unwrap_err().kind, ParseErrorKind::Syntax);
    }
}
