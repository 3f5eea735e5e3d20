use std::fmt;

use super::SpaceExpr;

impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceExpr::Point | SpaceExpr::Gm | SpaceExpr::TateTwist => {
                f.write_str(self.constructor())
            }
            SpaceExpr::Affine(n) | SpaceExpr::Torus(n) | SpaceExpr::Projective(n) => {
                write!(f, "{}({n})", self.constructor())
            }
            SpaceExpr::Product(a, b) | SpaceExpr::Smash(a, b) | SpaceExpr::DisjointUnion(a, b) => {
                write!(f, "{}({a}, {b})", self.constructor())
            }
            SpaceExpr::PushoutCone { target, source } => {
                write!(f, "PushoutCone({target}, {source})")
            }
            SpaceExpr::TorusFixed { space, fixed } => write!(f, "TorusFixed({space}, {fixed})"),
            SpaceExpr::Stratified(strata) => {
                f.write_str("Stratified[")?;
                for (i, s) in strata.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "({}, {})", s.space, s.codim)?;
                }
                f.write_str("]")
            }
            SpaceExpr::ClosedOpenPair {
                whole,
                open,
                closed,
                codim,
            }
            | SpaceExpr::PointedQuotient {
                whole,
                open,
                closed,
                codim,
            } => {
                write!(
                    f,
                    "{}({whole}, {open}, {closed}, {codim})",
                    self.constructor()
                )
            }
            SpaceExpr::ThomTrivial { codim, base } => write!(f, "ThomTrivial({codim}, {base})"),
            SpaceExpr::TorusSlice { corank, slice } => write!(f, "TorusSlice({corank}, {slice})"),
            SpaceExpr::MayerVietoris(mv) => write!(
                f,
                "MayerVietoris({}, {}, {}, {}, {}, {})",
                mv.x1, mv.x2, mv.x12, mv.u1, mv.u2, mv.u12
            ),
            SpaceExpr::Flag(ct) | SpaceExpr::GModT(ct) | SpaceExpr::GModN(ct) => {
                write!(f, "{}({ct})", self.constructor())
            }
        }
    }
}

/// Canonical text form; [`super::parse`] inverts it.
pub fn pretty_print(e: &SpaceExpr) -> String {
    e.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        assert_eq!(pretty_print(&SpaceExpr::Gm), "Gm");
        assert_eq!(
            pretty_print(&SpaceExpr::product(SpaceExpr::Gm, SpaceExpr::Gm)),
            "Product(Gm, Gm)"
        );
        let thom = SpaceExpr::ThomTrivial {
            codim: 2,
            base: Box::new(SpaceExpr::Point),
        };
        assert_eq!(pretty_print(&thom), "ThomTrivial(2, Point)");
        assert_eq!(
            pretty_print(&SpaceExpr::stratified([
                (SpaceExpr::Affine(1), 0),
                (SpaceExpr::Point, 1)
            ])),
            "Stratified[(Affine(1), 0), (Point, 1)]"
        );
        assert_eq!(
            pretty_print(&crate::parse("GModN( A , 3 )").unwrap()),
            "GModN(A,3)"
        );
    }
}
