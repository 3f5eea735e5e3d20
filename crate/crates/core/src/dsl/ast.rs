use super::CartanType;

/// A piece `S_α` of a stratification together with its codimension `c_α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Stratum {
    pub space: SpaceExpr,
    pub codim: u64,
}

/// Quotient data `X1/U1, X2/U2, X12/U12` for a Mayer-Vietoris square.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MvData {
    pub x1: SpaceExpr,
    pub x2: SpaceExpr,
    pub x12: SpaceExpr,
    pub u1: SpaceExpr,
    pub u2: SpaceExpr,
    pub u12: SpaceExpr,
}

/// Expression tree describing a motivic space and the decomposition used to
/// evaluate it. Geometric assertions (closedness, fixed loci, normal bundle
/// triviality) are taken on trust.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SpaceExpr {
    Point,
    Affine(u64),
    Gm,
    /// Split torus of the given rank.
    Torus(u64),
    /// `T = P¹` pointed at infinity.
    TateTwist,
    Projective(u64),
    Product(Box<SpaceExpr>, Box<SpaceExpr>),
    Smash(Box<SpaceExpr>, Box<SpaceExpr>),
    DisjointUnion(Box<SpaceExpr>, Box<SpaceExpr>),
    /// An empty list describes the empty space.
    Stratified(Vec<Stratum>),
    /// `closed ⊂ whole` with complement `open` and trivial normal bundle of
    /// rank `codim`.
    ClosedOpenPair {
        whole: Box<SpaceExpr>,
        open: Box<SpaceExpr>,
        closed: Box<SpaceExpr>,
        codim: u64,
    },
    /// The pointed quotient `whole/open` under the same assertion.
    PointedQuotient {
        whole: Box<SpaceExpr>,
        open: Box<SpaceExpr>,
        closed: Box<SpaceExpr>,
        codim: u64,
    },
    /// `T^codim ∧ base_+`.
    ThomTrivial {
        codim: u64,
        base: Box<SpaceExpr>,
    },
    MayerVietoris(Box<MvData>),
    /// Cone of `source_+ → target_+`.
    PushoutCone {
        target: Box<SpaceExpr>,
        source: Box<SpaceExpr>,
    },
    /// `fixed` is the fixed locus of a split torus acting on `space`.
    TorusFixed {
        space: Box<SpaceExpr>,
        fixed: Box<SpaceExpr>,
    },
    /// `(T/Γ) × slice` with `T/Γ` a split torus of rank `corank`.
    TorusSlice {
        corank: u64,
        slice: Box<SpaceExpr>,
    },
    Flag(CartanType),
    GModT(CartanType),
    GModN(CartanType),
}

impl SpaceExpr {
    /// Constructor name as written in the expression language.
    pub fn constructor(&self) -> &'static str {
        match self {
            SpaceExpr::Point => "Point",
            SpaceExpr::Affine(_) => "Affine",
            SpaceExpr::Gm => "Gm",
            SpaceExpr::Torus(_) => "Torus",
            SpaceExpr::TateTwist => "TateTwist",
            SpaceExpr::Projective(_) => "Projective",
            SpaceExpr::Product(..) => "Product",
            SpaceExpr::Smash(..) => "Smash",
            SpaceExpr::DisjointUnion(..) => "DisjointUnion",
            SpaceExpr::Stratified(_) => "Stratified",
            SpaceExpr::ClosedOpenPair { .. } => "ClosedOpenPair",
            SpaceExpr::PointedQuotient { .. } => "PointedQuotient",
            SpaceExpr::ThomTrivial { .. } => "ThomTrivial",
            SpaceExpr::MayerVietoris(_) => "MayerVietoris",
            SpaceExpr::PushoutCone { .. } => "PushoutCone",
            SpaceExpr::TorusFixed { .. } => "TorusFixed",
            SpaceExpr::TorusSlice { .. } => "TorusSlice",
            SpaceExpr::Flag(_) => "Flag",
            SpaceExpr::GModT(_) => "GModT",
            SpaceExpr::GModN(_) => "GModN",
        }
    }

    /// Pointedness is fixed by the outermost constructor.
    pub fn is_pointed(&self) -> bool {
        matches!(
            self,
            SpaceExpr::TateTwist
                | SpaceExpr::Smash(..)
                | SpaceExpr::PointedQuotient { .. }
                | SpaceExpr::ThomTrivial { .. }
                | SpaceExpr::MayerVietoris(_)
                | SpaceExpr::PushoutCone { .. }
        )
    }

    /// Direct subexpressions, left to right.
    pub fn children(&self) -> Vec<&SpaceExpr> {
        match self {
            SpaceExpr::Point
            | SpaceExpr::Affine(_)
            | SpaceExpr::Gm
            | SpaceExpr::Torus(_)
            | SpaceExpr::TateTwist
            | SpaceExpr::Projective(_)
            | SpaceExpr::Flag(_)
            | SpaceExpr::GModT(_)
            | SpaceExpr::GModN(_) => vec![],
            SpaceExpr::Product(a, b) | SpaceExpr::Smash(a, b) | SpaceExpr::DisjointUnion(a, b) => {
                vec![a, b]
            }
            SpaceExpr::Stratified(strata) => strata.iter().map(|s| &s.space).collect(),
            SpaceExpr::ClosedOpenPair {
                whole,
                open,
                closed,
                ..
            }
            | SpaceExpr::PointedQuotient {
                whole,
                open,
                closed,
                ..
            } => vec![whole, open, closed],
            SpaceExpr::ThomTrivial { base, .. } => vec![base],
            SpaceExpr::MayerVietoris(mv) => vec![&mv.x1, &mv.x2, &mv.x12, &mv.u1, &mv.u2, &mv.u12],
            SpaceExpr::PushoutCone { target, source } => vec![target, source],
            SpaceExpr::TorusFixed { space, fixed } => vec![space, fixed],
            SpaceExpr::TorusSlice { slice, .. } => vec![slice],
        }
    }

    pub fn depth(&self) -> usize {
        1 + self
            .children()
            .into_iter()
            .map(SpaceExpr::depth)
            .max()
            .unwrap_or(0)
    }

    pub fn product(a: SpaceExpr, b: SpaceExpr) -> Self {
        SpaceExpr::Product(Box::new(a), Box::new(b))
    }

    pub fn smash(a: SpaceExpr, b: SpaceExpr) -> Self {
        SpaceExpr::Smash(Box::new(a), Box::new(b))
    }

    pub fn disjoint(a: SpaceExpr, b: SpaceExpr) -> Self {
        SpaceExpr::DisjointUnion(Box::new(a), Box::new(b))
    }

    pub fn stratified(strata: impl IntoIterator<Item = (SpaceExpr, u64)>) -> Self {
        SpaceExpr::Stratified(
            strata
                .into_iter()
                .map(|(space, codim)| Stratum { space, codim })
                .collect(),
        )
    }

    pub fn closed_open(whole: SpaceExpr, open: SpaceExpr, closed: SpaceExpr, codim: u64) -> Self {
        SpaceExpr::ClosedOpenPair {
            whole: Box::new(whole),
            open: Box::new(open),
            closed: Box::new(closed),
            codim,
        }
    }

    pub fn pushout_cone(target: SpaceExpr, source: SpaceExpr) -> Self {
        SpaceExpr::PushoutCone {
            target: Box::new(target),
            source: Box::new(source),
        }
    }

    pub fn torus_fixed(space: SpaceExpr, fixed: SpaceExpr) -> Self {
        SpaceExpr::TorusFixed {
            space: Box::new(space),
            fixed: Box::new(fixed),
        }
    }

    /// `count` disjoint copies of `Point`, written as a stratification with
    /// every piece in codimension 0.
    pub fn points(count: usize) -> Self {
        SpaceExpr::stratified(std::iter::repeat_n((SpaceExpr::Point, 0), count))
    }
}
