use crate::dsl::SpaceExpr;
use crate::gw::{FieldModel, GwValue};

/// The rewrite rules of the evaluator. Each carries the statement that
/// justifies it, which is what derivations cite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    AtomAffine,
    AtomGmTorus,
    Tate,
    ProductSmash,
    Disjoint,
    ClosedOpen,
    Stratified,
    MayerVietoris,
    PushoutCone,
    TorusSlice,
    TorusFixed,
    Projective,
    BruhatFlag,
    AffineBundle,
    NormalizerFixedPoint,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::AtomAffine => "rule_atom_affine",
            Rule::AtomGmTorus => "rule_atom_gm_torus",
            Rule::Tate => "rule_tate",
            Rule::ProductSmash => "rule_product_smash",
            Rule::Disjoint => "rule_disjoint",
            Rule::ClosedOpen => "rule_closed_open",
            Rule::Stratified => "rule_stratified",
            Rule::MayerVietoris => "rule_mv",
            Rule::PushoutCone => "rule_pushout_cone",
            Rule::TorusSlice => "rule_torus_slice",
            Rule::TorusFixed => "rule_torus_fixed",
            Rule::Projective => "rule_projective",
            Rule::BruhatFlag => "rule_bruhat_flag",
            Rule::AffineBundle => "rule_affine_bundle",
            Rule::NormalizerFixedPoint => "rule_normalizer_fixed_point",
        }
    }

    pub fn citation(self) -> &'static str {
        match self {
            Rule::AtomAffine => "A1-contractibility: chi(A^n) = chi(Spec k) = 1",
            Rule::AtomGmTorus => "split torus: chi(G_m) = 1 - <-1>, chi(T) = (1 - <-1>)^n",
            Rule::Tate => "Tate sphere: chi(T) = <-1>",
            Rule::ProductSmash => "multiplicativity of pre-transfer and trace: chi(X x Y) = chi(X) chi(Y)",
            Rule::Disjoint => "pushout additivity with empty intersection: chi(X u Y) = chi(X) + chi(Y)",
            Rule::ClosedOpen => "Thom-space additivity: chi(X/U) = chi(Th(N)) = <-1>^c chi(Z)",
            Rule::Stratified => "stratified additivity: chi(X) = sum <-1>^c_a chi(S_a)",
            Rule::MayerVietoris => "Mayer-Vietoris: chi(X/U) = chi(X1/U1) + chi(X2/U2) - chi(X12/U12)",
            Rule::PushoutCone => "cofiber additivity: chi(cone) = chi(F1) - chi(F3)",
            Rule::TorusSlice => "torus slice decomposition: chi((T/G) x Y) = (1 - <-1>)^r chi(Y)",
            Rule::TorusFixed => {
                "torus localization: chi(X) = chi(X^T) mod (1 - <-1>), with equality when sqrt(-1) is in k"
            }
            Rule::Projective => "cell stratification of P^n by affine spaces",
            Rule::BruhatFlag => "Bruhat stratification of G/B: cells A^l(w), codimension N - l(w)",
            Rule::AffineBundle => "G/T -> G/B is an affine-space bundle with fibre B/T = A^N",
            Rule::NormalizerFixedPoint => {
                "torus localization on G/N(T): one fixed point eN(T), so chi = 1 (unit of rank 1)"
            }
        }
    }
}

/// Value of a leaf expression, or `None` if `e` is not an atom.
pub fn atom_value(e: &SpaceExpr, m: &FieldModel) -> Option<GwValue> {
    let v = match e {
        SpaceExpr::Point | SpaceExpr::Affine(_) => m.one(),
        SpaceExpr::Gm => m.hyperbolic_difference(),
        SpaceExpr::Torus(n) => m.pow(&m.hyperbolic_difference(), *n),
        SpaceExpr::TateTwist => m.twist(),
        _ => return None,
    };
    Some(GwValue::exact(v))
}

pub fn atom_rule(e: &SpaceExpr) -> Option<Rule> {
    match e {
        SpaceExpr::Point | SpaceExpr::Affine(_) => Some(Rule::AtomAffine),
        SpaceExpr::Gm | SpaceExpr::Torus(_) => Some(Rule::AtomGmTorus),
        SpaceExpr::TateTwist => Some(Rule::Tate),
        _ => None,
    }
}
