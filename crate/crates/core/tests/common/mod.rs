//! Generators shared by the integration tests and the acceptance runner.
#![allow(dead_code)]

use motivic_chi::dsl::MvData;
use motivic_chi::{CartanType, Coefficient, Family, FieldModel, GwElement, SpaceExpr};
use proptest::prelude::*;

pub fn models() -> Vec<FieldModel> {
    let mut out = vec![
        FieldModel::GENERIC,
        FieldModel::SQRT_MINUS_ONE,
        FieldModel::REAL_CLOSED,
    ];
    for p in [3, 5, 7, 13] {
        out.push(FieldModel::finite(p).unwrap());
    }
    out
}

pub fn model() -> impl Strategy<Value = FieldModel> {
    proptest::sample::select(models())
}

fn coefficient(m: FieldModel) -> impl Strategy<Value = Coefficient> {
    let max_exp: u32 = if m.char_exponent() == 1 { 0 } else { 3 };
    (-40i64..=40, 0..=max_exp).prop_map(move |(n, e)| m.coeffs().make(n, e).unwrap())
}

pub fn element(m: FieldModel) -> impl Strategy<Value = GwElement> {
    (coefficient(m), coefficient(m)).prop_map(move |(a, b)| m.make(&a, &b).unwrap())
}

/// A model with three elements of it.
pub fn model_and_triple() -> impl Strategy<Value = (FieldModel, GwElement, GwElement, GwElement)> {
    model().prop_flat_map(|m| (Just(m), element(m), element(m), element(m)))
}

pub fn small_cartan() -> impl Strategy<Value = CartanType> {
    proptest::sample::select(vec![
        CartanType::new(Family::A, 1),
        CartanType::new(Family::A, 2),
        CartanType::new(Family::B, 2),
        CartanType::new(Family::G, 2),
    ])
}

fn leaf() -> impl Strategy<Value = SpaceExpr> {
    prop_oneof![
        4 => Just(SpaceExpr::Point),
        3 => (0u64..4).prop_map(SpaceExpr::Affine),
        3 => Just(SpaceExpr::Gm),
        2 => (1u64..4).prop_map(SpaceExpr::Torus),
        2 => (0u64..4).prop_map(SpaceExpr::Projective),
        1 => small_cartan().prop_map(SpaceExpr::Flag),
        1 => small_cartan().prop_map(SpaceExpr::GModT),
        1 => small_cartan().prop_map(SpaceExpr::GModN),
    ]
}

/// Unpointed expressions of depth at most 6.
pub fn unpointed() -> impl Strategy<Value = SpaceExpr> {
    leaf().prop_recursive(5, 48, 4, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| SpaceExpr::product(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| SpaceExpr::disjoint(a, b)),
            strata(inner.clone()).prop_map(SpaceExpr::stratified),
            (inner.clone(), inner.clone(), inner.clone(), 0u64..4)
                .prop_map(|(w, o, c, k)| SpaceExpr::closed_open(w, o, c, k)),
            (inner.clone(), inner.clone()).prop_map(|(s, f)| SpaceExpr::torus_fixed(s, f)),
            (0u64..3, inner).prop_map(|(corank, s)| SpaceExpr::TorusSlice {
                corank,
                slice: Box::new(s)
            }),
        ]
    })
}

/// Smaller unpointed expressions for properties that combine several.
pub fn shallow() -> impl Strategy<Value = SpaceExpr> {
    leaf().prop_recursive(2, 8, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| SpaceExpr::product(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| SpaceExpr::disjoint(a, b)),
            strata(inner).prop_map(SpaceExpr::stratified),
        ]
    })
}

pub fn strata(
    piece: impl Strategy<Value = SpaceExpr>,
) -> impl Strategy<Value = Vec<(SpaceExpr, u64)>> {
    proptest::collection::vec((piece, 0u64..4), 0..4)
}

fn pointed_leaf() -> impl Strategy<Value = SpaceExpr> {
    let u = shallow;
    prop_oneof![
        2 => Just(SpaceExpr::TateTwist),
        2 => (0u64..4, u()).prop_map(|(codim, b)| SpaceExpr::ThomTrivial {
            codim,
            base: Box::new(b)
        }),
        2 => (u(), u()).prop_map(|(t, s)| SpaceExpr::pushout_cone(t, s)),
        1 => (u(), u(), u(), 0u64..4).prop_map(|(w, o, c, k)| SpaceExpr::PointedQuotient {
            whole: Box::new(w),
            open: Box::new(o),
            closed: Box::new(c),
            codim: k
        }),
        1 => (u(), u(), u(), u(), u(), u()).prop_map(|(x1, x2, x12, u1, u2, u12)| {
            SpaceExpr::MayerVietoris(Box::new(MvData { x1, x2, x12, u1, u2, u12 }))
        }),
    ]
}

/// Pointed expressions: a pointed constructor, possibly smashed together.
pub fn pointed() -> impl Strategy<Value = SpaceExpr> {
    pointed_leaf().prop_recursive(2, 8, 2, |inner| {
        (inner.clone(), inner).prop_map(|(a, b)| SpaceExpr::smash(a, b))
    })
}

/// Any well-formed expression.
pub fn any_expr() -> impl Strategy<Value = SpaceExpr> {
    prop_oneof![3 => unpointed(), 1 => pointed()]
}

/// `Stratified[s1, .., sn]` rebuilt as nested closed/open pairs, starting
/// from the empty space and adding the last stratum as the closed piece.
pub fn iterate_closed_open(strata: &[(SpaceExpr, u64)]) -> SpaceExpr {
    let mut acc = SpaceExpr::stratified([]);
    for (i, (piece, codim)) in strata.iter().enumerate() {
        let whole = SpaceExpr::stratified(strata[..=i].iter().cloned());
        acc = SpaceExpr::closed_open(whole, acc, piece.clone(), *codim);
    }
    acc
}

/// Three strata with their codimensions.
pub type Pieces = [(SpaceExpr, u64); 3];

/// A cover `X = X1 ∪ X2` assembled from three pieces `A ⊔ B ⊔ C` with
/// `X1 = A ⊔ C`, `X2 = B ⊔ C`, and likewise for `U`. Returns the
/// Mayer-Vietoris expression and the direct quotient `X/U`.
pub fn mv_pair(x: Pieces, u: Pieces) -> (SpaceExpr, SpaceExpr) {
    let pick = |s: &Pieces, idx: &[usize]| SpaceExpr::stratified(idx.iter().map(|&i| s[i].clone()));
    let mv = SpaceExpr::MayerVietoris(Box::new(MvData {
        x1: pick(&x, &[0, 2]),
        x2: pick(&x, &[1, 2]),
        x12: pick(&x, &[2]),
        u1: pick(&u, &[0, 2]),
        u2: pick(&u, &[1, 2]),
        u12: pick(&u, &[2]),
    }));
    let direct = SpaceExpr::pushout_cone(pick(&x, &[0, 1, 2]), pick(&u, &[0, 1, 2]));
    (mv, direct)
}

pub fn mv_pieces() -> impl Strategy<Value = (Pieces, Pieces)> {
    let piece = || (shallow(), 0u64..3);
    ([piece(), piece(), piece()], [piece(), piece(), piece()])
}
