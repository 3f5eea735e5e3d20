mod common;

use common::*;
use motivic_chi::engine::Rule;
use motivic_chi::gw::{ElementJson, ValueJson};
use motivic_chi::oracles::{classify_form_fp, DiagonalForm};
use motivic_chi::{
    eval_chi, parse, pretty_print, replay, validate, CartanType, Family, FieldModel, SpaceExpr,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ring_axioms((m, x, y, z) in model_and_triple()) {
        prop_assert_eq!(m.add(&x, &y), m.add(&y, &x));
        prop_assert_eq!(m.mul(&x, &y), m.mul(&y, &x));
        prop_assert_eq!(m.add(&m.add(&x, &y), &z), m.add(&x, &m.add(&y, &z)));
        prop_assert_eq!(m.mul(&m.mul(&x, &y), &z), m.mul(&x, &m.mul(&y, &z)));
        prop_assert_eq!(m.mul(&x, &m.add(&y, &z)), m.add(&m.mul(&x, &y), &m.mul(&x, &z)));
        prop_assert_eq!(m.add(&x, &m.zero()), x.clone());
        prop_assert_eq!(m.mul(&x, &m.one()), x.clone());
        prop_assert!(m.add(&x, &m.neg(&x)).is_zero());
    }

    #[test]
    fn rank_is_a_ring_map((m, x, y, _z) in model_and_triple()) {
        let c = m.coeffs();
        prop_assert_eq!(x.rank(&m), x.reduce_mod_fundamental(&m));
        prop_assert_eq!(m.add(&x, &y).rank(&m), c.add(&x.rank(&m), &y.rank(&m)));
        prop_assert_eq!(m.mul(&x, &y).rank(&m), c.mul(&x.rank(&m), &y.rank(&m)));
        let r = m.mul(&x, &y).reduce_mod_fundamental(&m);
        prop_assert_eq!(r, c.mul(&x.reduce_mod_fundamental(&m), &y.reduce_mod_fundamental(&m)));
    }

    #[test]
    fn units_have_inverses((m, x, _y, _z) in model_and_triple()) {
        if m.is_unit(&x) {
            let inv = m.inverse(&x).expect("unit without inverse");
            prop_assert_eq!(m.mul(&x, &inv), m.one());
        } else {
            prop_assert!(m.inverse(&x).is_none());
        }
    }

    #[test]
    fn sqrt_model_factors_through_generic(a in -1000i64..1000, b in -1000i64..1000, c in -50i64..50, d in -50i64..50) {
        let g = FieldModel::GENERIC;
        let s = FieldModel::SQRT_MINUS_ONE;
        let impose = |x: &motivic_chi::GwElement| s.make(x.unit_coeff(), x.twist_coeff()).unwrap();
        prop_assert_eq!(impose(&g.int(a, b)), s.int(a, b));
        let prod = g.mul(&g.int(a, b), &g.int(c, d));
        prop_assert_eq!(impose(&prod), s.mul(&s.int(a, b), &s.int(c, d)));
    }

    #[test]
    fn element_text_and_json_round_trip((m, x, _y, _z) in model_and_triple()) {
        prop_assert_eq!(m.parse_element(&m.render(&x)).unwrap(), x.clone());
        let json = serde_json::to_string(&ElementJson::new(&x, &m)).unwrap();
        let back: ElementJson = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back.decode().unwrap(), (m, x));
    }
}

#[test]
fn twist_squares_to_one() {
    for m in models() {
        assert_eq!(m.mul(&m.twist(), &m.twist()), m.one(), "{m}");
    }
}

#[test]
fn normal_forms_match_form_oracle() {
    for p in [3, 5, 7, 11, 13] {
        let m = FieldModel::finite(p).unwrap();
        let shapes: Vec<(usize, usize)> = (0..=4usize)
            .flat_map(|r| (0..=r).map(move |b| (r - b, b)))
            .collect();
        for &(a1, b1) in &shapes {
            for &(a2, b2) in &shapes {
                let gw = m.int(a1 as i64, b1 as i64) == m.int(a2 as i64, b2 as i64);
                let f1 = DiagonalForm::signs(p, a1, b1).unwrap();
                let f2 = DiagonalForm::signs(p, a2, b2).unwrap();
                let oracle = classify_form_fp(&f1) == classify_form_fp(&f2);
                assert_eq!(gw, oracle, "p={p} {a1}<1>+{b1}<-1> vs {a2}<1>+{b2}<-1>");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(250))]

    #[test]
    fn parse_print_round_trip(e in any_expr()) {
        prop_assert!(e.depth() <= 6);
        let text = pretty_print(&e);
        prop_assert_eq!(parse(&text).unwrap(), e);
    }

    #[test]
    fn parser_is_total(s in "[A-Za-z(),\\[\\] 0-9#\n-]{0,60}") {
        if let Err(err) = parse(&s) {
            prop_assert!(err.pos.line >= 1 && err.pos.column >= 1);
        }
    }

    #[test]
    fn parser_survives_mutations(e in any_expr(), cut in 0usize..200, junk in "[(),\\[\\]A-Za-z0-9]{0,3}") {
        let text = pretty_print(&e);
        let cut = cut.min(text.len());
        let (head, tail) = text.split_at(cut);
        let _ = parse(&format!("{head}{junk}{tail}"));
    }

    #[test]
    fn evaluation_is_deterministic_and_replays(e in any_expr(), m in model()) {
        prop_assert!(validate(&e).is_empty());
        let (v1, d1) = eval_chi(&e, &m).unwrap();
        let (v2, d2) = eval_chi(&e, &m).unwrap();
        prop_assert_eq!(&v1, &v2);
        prop_assert_eq!(d1.to_json(&m), d2.to_json(&m));
        prop_assert!(replay(&d1, &m).is_ok());
        let json = serde_json::to_string(&ValueJson::new(&v1, &m)).unwrap();
        let back: ValueJson = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back.decode().unwrap(), (m, v1));
    }

    #[test]
    fn stratified_matches_iterated_closed_open(s in strata(unpointed()), m in model()) {
        let direct = eval_chi(&SpaceExpr::stratified(s.clone()), &m).unwrap().0;
        let iterated = eval_chi(&iterate_closed_open(&s), &m).unwrap().0;
        prop_assert_eq!(direct.representative(), iterated.representative());
        prop_assert_eq!(direct.exactness(), iterated.exactness());
    }

    #[test]
    fn mayer_vietoris_matches_direct((x, u) in mv_pieces(), m in model()) {
        let (mv, direct) = mv_pair(x, u);
        let a = eval_chi(&mv, &m).unwrap().0;
        let b = eval_chi(&direct, &m).unwrap().0;
        prop_assert_eq!(a.representative(), b.representative());
        prop_assert_eq!(a.exactness(), b.exactness());
    }

    #[test]
    fn products_multiply(a in unpointed(), b in unpointed(), m in model()) {
        let va = eval_chi(&a, &m).unwrap().0;
        let vb = eval_chi(&b, &m).unwrap().0;
        let vp = eval_chi(&SpaceExpr::product(a, b), &m).unwrap().0;
        prop_assert_eq!(vp.representative(), &m.mul(va.representative(), vb.representative()));
        prop_assert_eq!(vp.is_exact(), va.is_exact() && vb.is_exact());
    }

    #[test]
    fn smash_multiplies(a in pointed(), b in pointed(), m in model()) {
        let va = eval_chi(&a, &m).unwrap().0;
        let vb = eval_chi(&b, &m).unwrap().0;
        let vs = eval_chi(&SpaceExpr::smash(a, b), &m).unwrap().0;
        prop_assert_eq!(vs.representative(), &m.mul(va.representative(), vb.representative()));
    }

    /// A space split into its fixed locus and free torus orbits: the
    /// localized value has the rank of the full stratification.
    #[test]
    fn localization_preserves_rank(
        fixed in shallow(),
        orbits in proptest::collection::vec((1u64..3, shallow()), 0..3),
        m in model(),
    ) {
        let mut pieces = vec![(fixed.clone(), 0)];
        pieces.extend(orbits.into_iter().map(|(corank, s)| (SpaceExpr::TorusSlice { corank, slice: Box::new(s) }, 0)));
        let whole = SpaceExpr::stratified(pieces);
        let full = eval_chi(&whole, &m).unwrap().0;
        let local = eval_chi(&SpaceExpr::torus_fixed(whole, fixed), &m).unwrap().0;
        prop_assert_eq!(full.representative().rank(&m), local.representative().rank(&m));
    }
}

#[test]
fn flag_localizes_to_weyl_many_points() {
    for ct in CartanType::supported()
        .into_iter()
        .filter(|ct| ct.rank <= 3)
    {
        let order = motivic_chi::roots::weyl_data(ct).unwrap().1.order as usize;
        for m in models() {
            let flag = eval_chi(&SpaceExpr::Flag(ct), &m).unwrap().0;
            let local = eval_chi(
                &SpaceExpr::torus_fixed(SpaceExpr::Flag(ct), SpaceExpr::points(order)),
                &m,
            )
            .unwrap()
            .0;
            assert_eq!(
                flag.representative().rank(&m),
                local.representative().rank(&m),
                "{ct} {m}"
            );
        }
    }
}

#[test]
fn projective_line_is_the_a1_flag_variety() {
    for m in models() {
        let p1 = eval_chi(&SpaceExpr::Projective(1), &m).unwrap().0;
        let flag = eval_chi(&SpaceExpr::Flag(CartanType::new(Family::A, 1)), &m)
            .unwrap()
            .0;
        assert_eq!(p1, flag, "{m}");
        assert_eq!(p1.representative(), &m.int(1, 1));
    }
}

#[test]
fn torus_atom_matches_iterated_product() {
    for m in models() {
        for n in 1..=5 {
            let (atom, d) = eval_chi(&SpaceExpr::Torus(n), &m).unwrap();
            assert_eq!(d.rule, Rule::AtomGmTorus);
            let smaller = if n == 1 {
                SpaceExpr::Point
            } else {
                SpaceExpr::Torus(n - 1)
            };
            let product = eval_chi(&SpaceExpr::product(SpaceExpr::Gm, smaller), &m)
                .unwrap()
                .0;
            assert_eq!(atom, product, "Torus({n}) in {m}");
        }
    }
}

#[test]
fn pointedness_table() {
    let pointed = [
        "TateTwist",
        "Smash",
        "PointedQuotient",
        "ThomTrivial",
        "MayerVietoris",
        "PushoutCone",
    ];
    let samples = [
        "Point",
        "Affine(2)",
        "Gm",
        "Torus(3)",
        "TateTwist",
        "Projective(2)",
        "Product(Gm, Point)",
        "Smash(TateTwist, TateTwist)",
        "DisjointUnion(Gm, Point)",
        "Stratified[(Point, 0)]",
        "ClosedOpenPair(Affine(1), Gm, Point, 1)",
        "PointedQuotient(Affine(1), Gm, Point, 1)",
        "ThomTrivial(2, Point)",
        "MayerVietoris(Point, Point, Point, Point, Point, Point)",
        "PushoutCone(Point, Gm)",
        "TorusFixed(Projective(1), Stratified[(Point, 0), (Point, 0)])",
        "TorusSlice(1, Point)",
        "Flag(A,2)",
        "GModT(A,2)",
        "GModN(A,2)",
    ];
    for s in samples {
        let e = parse(s).unwrap();
        assert_eq!(e.is_pointed(), pointed.contains(&e.constructor()), "{s}");
        assert_eq!(e.is_pointed(), parse(s).unwrap().is_pointed());
    }
}
