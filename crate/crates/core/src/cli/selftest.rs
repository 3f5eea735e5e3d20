use super::{paint, CliOutput};
use crate::dsl::{CartanType, Family, SpaceExpr};
use crate::engine::eval_chi;
use crate::gw::{FieldModel, GwValue};
use crate::oracles::{
    classify_form_fp, gw_fp_relation_check, weyl_order_closed_form, DiagonalForm,
};
use crate::roots::{chi_g_mod_normalizer, weyl_data};

/// One line of the self-test report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub description: String,
    pub citation: &'static str,
    pub passed: bool,
}

const HEADLINE_TYPES: [(Family, u32); 10] = [
    (Family::A, 1),
    (Family::A, 2),
    (Family::A, 3),
    (Family::A, 4),
    (Family::B, 2),
    (Family::B, 3),
    (Family::C, 3),
    (Family::D, 4),
    (Family::G, 2),
    (Family::F, 4),
];

fn headline(m: &FieldModel) -> bool {
    HEADLINE_TYPES.iter().all(|&(f, r)| {
        chi_g_mod_normalizer(CartanType::new(f, r), m).is_ok_and(|v| v == GwValue::exact(m.one()))
    })
}

/// Normal forms in `F_p` agree with the isometry classification of
/// `⟨1⟩^a ⊕ ⟨-1⟩^b` for all `a + b ≤ 4`.
fn fp_sweep(p: u64) -> bool {
    let Ok(m) = FieldModel::finite(p) else {
        return false;
    };
    let shapes: Vec<(usize, usize)> = (0..=4)
        .flat_map(|r| (0..=r).map(move |b| (r - b, b)))
        .collect();
    shapes.iter().all(|&(a1, b1)| {
        shapes.iter().all(|&(a2, b2)| {
            let gw_equal = m.int(a1 as i64, b1 as i64) == m.int(a2 as i64, b2 as i64);
            let oracle_equal = match (
                DiagonalForm::signs(p, a1, b1),
                DiagonalForm::signs(p, a2, b2),
            ) {
                (Ok(f1), Ok(f2)) => classify_form_fp(&f1) == classify_form_fp(&f2),
                _ => return false,
            };
            gw_equal == oracle_equal
        })
    })
}

fn eval_is(text: &str, m: &FieldModel, expected: &GwValue) -> bool {
    crate::dsl::parse(text)
        .ok()
        .and_then(|e| eval_chi(&e, m).ok())
        .is_some_and(|(v, _)| &v == expected)
}

/// The checks run by `chi selftest`, in report order.
pub fn selftest_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    let mut push = |description: String, citation: &'static str, passed: bool| {
        checks.push(Check {
            description,
            citation,
            passed,
        })
    };
    let f5 = FieldModel::finite(5).expect("5 is an odd prime");
    let f13 = FieldModel::finite(13).expect("13 is an odd prime");
    push(
        "chi(G/N(T)) = 1 for A1..A4,B2,B3,C3,D4,G2,F4".into(),
        "torus localization, sqrt(-1) in k",
        headline(&FieldModel::SQRT_MINUS_ONE),
    );
    push(
        "chi(G/N(T)) = 1 in GW(F_5)[1/5] and GW(F_13)[1/13]".into(),
        "torus localization, char p > 0",
        headline(&f5) && headline(&f13),
    );
    for m in [FieldModel::GENERIC, FieldModel::REAL_CLOSED] {
        let ok = HEADLINE_TYPES.iter().all(|&(f, r)| {
            chi_g_mod_normalizer(CartanType::new(f, r), &m)
                .is_ok_and(|v| v.representative().rank(&m).to_i64() == Some(1) && v.unit_known())
        });
        push(
            format!("chi(G/N(T)) has rank 1 and is a unit ({m})"),
            "rank-one unit criterion",
            ok,
        );
    }
    for p in [3, 5, 7, 11, 13] {
        let relation = if p % 4 == 1 {
            "<-1> = <1>"
        } else {
            "2(1-<-1>) = 0"
        };
        push(
            format!("GW(F_{p}) relation {relation}"),
            "classification of forms over F_p",
            gw_fp_relation_check(p).unwrap_or(false) && fp_sweep(p),
        );
    }
    let g = FieldModel::GENERIC;
    let s = FieldModel::SQRT_MINUS_ONE;
    let torus_ok = (1..=5).all(|n| {
        eval_is(
            &format!("Torus({n})"),
            &g,
            &GwValue::exact(g.pow(&g.hyperbolic_difference(), n)),
        ) && eval_is(&format!("Torus({n})"), &s, &GwValue::exact(s.zero()))
    }) && eval_is("Gm", &g, &GwValue::exact(g.int(1, -1)));
    push(
        "chi(G_m) = 1 - <-1>, chi(T^n) = (1 - <-1>)^n".into(),
        "split torus values",
        torus_ok,
    );
    let p1_ok = [FieldModel::GENERIC, s, FieldModel::REAL_CLOSED, f5]
        .iter()
        .all(|m| {
            match (
                eval_chi(&SpaceExpr::Projective(1), m),
                eval_chi(&SpaceExpr::Flag(CartanType::new(Family::A, 1)), m),
            ) {
                (Ok((a, _)), Ok((b, _))) => a == b,
                _ => false,
            }
        });
    push(
        "chi(P^1) = chi(Flag(A,1)) in all models".into(),
        "cell vs Bruhat stratification",
        p1_ok,
    );
    for ct in CartanType::supported() {
        let closed = weyl_order_closed_form(ct).ok();
        let enumerated = weyl_data(ct).ok().map(|e| e.1.order);
        let label = format!("{}{}", ct.family.letter(), ct.rank);
        push(
            format!(
                "Weyl order {label} = {}",
                closed.map_or("?".to_string(), |c| c.to_string())
            ),
            "BFS vs product of degrees",
            closed.is_some() && closed == enumerated,
        );
    }
    checks
}

/// Runs [`selftest_checks`] and renders one line per check.
pub fn run_selftest(color: bool) -> CliOutput {
    let checks = selftest_checks();
    let mut stdout = String::new();
    for c in &checks {
        let verdict = if c.passed {
            paint("PASS", "32", color)
        } else {
            paint("FAIL", "31", color)
        };
        stdout.push_str(&format!("{} [{}] {verdict}\n", c.description, c.citation));
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    stdout.push_str(&format!("{} checks, {failed} failed\n", checks.len()));
    CliOutput {
        code: if failed == 0 { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    }
}
