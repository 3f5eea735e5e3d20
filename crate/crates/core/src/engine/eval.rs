use super::combine::{Combine, Localization, Term};
use super::rules::{atom_rule, atom_value, Rule};
use super::{Derivation, EvalError};
use crate::dsl::{parse, validate, SpaceExpr};
use crate::gw::{FieldModel, GwValue};
use crate::roots;

/// Evaluates `χ_mot(e)` in the model `m`, returning the value and the
/// derivation that produced it. Every node has exactly one applicable rule,
/// so evaluation is deterministic.
pub fn eval_chi(e: &SpaceExpr, m: &FieldModel) -> Result<(GwValue, Derivation), EvalError> {
    let diagnostics = validate(e);
    if !diagnostics.is_empty() {
        return Err(EvalError::Invalid(diagnostics));
    }
    let d = derive(e, m)?;
    Ok((d.value.clone(), d))
}

/// Parses and evaluates in one step.
pub fn eval_str(text: &str, m: &FieldModel) -> Result<(GwValue, Derivation), EvalError> {
    eval_chi(&parse(text)?, m)
}

fn linear(terms: &[(i64, u64)]) -> Combine {
    Combine::Linear(
        terms
            .iter()
            .enumerate()
            .map(|(i, &(k, c))| Term::new(k, c, i))
            .collect(),
    )
}

pub(crate) fn derive(e: &SpaceExpr, m: &FieldModel) -> Result<Derivation, EvalError> {
    if let (Some(rule), Some(value)) = (atom_rule(e), atom_value(e, m)) {
        return Ok(Derivation::leaf(rule, e.clone(), value));
    }
    let node = |rule, combine, children| Derivation::node(rule, e.clone(), combine, children, m);
    Ok(match e {
        SpaceExpr::Product(a, b) | SpaceExpr::Smash(a, b) => {
            node(Rule::ProductSmash, Combine::Product, vec![derive(a, m)?, derive(b, m)?])
        }
        SpaceExpr::DisjointUnion(a, b) => node(
            Rule::Disjoint,
            linear(&[(1, 0), (1, 0)]),
            vec![derive(a, m)?, derive(b, m)?],
        ),
        SpaceExpr::Stratified(strata) => {
            let children = strata
                .iter()
                .map(|s| derive(&s.space, m))
                .collect::<Result<Vec<_>, _>>()?;
            let terms: Vec<_> = strata.iter().map(|s| (1, s.codim)).collect();
            node(Rule::Stratified, linear(&terms), children)
                .assuming("strata are smooth, locally closed and their codimensions are as listed")
        }
        SpaceExpr::ClosedOpenPair {
            whole,
            open,
            closed,
            codim,
        } => node(
            Rule::ClosedOpen,
            linear(&[(1, 0), (1, *codim)]),
            vec![derive(open, m)?, derive(closed, m)?],
        )
        .assuming(format!(
            "{closed} is closed in {whole} with open complement {open} and trivial normal bundle of rank {codim}"
        )),
        SpaceExpr::PointedQuotient {
            whole,
            open,
            closed,
            codim,
        } => node(Rule::ClosedOpen, linear(&[(1, *codim)]), vec![derive(closed, m)?]).assuming(format!(
            "{closed} is closed in {whole} with open complement {open} and trivial normal bundle of rank {codim}"
        )),
        SpaceExpr::ThomTrivial { codim, base } => {
            node(Rule::ClosedOpen, linear(&[(1, *codim)]), vec![derive(base, m)?])
        }
        SpaceExpr::MayerVietoris(mv) => {
            let children = [&mv.x1, &mv.u1, &mv.x2, &mv.u2, &mv.x12, &mv.u12]
                .into_iter()
                .map(|x| derive(x, m))
                .collect::<Result<Vec<_>, _>>()?;
            node(
                Rule::MayerVietoris,
                linear(&[(1, 0), (-1, 0), (1, 0), (-1, 0), (-1, 0), (1, 0)]),
                children,
            )
            .assuming("X1, X2 form an open cover of X with X12 = X1 n X2, and Ui = U n Xi")
        }
        SpaceExpr::PushoutCone { target, source } => node(
            Rule::PushoutCone,
            linear(&[(1, 0), (-1, 0)]),
            vec![derive(target, m)?, derive(source, m)?],
        ),
        SpaceExpr::TorusSlice { corank, slice } => {
            let torus = if *corank == 0 {
                SpaceExpr::Point
            } else {
                SpaceExpr::Torus(*corank)
            };
            node(Rule::TorusSlice, Combine::Product, vec![derive(&torus, m)?, derive(slice, m)?])
        }
        SpaceExpr::TorusFixed { space, fixed } => node(
            Rule::TorusFixed,
            Combine::Localize(Localization::FixedLocus),
            vec![derive(fixed, m)?],
        )
        .assuming(format!("{fixed} is the fixed locus of a split torus acting on {space}")),
        SpaceExpr::Projective(n) => {
            let cells = SpaceExpr::stratified((0..=*n).map(|i| (SpaceExpr::Affine(n - i), i)));
            node(Rule::Projective, Combine::identity(), vec![derive(&cells, m)?])
        }
        SpaceExpr::Flag(ct) => roots::flag_derivation(*ct, m)?,
        SpaceExpr::GModT(ct) => roots::g_mod_t_derivation(*ct, m)?,
        SpaceExpr::GModN(ct) => roots::g_mod_n_derivation(*ct, m)?,
        SpaceExpr::Point | SpaceExpr::Affine(_) | SpaceExpr::Gm | SpaceExpr::Torus(_) | SpaceExpr::TateTwist => {
            unreachable!("atoms handled above")
        }
    })
}
