use super::{weyl_data, RootError};
use crate::dsl::{CartanType, SpaceExpr};
use crate::engine::{atom_value, Combine, Derivation, Localization, Rule, Term};
use crate::gw::{FieldModel, GwValue};

/// `G/B` stratified by Bruhat cells: one affine cell of dimension `ℓ(w)` and
/// codimension `N - ℓ(w)` per Weyl group element. Cells of equal length are
/// grouped, with the count as multiplicity.
pub fn flag_derivation(ct: CartanType, m: &FieldModel) -> Result<Derivation, RootError> {
    let entry = weyl_data(ct)?;
    let (rs, wd) = (&entry.0, &entry.1);
    let n = rs.positive_root_count as u64;
    let mut children = Vec::new();
    let mut terms = Vec::new();
    for (len, &count) in wd.length_counts.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let cell = SpaceExpr::Affine(len as u64);
        let value = atom_value(&cell, m).expect("affine space is an atom");
        terms.push(Term::new(count as i64, n - len as u64, children.len()));
        children.push(Derivation::leaf(Rule::AtomAffine, cell, value));
    }
    Ok(Derivation::node(
        Rule::BruhatFlag,
        SpaceExpr::Flag(ct),
        Combine::Linear(terms),
        children,
        m,
    )
    .assuming(format!(
        "|W({ct})| = {} Bruhat cells, dim G/B = {n}, length counts {:?}",
        wd.order, wd.length_counts
    )))
}

/// `G/T` through the affine-space bundle `G/T → G/B`.
pub fn g_mod_t_derivation(ct: CartanType, m: &FieldModel) -> Result<Derivation, RootError> {
    let flag = flag_derivation(ct, m)?;
    let n = weyl_data(ct)?.0.positive_root_count;
    Ok(Derivation::node(
        Rule::AffineBundle,
        SpaceExpr::GModT(ct),
        Combine::identity(),
        vec![flag],
        m,
    )
    .assuming(format!(
        "B/T is isomorphic to A^{n}, so G/T -> G/B is an affine-space bundle"
    )))
}

/// `G/N(T)` by torus localization: after passing to the reduced connected
/// group, `T` has the single fixed point `eN(T)`.
pub fn g_mod_n_derivation(ct: CartanType, m: &FieldModel) -> Result<Derivation, RootError> {
    let order = weyl_data(ct)?.1.order;
    let point = Derivation::leaf(Rule::AtomAffine, SpaceExpr::Point, GwValue::exact(m.one()));
    Ok(Derivation::node(
        Rule::NormalizerFixedPoint,
        SpaceExpr::GModN(ct),
        Combine::Localize(Localization::SinglePoint),
        vec![point],
        m,
    )
    .assuming("G may be replaced by its identity component")
    .assuming(
        "quotient by the unipotent radical: G/N(T) = G_red/N(T) since T meets R_u(G) trivially",
    )
    .assuming(format!(
        "the {order} T-fixed points of G/T form one W-orbit, so (G/N(T))^T = {{eN(T)}} = Spec k"
    )))
}

/// `Σ_w ⟨-1⟩^{N - ℓ(w)}` over the Weyl group.
pub fn chi_flag(ct: CartanType, m: &FieldModel) -> Result<GwValue, RootError> {
    Ok(flag_derivation(ct, m)?.value)
}

/// Equal to [`chi_flag`]; the derivation records the affine-bundle step.
pub fn chi_g_mod_t(ct: CartanType, m: &FieldModel) -> Result<GwValue, RootError> {
    Ok(g_mod_t_derivation(ct, m)?.value)
}

/// Exactly 1 where `⟨-1⟩ = ⟨1⟩`; otherwise 1 modulo `(1 - ⟨-1⟩)` and known to
/// be a unit.
pub fn chi_g_mod_normalizer(ct: CartanType, m: &FieldModel) -> Result<GwValue, RootError> {
    Ok(g_mod_n_derivation(ct, m)?.value)
}
