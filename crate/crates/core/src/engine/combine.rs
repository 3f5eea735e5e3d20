//! How a node's value is assembled from its children's values.
//!
//! Congruence values are absorbing: anything combined with a value known only
//! modulo `(1 - ⟨-1⟩)` is itself known only modulo that ideal.

use crate::gw::{FieldModel, GwValue};

/// `multiplicity · ⟨-1⟩^twist · children[child]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub multiplicity: i64,
    pub twist: u64,
    pub child: usize,
}

impl Term {
    pub fn new(multiplicity: i64, twist: u64, child: usize) -> Self {
        Self {
            multiplicity,
            twist,
            child,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Localization {
    /// Value of the fixed locus; unit status only where it is determined by
    /// the class.
    FixedLocus,
    /// The fixed locus is a single rational point, so the rank is 1 and the
    /// class is a unit.
    SinglePoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Combine {
    /// Leaf; the value comes from the atom's definition.
    Atom,
    Linear(Vec<Term>),
    Product,
    Localize(Localization),
}

impl Combine {
    pub fn identity() -> Self {
        Combine::Linear(vec![Term::new(1, 0, 0)])
    }
}

/// Whether `v` is known to be invertible.
fn known_unit(v: &GwValue, m: &FieldModel) -> bool {
    if v.is_exact() {
        m.is_unit(v.representative())
    } else {
        v.unit_known()
    }
}

/// Unit status of a congruence result. Where the fundamental ideal is
/// nilpotent a unit rank decides it; otherwise only structural facts carry
/// over (`compositional`).
fn congruence_unit(rep_value: &crate::gw::GwElement, compositional: bool, m: &FieldModel) -> bool {
    if m.fundamental_ideal_is_nilpotent() {
        m.is_unit(rep_value)
    } else {
        compositional
    }
}

pub fn apply(combine: &Combine, children: &[&GwValue], m: &FieldModel) -> GwValue {
    let any_congruence = children.iter().any(|v| !v.is_exact());
    match combine {
        Combine::Atom => unreachable!("atoms have no children to combine"),
        Combine::Linear(terms) => {
            let mut acc = m.zero();
            for t in terms {
                let v = children[t.child].representative();
                acc = m.add(&acc, &m.scale(&m.twist_by(v, t.twist), t.multiplicity));
            }
            if !any_congruence {
                return GwValue::exact(acc);
            }
            // ±⟨-1⟩^c · x is a unit exactly when x is
            let compositional = terms.len() == 1
                && terms[0].multiplicity.abs() == 1
                && known_unit(children[terms[0].child], m);
            let unit = congruence_unit(&acc, compositional, m);
            GwValue::congruent(acc, unit, m)
        }
        Combine::Product => {
            let acc = children
                .iter()
                .fold(m.one(), |acc, v| m.mul(&acc, v.representative()));
            if !any_congruence {
                return GwValue::exact(acc);
            }
            let compositional = children.iter().all(|v| known_unit(v, m));
            let unit = congruence_unit(&acc, compositional, m);
            GwValue::congruent(acc, unit, m)
        }
        Combine::Localize(kind) => {
            let rep = children[0].representative().clone();
            let unit = match kind {
                Localization::SinglePoint => true,
                Localization::FixedLocus => congruence_unit(&rep, false, m),
            };
            GwValue::congruent(rep, unit, m)
        }
    }
}
