use serde::{Deserialize, Serialize};

use super::{FieldModel, GwElement};

/// Whether a value is known exactly or only up to the ideal `(1 - ⟨-1⟩)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exactness {
    Exact,
    ModuloFundamentalIdeal,
}

/// An Euler characteristic as computed by the engine: an exact element, or
/// a representative of a class modulo `(1 - ⟨-1⟩)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GwValue {
    representative: GwElement,
    exactness: Exactness,
    unit_known: bool,
}

impl GwValue {
    pub fn exact(representative: GwElement) -> Self {
        Self {
            representative,
            exactness: Exactness::Exact,
            unit_known: false,
        }
    }

    /// A congruence class. In models where `⟨-1⟩ = ⟨1⟩` the fundamental ideal
    /// of the subring vanishes, so the class is returned as exact instead.
    pub fn congruent(representative: GwElement, unit_known: bool, m: &FieldModel) -> Self {
        if m.twist_is_trivial() {
            return Self::exact(representative);
        }
        Self {
            representative,
            exactness: Exactness::ModuloFundamentalIdeal,
            unit_known,
        }
    }

    pub fn representative(&self) -> &GwElement {
        &self.representative
    }

    pub fn exactness(&self) -> Exactness {
        self.exactness
    }

    pub fn is_exact(&self) -> bool {
        self.exactness == Exactness::Exact
    }

    /// Only meaningful for congruence values.
    pub fn unit_known(&self) -> bool {
        self.unit_known
    }
}
