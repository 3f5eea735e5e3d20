use serde::{Deserialize, Serialize};

use super::combine::{self, Combine};
use super::rules::{atom_value, Rule};
use crate::dsl::SpaceExpr;
use crate::gw::{FieldModel, GwValue, ValueJson};

/// One rule application: the expression it evaluated, the value it produced
/// and how that value was assembled from the children.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub rule: Rule,
    pub expr: SpaceExpr,
    pub value: GwValue,
    pub combine: Combine,
    /// Geometric inputs taken on trust at this step.
    pub assumptions: Vec<String>,
    pub children: Vec<Derivation>,
}

impl Derivation {
    pub fn leaf(rule: Rule, expr: SpaceExpr, value: GwValue) -> Self {
        Self {
            rule,
            expr,
            value,
            combine: Combine::Atom,
            assumptions: Vec::new(),
            children: Vec::new(),
        }
    }

    /// Builds an internal node, computing its value from the children.
    pub fn node(
        rule: Rule,
        expr: SpaceExpr,
        combine: Combine,
        children: Vec<Derivation>,
        m: &FieldModel,
    ) -> Self {
        let values: Vec<&GwValue> = children.iter().map(|c| &c.value).collect();
        let value = combine::apply(&combine, &values, m);
        Self {
            rule,
            expr,
            value,
            combine,
            assumptions: Vec::new(),
            children,
        }
    }

    pub fn assuming(mut self, note: impl Into<String>) -> Self {
        self.assumptions.push(note.into());
        self
    }

    pub fn node_count(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(Derivation::node_count)
            .sum::<usize>()
    }

    pub fn to_json(&self, m: &FieldModel) -> DerivationJson {
        DerivationJson {
            rule: self.rule.name().to_string(),
            citation: self.rule.citation().to_string(),
            expr: self.expr.to_string(),
            value: ValueJson::new(&self.value, m),
            assumptions: self.assumptions.clone(),
            children: self.children.iter().map(|c| c.to_json(m)).collect(),
        }
    }

    /// Indented text rendering, one line per rule application.
    pub fn render_tree(&self, m: &FieldModel) -> String {
        let mut out = String::new();
        self.render_into(m, 0, &mut out);
        out
    }

    fn render_into(&self, m: &FieldModel, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent);
        out.push_str(&format!(
            "{pad}{} = {}  [{}: {}]\n",
            self.expr,
            m.render_value(&self.value),
            self.rule.name(),
            self.rule.citation()
        ));
        for a in &self.assumptions {
            out.push_str(&format!("{pad}  assuming: {a}\n"));
        }
        for c in &self.children {
            c.render_into(m, indent + 1, out);
        }
    }
}

/// Serialized derivation node. Field order is fixed for golden comparisons.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationJson {
    pub rule: String,
    pub citation: String,
    pub expr: String,
    pub value: ValueJson,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub assumptions: Vec<String>,
    pub children: Vec<DerivationJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("replay mismatch at `{expr}` ({rule}): stored {stored}, recomputed {recomputed}")]
pub struct ReplayError {
    pub rule: &'static str,
    pub expr: String,
    pub stored: String,
    pub recomputed: String,
}

/// Recomputes every node bottom-up from its children (leaves from their
/// atom definitions) and checks it against the stored value.
pub fn replay(d: &Derivation, m: &FieldModel) -> Result<(), ReplayError> {
    for c in &d.children {
        replay(c, m)?;
    }
    let recomputed = match &d.combine {
        Combine::Atom => atom_value(&d.expr, m),
        other => {
            let values: Vec<&GwValue> = d.children.iter().map(|c| &c.value).collect();
            Some(combine::apply(other, &values, m))
        }
    };
    match recomputed {
        Some(v) if v == d.value => Ok(()),
        other => Err(ReplayError {
            rule: d.rule.name(),
            expr: d.expr.to_string(),
            stored: m.render_value(&d.value),
            recomputed: other.map_or_else(|| "<not an atom>".to_string(), |v| m.render_value(&v)),
        }),
    }
}
