use std::fmt;

use super::SpaceExpr;

/// A rule violation, located by the path of constructor names from the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub path: String,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

/// Checks pointedness, rank and Cartan-type rules. An empty result means the
/// expression can be evaluated.
pub fn validate(e: &SpaceExpr) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    walk(e, e.constructor().to_string(), &mut out);
    out
}

fn walk(e: &SpaceExpr, path: String, out: &mut Vec<Diagnostic>) {
    let mut report = |message: String| {
        out.push(Diagnostic {
            path: path.clone(),
            message,
        })
    };
    match e {
        SpaceExpr::Smash(a, b) => {
            if !(a.is_pointed() && b.is_pointed()) {
                report("Smash requires pointed children".into());
            }
        }
        SpaceExpr::Torus(0) => report("Torus rank must be positive".into()),
        SpaceExpr::Flag(ct) | SpaceExpr::GModT(ct) | SpaceExpr::GModN(ct) => {
            if let Some(msg) = ct.constraint_violation() {
                report(msg);
            }
        }
        // every other constructor takes unpointed spaces only
        _ => {
            if e.children().iter().any(|c| c.is_pointed()) {
                report(format!("{} requires unpointed children", e.constructor()));
            }
        }
    }
    for (i, child) in e.children().into_iter().enumerate() {
        walk(child, format!("{path}.{i}:{}", child.constructor()), out);
    }
}
