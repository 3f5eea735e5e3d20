//! Command-line front end, kept as library functions so the binary stays a
//! thin argument parser and the output can be tested byte for byte.

mod selftest;

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

pub use selftest::{run_selftest, selftest_checks, Check};

use crate::dsl::{parse, validate};
use crate::engine::{eval_chi, replay, DerivationJson};
use crate::gw::{FieldModel, ValueJson};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Expr(String),
    File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliConfig {
    /// Field model selector, e.g. `generic` or `finite:7`.
    pub field: String,
    pub format: Format,
    pub trace: bool,
    pub input: Input,
    pub color: bool,
}

/// Exit code and the text destined for stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn failure(code: i32, stderr: String) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

/// JSON document printed by `--format json`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalReport {
    pub expr: String,
    pub field: String,
    pub value: ValueJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derivation: Option<DerivationJson>,
}

/// Whether ANSI color should be used, given the `CHI_COLOR` variable and
/// whether stdout is a terminal.
pub fn color_enabled(env_value: Option<&str>, is_terminal: bool) -> bool {
    match env_value.map(str::trim) {
        Some("0" | "never" | "off" | "false" | "no") => false,
        Some("always" | "1" | "force") => true,
        _ => is_terminal,
    }
}

pub(crate) fn paint(text: &str, code: &str, color: bool) -> String {
    if color {
        format!("\x1b[{code}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

/// Evaluates the configured expression. Exit 0 on success, 1 on bad input
/// (model, parse, validation, unsupported type), 2 if the derivation does
/// not replay to its own value.
pub fn run_eval(cfg: &CliConfig) -> CliOutput {
    let err = |msg: String| paint(&format!("error: {msg}"), "31", cfg.color);
    let model: FieldModel = match cfg.field.parse() {
        Ok(m) => m,
        Err(e) => return CliOutput::failure(1, err(e.to_string()) + "\n"),
    };
    let text = match &cfg.input {
        Input::Expr(s) => s.clone(),
        Input::File(path) => match std::fs::read_to_string(path) {
            Ok(s) => s,
            Err(e) => {
                return CliOutput::failure(
                    1,
                    err(format!("cannot read {}: {e}", path.display())) + "\n",
                )
            }
        },
    };
    let expr = match parse(&text) {
        Ok(e) => e,
        Err(e) => return CliOutput::failure(1, err(format!("parse error at {e}")) + "\n"),
    };
    let diagnostics = validate(&expr);
    if !diagnostics.is_empty() {
        let mut s = String::new();
        for d in diagnostics {
            s.push_str(&err(d.to_string()));
            s.push('\n');
        }
        return CliOutput::failure(1, s);
    }
    let (value, derivation) = match eval_chi(&expr, &model) {
        Ok(r) => r,
        Err(e) => return CliOutput::failure(1, err(e.to_string()) + "\n"),
    };
    if let Err(e) = replay(&derivation, &model) {
        return CliOutput::failure(2, err(format!("internal invariant violated: {e}")) + "\n");
    }
    let stdout = match cfg.format {
        Format::Text => {
            let mut s = model.render_value(&value);
            s.push('\n');
            if cfg.trace {
                s.push_str(&derivation.render_tree(&model));
            }
            s
        }
        Format::Json => {
            let report = EvalReport {
                expr: expr.to_string(),
                field: model.to_string(),
                value: ValueJson::new(&value, &model),
                derivation: cfg.trace.then(|| derivation.to_json(&model)),
            };
            serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
        }
    };
    CliOutput {
        code: 0,
        stdout,
        stderr: String::new(),
    }
}
