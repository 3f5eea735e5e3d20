//! Text and JSON renderings of elements and values.
//!
//! Text: `a<1> + b<-1>` with zero terms dropped (`0` when both vanish) and
//! coefficients written `n` or `n/p^e`. JSON: `{"unit": .., "twist": ..,
//! "model": ..}` where each coefficient is `{"numerator", "p_exponent"}`.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::{Coefficient, Exactness, FieldModel, GwElement, GwError, GwValue};

impl FieldModel {
    pub fn render(&self, x: &GwElement) -> String {
        let c = self.coeffs();
        let (a, b) = (x.unit_coeff(), x.twist_coeff());
        match (a.is_zero(), b.is_zero()) {
            (true, true) => "0".to_string(),
            (false, true) => format!("{}<1>", c.render(a)),
            (true, false) => format!("{}<-1>", c.render(b)),
            (false, false) => {
                let (sign, mag) = if b.numerator().is_negative() {
                    ("-", c.neg(b))
                } else {
                    ("+", b.clone())
                };
                format!("{}<1> {} {}<-1>", c.render(a), sign, c.render(&mag))
            }
        }
    }

    /// Parses the text rendering back into a normalized element.
    pub fn parse_element(&self, text: &str) -> Result<GwElement, GwError> {
        let bad = || GwError::BadElement(text.to_string());
        let compact: String = text.chars().filter(|ch| !ch.is_whitespace()).collect();
        if compact == "0" {
            return Ok(self.zero());
        }
        if compact.is_empty() {
            return Err(bad());
        }
        let c = self.coeffs();
        let (mut unit, mut twist) = (Coefficient::zero(), Coefficient::zero());
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let open = rest.find('<').ok_or_else(bad)?;
            let close = rest.find('>').ok_or_else(bad)?;
            if close < open {
                return Err(bad());
            }
            let mut coeff = &rest[..open];
            let basis = &rest[open + 1..close];
            let negate = if let Some(s) = coeff.strip_prefix('-') {
                coeff = s;
                true
            } else if let Some(s) = coeff.strip_prefix('+') {
                if first {
                    return Err(bad());
                }
                coeff = s;
                false
            } else if first {
                false
            } else {
                return Err(bad());
            };
            if coeff.is_empty() || coeff.starts_with(['+', '-']) {
                return Err(bad());
            }
            let mut value = c.parse(coeff)?;
            if negate {
                value = c.neg(&value);
            }
            match basis {
                "1" => unit = c.add(&unit, &value),
                "-1" => twist = c.add(&twist, &value),
                _ => return Err(bad()),
            }
            rest = &rest[close + 1..];
            first = false;
        }
        Ok(self.normal_form(unit, twist))
    }

    pub fn render_value(&self, v: &GwValue) -> String {
        let body = self.render(v.representative());
        match v.exactness() {
            Exactness::Exact => format!("{body}  (exact)"),
            Exactness::ModuloFundamentalIdeal if v.unit_known() => {
                format!("{body}  (mod (1 - <-1>), unit)")
            }
            Exactness::ModuloFundamentalIdeal => format!("{body}  (mod (1 - <-1>))"),
        }
    }
}

/// Arbitrary-size integers go out as JSON numbers when they fit in `i64`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonInteger {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for JsonInteger {
    fn from(n: &BigInt) -> Self {
        match i64::try_from(n) {
            Ok(v) => JsonInteger::Small(v),
            Err(_) => JsonInteger::Big(n.to_string()),
        }
    }
}

impl JsonInteger {
    fn to_bigint(&self) -> Result<BigInt, GwError> {
        match self {
            JsonInteger::Small(v) => Ok(BigInt::from(*v)),
            JsonInteger::Big(s) => s.parse().map_err(|_| GwError::BadCoefficient(s.clone())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientJson {
    pub numerator: JsonInteger,
    pub p_exponent: u32,
}

impl From<&Coefficient> for CoefficientJson {
    fn from(c: &Coefficient) -> Self {
        Self {
            numerator: c.numerator().into(),
            p_exponent: c.p_exponent(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub unit: CoefficientJson,
    pub twist: CoefficientJson,
    pub model: String,
}

impl ElementJson {
    pub fn new(x: &GwElement, m: &FieldModel) -> Self {
        Self {
            unit: x.unit_coeff().into(),
            twist: x.twist_coeff().into(),
            model: m.to_string(),
        }
    }

    pub fn decode(&self) -> Result<(FieldModel, GwElement), GwError> {
        let m: FieldModel = self.model.parse()?;
        let c = m.coeffs();
        let unit = c.make(self.unit.numerator.to_bigint()?, self.unit.p_exponent)?;
        let twist = c.make(self.twist.numerator.to_bigint()?, self.twist.p_exponent)?;
        Ok((m, m.normal_form(unit, twist)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueJson {
    pub unit: CoefficientJson,
    pub twist: CoefficientJson,
    pub model: String,
    pub exactness: Exactness,
    pub unit_known: bool,
}

impl ValueJson {
    pub fn new(v: &GwValue, m: &FieldModel) -> Self {
        let e = ElementJson::new(v.representative(), m);
        Self {
            unit: e.unit,
            twist: e.twist,
            model: e.model,
            exactness: v.exactness(),
            unit_known: v.unit_known(),
        }
    }

    pub fn decode(&self) -> Result<(FieldModel, GwValue), GwError> {
        let (m, rep) = ElementJson {
            unit: self.unit.clone(),
            twist: self.twist.clone(),
            model: self.model.clone(),
        }
        .decode()?;
        let v = match self.exactness {
            Exactness::Exact => GwValue::exact(rep),
            Exactness::ModuloFundamentalIdeal => GwValue::congruent(rep, self.unit_known, &m),
        };
        Ok((m, v))
    }
}
