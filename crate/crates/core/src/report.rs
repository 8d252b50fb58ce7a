//! Report types and deterministic serialization.
//!
//! Reports are rendered through [`Json`], a small ordered document model:
//! object keys are sorted and floats are printed as `%.12e`, so identical
//! inputs always produce identical bytes.

use std::collections::BTreeMap;
use std::fmt::Write;

/// Default slack for inequality checks.
pub const INEQUALITY_SLACK: f64 = 1e-12;

/// Left side, weighted right-hand sum, their ratio and the claimed constant.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientReport {
    pub lhs: f64,
    pub rhs_sum: f64,
    pub ratio: f64,
    pub constant: f64,
    pub holds: bool,
}

impl QuotientReport {
    /// Builds a report; the inequality holds when `ratio >= constant - slack`.
    pub fn new(lhs: f64, rhs_sum: f64, constant: f64, slack: f64) -> Self {
        let ratio = if rhs_sum > 0.0 { lhs / rhs_sum } else { f64::INFINITY };
        QuotientReport { lhs, rhs_sum, ratio, constant, holds: ratio >= constant - slack }
    }

    pub fn to_json(&self) -> Json {
        Json::object([
            ("constant", Json::Float(self.constant)),
            ("holds", Json::Bool(self.holds)),
            ("lhs", Json::Float(self.lhs)),
            ("ratio", Json::Float(self.ratio)),
            ("rhs_sum", Json::Float(self.rhs_sum)),
        ])
    }

    pub fn from_json(j: &Json) -> Option<Self> {
        let f = |k: &str| j.get(k).and_then(Json::as_f64);
        Some(QuotientReport {
            lhs: f("lhs")?,
            rhs_sum: f("rhs_sum")?,
            ratio: f("ratio")?,
            constant: f("constant")?,
            holds: j.get("holds").and_then(Json::as_bool)?,
        })
    }
}

/// Ordered JSON document.
#[derive(Clone, Debug, PartialEq)]
pub enum Json {
    Null,
    Bool(bool),
    Int(i64),
    Float(f64),
    Str(String),
    Array(Vec<Json>),
    Object(BTreeMap<String, Json>),
}

impl Json {
    pub fn object<K: Into<String>>(entries: impl IntoIterator<Item = (K, Json)>) -> Json {
        Json::Object(entries.into_iter().map(|(k, v)| (k.into(), v)).collect())
    }

    pub fn floats(xs: impl IntoIterator<Item = f64>) -> Json {
        Json::Array(xs.into_iter().map(Json::Float).collect())
    }

    pub fn get(&self, key: &str) -> Option<&Json> {
        match self {
            Json::Object(m) => m.get(key),
            _ => None,
        }
    }

    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Json::Float(x) => Some(*x),
            Json::Int(n) => Some(*n as f64),
            Json::Str(s) if s == "inf" => Some(f64::INFINITY),
            Json::Str(s) if s == "-inf" => Some(f64::NEG_INFINITY),
            Json::Str(s) if s == "nan" => Some(f64::NAN),
            _ => None,
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Json::Bool(b) => Some(*b),
            _ => None,
        }
    }

    pub fn insert(&mut self, key: impl Into<String>, value: Json) {
        if let Json::Object(m) = self {
            m.insert(key.into(), value);
        }
    }

    /// Compact rendering with sorted keys and `%.12e` floats. Non-finite
    /// floats become the strings `"inf"`, `"-inf"`, `"nan"`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write_into(&mut out);
        out
    }

    fn write_into(&self, out: &mut String) {
        match self {
            Json::Null => out.push_str("null"),
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Int(n) => write!(out, "{n}").unwrap(),
            Json::Float(x) => out.push_str(&format_float(*x)),
            Json::Str(s) => out.push_str(&serde_json::to_string(s).unwrap()),
            Json::Array(xs) => {
                out.push('[');
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    x.write_into(out);
                }
                out.push(']');
            }
            Json::Object(m) => {
                out.push('{');
                for (i, (k, v)) in m.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push_str(&serde_json::to_string(k).unwrap());
                    out.push(':');
                    v.write_into(out);
                }
                out.push('}');
            }
        }
    }

    pub fn parse(text: &str) -> crate::Result<Json> {
        let v: serde_json::Value =
            serde_json::from_str(text).map_err(|e| crate::Error::Parse(e.to_string()))?;
        Ok(Json::from_value(v))
    }

    fn from_value(v: serde_json::Value) -> Json {
        use serde_json::Value;
        match v {
            Value::Null => Json::Null,
            Value::Bool(b) => Json::Bool(b),
            Value::Number(n) => match n.as_i64() {
                Some(i) if !n.to_string().contains(['e', 'E', '.']) => Json::Int(i),
                _ => Json::Float(n.as_f64().unwrap_or(f64::NAN)),
            },
            Value::String(s) => match s.as_str() {
                "inf" => Json::Float(f64::INFINITY),
                "-inf" => Json::Float(f64::NEG_INFINITY),
                "nan" => Json::Float(f64::NAN),
                _ => Json::Str(s),
            },
            Value::Array(xs) => Json::Array(xs.into_iter().map(Json::from_value).collect()),
            Value::Object(m) => Json::Object(m.into_iter().map(|(k, v)| (k, Json::from_value(v))).collect()),
        }
    }
}

/// `%.12e` in C style, e.g. `1.500000000000e-01`.
pub fn format_float(x: f64) -> String {
    if x.is_nan() {
        return "\"nan\"".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "\"inf\"".into() } else { "\"-inf\"".into() };
    }
    let s = format!("{x:.12e}");
    let (mant, exp) = s.split_once('e').expect("exponent");
    let e: i32 = exp.parse().expect("integer exponent");
    format!("{mant}e{}{:02}", if e < 0 { '-' } else { '+' }, e.abs())
}

/// Plain float cell for CSV output, same `%.12e` convention.
pub fn csv_float(x: f64) -> String {
    format_float(x).trim_matches('"').to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format() {
        assert_eq!(format_float(0.15), "1.500000000000e-01");
        assert_eq!(format_float(-1234.5), "-1.234500000000e+03");
        assert_eq!(format_float(0.0), "0.000000000000e+00");
        assert_eq!(format_float(f64::INFINITY), "\"inf\"");
    }

    #[test]
    fn sorted_keys_and_empty() {
        let j = Json::object([("b", Json::Int(1)), ("a", Json::Array(vec![]))]);
        assert_eq!(j.render(), r#"{"a":[],"b":1}"#);
        assert_eq!(Json::Array(vec![]).render(), "[]");
    }

    #[test]
    fn quotient_round_trip() {
        let q = QuotientReport::new(2.5, 1.0, 0.25, INEQUALITY_SLACK);
        let back = QuotientReport::from_json(&Json::parse(&q.to_json().render()).unwrap()).unwrap();
        assert_eq!(back, q);
        let inf = QuotientReport::new(1.0, 0.0, 0.25, INEQUALITY_SLACK);
        let back = QuotientReport::from_json(&Json::parse(&inf.to_json().render()).unwrap()).unwrap();
        assert_eq!(back, inf);
    }
}
