//! Check results and their JSON/CSV serialization.

use lattice_ineq::lattice::SparseLatticeFunction;
use lattice_ineq::report::{csv_float, Json, QuotientReport};
use std::collections::BTreeSet;

/// Outcome of one named check, with its data and an optional witness.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    pub data: Json,
    pub witness: Option<Json>,
}

impl Check {
    pub fn new(name: impl Into<String>, holds: bool) -> Self {
        Check { name: name.into(), holds, data: Json::object::<String>([]), witness: None }
    }

    /// Check whose data is a quotient report.
    pub fn quotient(name: impl Into<String>, q: &QuotientReport) -> Self {
        Check { name: name.into(), holds: q.holds, data: q.to_json(), witness: None }
    }

    pub fn with(mut self, key: &str, value: Json) -> Self {
        self.data.insert(key, value);
        self
    }

    pub fn float(self, key: &str, x: f64) -> Self {
        self.with(key, Json::Float(x))
    }

    pub fn int(self, key: &str, n: i64) -> Self {
        self.with(key, Json::Int(n))
    }

    pub fn text(self, key: &str, s: impl Into<String>) -> Self {
        self.with(key, Json::Str(s.into()))
    }

    pub fn witness(mut self, w: Json) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn witness_fn(self, f: &SparseLatticeFunction<f64>) -> Self {
        self.witness(function_json(f))
    }

    pub fn to_json(&self) -> Json {
        let mut obj = match &self.data {
            Json::Object(m) => Json::Object(m.clone()),
            other => Json::object([("value", other.clone())]),
        };
        obj.insert("check", Json::Str(self.name.clone()));
        obj.insert("holds", Json::Bool(self.holds));
        if let Some(w) = &self.witness {
            obj.insert("witness", w.clone());
        }
        obj
    }
}

pub fn function_json(f: &SparseLatticeFunction<f64>) -> Json {
    Json::parse(&f.to_json()).expect("function serializes to valid JSON")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// The results alone: a JSON array (`[]` when empty) or a CSV table.
pub fn emit_report(results: &[Check], format: Format) -> String {
    match format {
        Format::Json => Json::Array(results.iter().map(Check::to_json).collect()).render(),
        Format::Csv => checks_csv(results),
    }
}

/// Full run document: command, config, seed, results and the first failure.
pub fn document(command: &str, config: Json, seed: u64, results: &[Check], extra: Option<(&str, Json)>) -> Json {
    let mut doc = Json::object([
        ("command", Json::Str(command.into())),
        ("config", config),
        ("seed", Json::Int(seed as i64)),
        ("results", Json::Array(results.iter().map(Check::to_json).collect())),
        ("all_hold", Json::Bool(results.iter().all(|c| c.holds))),
        ("first_failure", first_failure(results).map_or(Json::Null, Check::to_json)),
    ]);
    if let Some((key, value)) = extra {
        doc.insert(key, value);
    }
    doc
}

pub fn first_failure(results: &[Check]) -> Option<&Check> {
    results.iter().find(|c| !c.holds)
}

fn csv_cell(v: &Json) -> String {
    let raw = match v {
        Json::Null => String::new(),
        Json::Float(x) => csv_float(*x),
        Json::Str(s) => s.clone(),
        other => other.render(),
    };
    if raw.contains([',', '"', '\n']) {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw
    }
}

/// CSV with `check,holds` first and then the sorted union of the other keys.
fn checks_csv(results: &[Check]) -> String {
    let rows: Vec<Json> = results.iter().map(Check::to_json).collect();
    let mut keys = BTreeSet::new();
    for r in &rows {
        if let Json::Object(m) = r {
            keys.extend(m.keys().filter(|k| *k != "check" && *k != "holds").cloned());
        }
    }
    let header: Vec<String> = ["check".to_string(), "holds".to_string()].into_iter().chain(keys).collect();
    table_csv(&header, &rows)
}

/// CSV of the objects in `rows` under the given column order; missing keys are empty cells.
pub fn table_csv(header: &[String], rows: &[Json]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        let cells: Vec<String> = header.iter().map(|k| r.get(k).map_or(String::new(), csv_cell)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report() {
        assert_eq!(emit_report(&[], Format::Json), "[]");
        assert!(Json::parse(&emit_report(&[], Format::Json)).is_ok());
    }

    #[test]
    fn quotient_round_trip() {
        let q = QuotientReport::new(1.25, 0.5, 0.25, 1e-12);
        let text = emit_report(&[Check::quotient("q", &q)], Format::Json);
        let parsed = Json::parse(&text).unwrap();
        let Json::Array(items) = parsed else { panic!("array expected") };
        assert_eq!(QuotientReport::from_json(&items[0]), Some(q));
    }

    #[test]
    fn csv_header() {
        let a = Check::new("a", true).float("x", 1.5);
        let b = Check::new("b", false).text("note", "p, q");
        let csv = emit_report(&[a, b], Format::Csv);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("check,holds,note,x"));
        assert_eq!(lines.next(), Some("a,true,,1.500000000000e+00"));
        assert_eq!(lines.next(), Some("b,false,\"p, q\","));
    }

    #[test]
    fn deterministic_bytes() {
        let mk = || document("x", Json::object([("k", Json::Int(1))]), 0, &[Check::new("a", true).float("v", 0.1)], None);
        assert_eq!(mk().render(), mk().render());
    }
}
