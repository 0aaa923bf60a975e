//! Command output in table and JSON form.

use dade_core::cfun::{FinAbStructure, PClasses};
use dade_core::grp::{Group, Subgroup};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "dade-workbench/1";

/// The result of one verb. `passed` is false for failed checks and reproduction diffs.
#[derive(Clone, Debug)]
pub struct Report {
    pub verb: &'static str,
    pub text: String,
    pub body: Map<String, Value>,
    pub passed: bool,
}

impl Report {
    pub fn new(verb: &'static str) -> Report {
        Report { verb, text: String::new(), body: Map::new(), passed: true }
    }

    pub fn line(&mut self, s: impl AsRef<str>) -> &mut Report {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
        self
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) -> &mut Report {
        self.body.insert(key.to_string(), value.into());
        self
    }

    pub fn json(&self) -> Value {
        let mut doc = self.body.clone();
        doc.insert("schema".into(), SCHEMA.into());
        doc.insert("verb".into(), self.verb.into());
        doc.insert("passed".into(), self.passed.into());
        Value::Object(doc)
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string_pretty(&self.json()).expect("report JSON is serializable");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

pub fn big(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => v.into(),
        None => x.to_string().into(),
    }
}

pub fn bigs(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(big).collect())
}

pub fn structure(s: &FinAbStructure) -> Value {
    json!({ "invariant_factors": s.factors, "display": s.to_string() })
}

/// Subgroup class names in class-id order.
pub fn class_names(g: &Group) -> Vec<String> {
    g.subgroup_classes().map(|cs| cs.iter().map(|c| c.name.clone()).collect()).unwrap_or_default()
}

pub fn pclass_names(pc: &PClasses) -> Vec<String> {
    (0..pc.len()).map(|i| pc.name(i).to_string()).collect()
}

pub fn subgroup_name(g: &Group, h: &Subgroup) -> String {
    match g.class_of(h) {
        Ok(c) => g.subgroup_classes().map(|cs| cs[c].name.clone()).unwrap_or_else(|_| String::from("?")),
        Err(_) => String::from("?"),
    }
}

/// Fixed-width columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let n = header.len();
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let fmt = |cells: Vec<String>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(i, c)| if i + 1 == n { c.clone() } else { format!("{c}{}", " ".repeat(width[i] - c.chars().count())) })
            .collect();
        padded.join("  ")
    };
    let mut out = fmt(header.iter().map(|s| s.to_string()).collect());
    out.push('\n');
    for r in rows {
        out.push_str(&fmt(r.clone()));
        out.push('\n');
    }
    out.trim_end_matches('\n').to_string()
}
