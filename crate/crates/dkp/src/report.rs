//! Pass/fail reports with a fixed JSON layout.
//!
//! Floats are written with 17 significant digits so equal runs produce
//! byte-identical files.

use std::collections::BTreeMap;

use serde::ser::{Serialize, Serializer};
use serde_json::value::RawValue;

/// A float serialized as `d.dddddddddddddddde±x`; non-finite values become `null`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Float(pub f64);

impl Float {
    pub fn text(self) -> String {
        if self.0.is_finite() {
            format!("{:.16e}", self.0)
        } else {
            String::from("null")
        }
    }
}

impl Serialize for Float {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let raw = RawValue::from_string(self.text()).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

/// Which side of the tolerance passes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Bound {
    /// `residual <= tolerance`.
    Below,
    /// `residual > tolerance`, for checks that must detect a violation.
    Above,
}

#[derive(Clone, PartialEq, Debug, serde::Serialize)]
pub struct Check {
    pub name: String,
    pub residual: Float,
    pub tolerance: Float,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, residual: f64, tolerance: f64, bound: Bound) -> Self {
        let pass = match bound {
            Bound::Below => residual <= tolerance,
            Bound::Above => residual > tolerance,
        };
        Check { name: name.into(), residual: Float(residual), tolerance: Float(tolerance), pass }
    }

    pub fn below(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Check::new(name, residual, tolerance, Bound::Below)
    }

    pub fn above(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Check::new(name, residual, tolerance, Bound::Above)
    }

    /// Exact agreement; residual 0 on success, 1 otherwise.
    pub fn exact(name: impl Into<String>, ok: bool) -> Self {
        Check::below(name, if ok { 0.0 } else { 1.0 }, 0.0)
    }
}

/// Config and summary values, kept as text so ordering and formatting are
/// fixed.
pub type Fields = BTreeMap<String, String>;

#[derive(Clone, PartialEq, Debug, serde::Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
    pub seed: u64,
    pub config: Fields,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub summary: Fields,
}

impl Report {
    pub fn new(suite: impl Into<String>, seed: u64) -> Self {
        Report { suite: suite.into(), checks: Vec::new(), seed, config: Fields::new(), summary: Fields::new() }
    }

    pub fn config(mut self, key: &str, value: impl ToString) -> Self {
        self.config.insert(key.into(), value.to_string());
        self
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failing(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// `name,residual,tolerance,pass` rows.
    pub fn to_csv(&self) -> anyhow::Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["name", "residual", "tolerance", "pass"])?;
        for c in &self.checks {
            w.write_record([c.name.clone(), c.residual.text(), c.tolerance.text(), c.pass.to_string()])?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }
}

/// `f64` formatted like report floats, for config values.
pub fn fmt_f64(x: f64) -> String {
    Float(x).text()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_have_seventeen_digits() {
        assert_eq!(Float(0.1).text(), "1.0000000000000001e-1");
        assert_eq!(Float(f64::NAN).text(), "null");
        let mut r = Report::new("x", 3).config("b", 2).config("a", 1);
        r.push(Check::below("c", 1e-13, 1e-12));
        r.push(Check::above("d", 0.2, 1e-3));
        assert!(r.passed());
        let json = r.to_json();
        assert!(json.contains("\"residual\": 1.0000000000000000e-13"));
        assert!(json.find("\"a\"").unwrap() < json.find("\"b\"").unwrap());
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["checks"][1]["pass"], true);
    }
}
