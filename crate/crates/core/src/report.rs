//! Verification reports with a stable JSON form.
//!
//! JSON output goes through `serde_json::Value`, whose maps are ordered, so
//! keys come out sorted and equal reports serialize to equal bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::validation::Validation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(passed: bool) -> Status {
        if passed {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    /// The serialized counterexample, present on failure.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub command: String,
    pub field: String,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub results: BTreeMap<String, Value>,
    pub overall: Status,
}

impl Report {
    pub fn new(command: impl Into<String>, field: impl Into<String>, seed: u64) -> Report {
        Report {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.into(),
            field: field.into(),
            seed,
            checks: Vec::new(),
            results: BTreeMap::new(),
            overall: Status::Pass,
        }
    }

    fn refresh(&mut self) {
        self.overall = Status::from_bool(self.checks.iter().all(|c| c.status == Status::Pass));
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        let detail = detail.into();
        let (detail, witness) = if passed { (detail, None) } else { ("failed".to_string(), Some(detail)) };
        self.checks.push(Check { name: name.into(), status: Status::from_bool(passed), detail, witness });
        self.refresh();
    }

    /// Appends every outcome of `v`, with names prefixed by `prefix.` when given.
    pub fn add_validation(&mut self, prefix: Option<&str>, v: &Validation) {
        for item in &v.items {
            let name = match prefix {
                Some(p) => format!("{p}.{}", item.name),
                None => item.name.clone(),
            };
            self.check(name, item.passed, item.witness.clone());
        }
    }

    pub fn set_result(&mut self, key: impl Into<String>, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("report values serialize");
        self.results.insert(key.into(), value);
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("reports serialize");
        let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} (field {}, seed {}, version {})", self.command, self.field, self.seed, self.tool_version);
        for c in &self.checks {
            let mark = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            match &c.witness {
                Some(w) => {
                    let _ = writeln!(out, "[{mark}] {}: witness {w}", c.name);
                }
                None => {
                    let _ = writeln!(out, "[{mark}] {}: {}", c.name, c.detail);
                }
            }
        }
        for (k, v) in &self.results {
            let _ = writeln!(out, "{k} = {v}");
        }
        let _ = writeln!(out, "overall: {}", if self.passed() { "pass" } else { "fail" });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_tracks_checks_and_json_round_trips() {
        let mut r = Report::new("classify", "gf:5", 0);
        r.check("a", true, "fine");
        assert!(r.passed());
        r.check("b", false, "x = 3");
        assert!(!r.passed());
        r.set_result("type", "symplectic");
        let json = r.to_json();
        assert!(json.contains("\"overall\": \"fail\""));
        assert!(json.contains("\"witness\": \"x = 3\""));
        assert_eq!(Report::from_json(&json).unwrap(), r);
        assert_eq!(r.to_json(), json);
        let text = r.to_text();
        assert!(text.contains("[FAIL] b: witness x = 3"));
    }
}
