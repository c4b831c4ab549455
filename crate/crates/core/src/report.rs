//! Command reports and their JSON and text renderings.

use crate::decomposition::Check;
use crate::functional::Functional;
use crate::linalg::Subspace;
use crate::connections::Partition;
use crate::rational;
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_THEOREM: i32 = 2;
pub const EXIT_OUT_OF_HYPOTHESES: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn new(path: &str, bytes: &[u8]) -> Self {
        InputDigest { path: path.to_string(), sha256: hex::encode(Sha256::digest(bytes)) }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub hypotheses: BTreeMap<String, bool>,
    pub results: Value,
    pub checks: Vec<Check>,
    pub exit_code: i32,
    /// Human-readable lines derived from `results`, rendered by [`Report::text`]
    /// with labels right-aligned on `=`.
    #[serde(skip)]
    pub summary: Vec<(String, String)>,
}

impl Report {
    pub fn new(command: &str, inputs: Vec<InputDigest>) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            hypotheses: BTreeMap::new(),
            results: Value::Object(Default::default()),
            checks: Vec::new(),
            exit_code: EXIT_OK,
            summary: Vec::new(),
        }
    }

    pub fn hypothesis(&mut self, name: &str, value: bool) {
        self.hypotheses.insert(name.to_string(), value);
    }

    pub fn result(&mut self, key: &str, value: Value) {
        if let Value::Object(map) = &mut self.results {
            map.insert(key.to_string(), value);
        }
    }

    pub fn line(&mut self, label: impl Into<String>, value: impl Into<String>) {
        self.summary.push((label.into(), value.into()));
    }

    pub fn checks(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    /// 2 if a check failed, else 3 if a hypothesis is false, else 0.
    pub fn settle(&mut self) {
        self.exit_code = if self.checks.iter().any(|c| !c.passed) {
            EXIT_THEOREM
        } else if self.hypotheses.values().any(|v| !v) {
            EXIT_OUT_OF_HYPOTHESES
        } else {
            EXIT_OK
        };
    }

    pub fn fail_input(&mut self, message: String) {
        self.result("error", Value::from(message.clone()));
        self.line("error", message);
        self.exit_code = EXIT_INPUT;
    }

    /// Canonical JSON: sorted keys, two-space indentation, trailing newline.
    pub fn json(&self) -> String {
        let mut out = serde_json::to_string_pretty(&serde_json::to_value(self).expect("serializable")).expect("json");
        out.push('\n');
        out
    }

    pub fn text(&self) -> String {
        let mut rows: Vec<(String, String)> = vec![("command".into(), self.command.clone())];
        for input in &self.inputs {
            rows.push(("input".into(), format!("{}  sha256:{}", input.path, &input.sha256[..16])));
        }
        for (k, v) in &self.hypotheses {
            rows.push((format!("hypothesis {k}"), v.to_string()));
        }
        rows.extend(self.summary.iter().cloned());
        for c in &self.checks {
            rows.push((format!("check {}", c.claim), if c.passed { "PASS" } else { "FAIL" }.into()));
        }
        rows.push(("exit".into(), self.exit_code.to_string()));
        let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            let pad = width - k.chars().count();
            out.push_str(&format!("{}{k} = {v}\n", " ".repeat(pad)));
        }
        out
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            self.json()
        } else {
            self.text()
        }
    }
}

// ---------------------------------------------------------------------------
// Payload helpers shared by the commands.

pub fn functional_json(f: &Functional) -> Value {
    Value::from(f.to_strings())
}

pub fn functionals_json(fs: &[Functional]) -> Value {
    Value::from(fs.iter().map(functional_json).collect::<Vec<_>>())
}

/// `{(a), (b)}`, or `{}` when empty.
pub fn set_text(fs: &[Functional]) -> String {
    let items: Vec<String> = fs.iter().map(Functional::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

pub fn subspace_json(s: &Subspace) -> Value {
    Value::from(s.basis_vectors().map(rational::format_all).collect::<Vec<_>>())
}

pub fn subspace_text(names: &[String], s: &Subspace) -> String {
    if s.is_zero() {
        return "0".into();
    }
    format!("span{{{}}}", crate::split::describe(names, s).join(", "))
}

pub fn partition_json(p: &Partition) -> Value {
    Value::from(p.classes().iter().map(|c| functionals_json(c)).collect::<Vec<_>>())
}

pub fn partition_text(p: &Partition) -> String {
    let classes: Vec<String> = p.classes().iter().map(|c| set_text(c)).collect();
    format!("[{}]", classes.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        let mut r = Report::new("weights", vec![InputDigest::new("m.json", b"{}")]);
        r.hypothesis("symmetric", true);
        r.result("weights", functionals_json(&[]));
        r.line("P", set_text(&[]));
        r.checks([Check { claim: "c".into(), passed: true }]);
        r.settle();
        assert_eq!(r.exit_code, 0);
        let text = r.text();
        assert!(text.contains("P = {}"));
        assert!(text.lines().all(|l| l.find(" = ") == text.lines().next().unwrap().find(" = ")));
        let parsed: Value = serde_json::from_str(&r.json()).unwrap();
        assert_eq!(parsed, serde_json::to_value(&r).unwrap());
        assert_eq!(set_text(&[Functional::from_ints(&[-2]), Functional::from_ints(&[2])]), "{(-2), (2)}");
    }

    #[test]
    fn exit_codes() {
        let mut r = Report::new("x", vec![]);
        r.hypothesis("h", false);
        r.settle();
        assert_eq!(r.exit_code, EXIT_OUT_OF_HYPOTHESES);
        r.checks([Check { claim: "c".into(), passed: false }]);
        r.settle();
        assert_eq!(r.exit_code, EXIT_THEOREM);
    }
}
