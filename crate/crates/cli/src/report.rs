//! Machine-readable run reports.

use std::fmt::Write as _;

use hopfbrace_core::{AxiomReport, Failure};
use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

/// Report key excluded from golden comparisons.
pub const WALL_TIME_KEY: &str = "wall_time_ms";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureJson {
    pub axiom: String,
    pub input: Vec<usize>,
    pub output: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

impl From<&Failure> for FailureJson {
    fn from(f: &Failure) -> Self {
        FailureJson { axiom: f.axiom.clone(), input: f.input.clone(), output: f.output.clone(), lhs: f.lhs.clone(), rhs: f.rhs.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditJson {
    pub name: String,
    pub passed: bool,
    pub checked: Vec<String>,
    pub failures: Vec<FailureJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub version: String,
    /// `sha256:<hex>` of the input file bytes, when there is one.
    pub input_digest: Option<String>,
    pub passed: bool,
    pub audits: Vec<AuditJson>,
    pub details: Map<String, Value>,
    pub wall_time_ms: u64,
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

impl RunReport {
    pub fn new(command: impl Into<String>, input_digest: Option<String>) -> Self {
        RunReport {
            command: command.into(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            input_digest,
            passed: true,
            audits: Vec::new(),
            details: Map::new(),
            wall_time_ms: 0,
        }
    }

    pub fn audit(&mut self, name: &str, r: &AxiomReport) {
        self.passed &= r.passed();
        self.audits.push(AuditJson {
            name: name.to_string(),
            passed: r.passed(),
            checked: r.checked.clone(),
            failures: r.failures.iter().map(FailureJson::from).collect(),
        });
    }

    /// A single yes/no audit with a free-form reason on failure.
    pub fn check(&mut self, name: &str, ok: bool, reason: impl Into<String>) {
        let mut r = AxiomReport::new();
        r.record(name);
        if !ok {
            r.fail_simple(name, reason.into());
        }
        self.audit(name, &r);
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) {
        self.details.insert(key.to_string(), serde_json::to_value(value).expect("serializable"));
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        crate::schema::to_json(self)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "{} {verdict}", self.command);
        if let Some(d) = &self.input_digest {
            let _ = writeln!(s, "  input {d}");
        }
        for a in &self.audits {
            let mark = if a.passed { "ok  " } else { "FAIL" };
            let _ = writeln!(s, "  {mark} {} ({} axioms)", a.name, a.checked.len());
            for f in a.failures.iter().take(3) {
                let _ = writeln!(s, "       {} at {:?}->{:?}: {} vs {}", f.axiom, f.input, f.output, f.lhs, f.rhs);
            }
            if a.failures.len() > 3 {
                let _ = writeln!(s, "       ... {} more witnesses", a.failures.len() - 3);
            }
        }
        for (k, v) in &self.details {
            match v {
                Value::String(x) => {
                    let _ = writeln!(s, "  {k}: {x}");
                }
                Value::Array(_) | Value::Object(_) => {
                    let _ = writeln!(s, "  {k}: {}", serde_json::to_string(v).expect("value"));
                }
                other => {
                    let _ = writeln!(s, "  {k}: {other}");
                }
            }
        }
        s
    }
}

/// Strips the wall-time field so reports from different runs compare equal.
pub fn normalized(report_json: &str) -> Result<Value, serde_json::Error> {
    let mut v: Value = serde_json::from_str(report_json)?;
    if let Value::Object(m) = &mut v {
        m.remove(WALL_TIME_KEY);
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_is_sha256() {
        assert_eq!(digest(b"abc"), "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }

    #[test]
    fn audits_drive_the_verdict() {
        let mut r = RunReport::new("check", None);
        r.check("first", true, "");
        assert_eq!(r.exit_code(), 0);
        r.check("second", false, "broken");
        assert_eq!(r.exit_code(), 1);
        assert_eq!(r.audits[1].failures[0].axiom, "second");
        assert!(r.to_text().contains("FAIL second"));
    }

    #[test]
    fn normalization_drops_wall_time() {
        let mut a = RunReport::new("x", None);
        let mut b = a.clone();
        a.wall_time_ms = 3;
        b.wall_time_ms = 40;
        assert_eq!(normalized(&a.to_json()).unwrap(), normalized(&b.to_json()).unwrap());
    }
}
