//! Audit results shared by every checker.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

/// Witnesses kept per axiom.
pub const WITNESS_LIMIT: usize = 10;

/// One concrete counterexample to an identity.
///
/// For map identities `input` and `output` are the basis multi-indices of the
/// differing coefficient; for set-level identities `output` is empty and the
/// two sides are element labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub axiom: String,
    pub input: Vec<usize>,
    pub output: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub checked: Vec<String>,
    pub failures: Vec<Failure>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Registers an axiom as examined, whatever the outcome.
    pub fn record(&mut self, axiom: &str) {
        if !self.checked.iter().any(|a| a == axiom) {
            self.checked.push(String::from(axiom));
        }
    }

    pub fn fail(&mut self, failure: Failure) {
        self.record(&failure.axiom);
        let already = self
            .failures
            .iter()
            .filter(|f| f.axiom == failure.axiom)
            .count();
        if already < WITNESS_LIMIT {
            self.failures.push(failure);
        }
    }

    pub fn fail_simple(&mut self, axiom: &str, detail: String) {
        self.fail(Failure {
            axiom: String::from(axiom),
            input: Vec::new(),
            output: Vec::new(),
            lhs: detail,
            rhs: String::new(),
        });
    }

    pub fn merge(&mut self, other: AxiomReport) {
        for a in other.checked {
            self.record(&a);
        }
        for f in other.failures {
            self.fail(f);
        }
    }

    /// Merges `other`, prefixing its axiom names with `prefix: `.
    pub fn merge_prefixed(&mut self, prefix: &str, other: AxiomReport) {
        for a in other.checked {
            self.record(&format!("{prefix}: {a}"));
        }
        for mut f in other.failures {
            f.axiom = format!("{prefix}: {}", f.axiom);
            self.fail(f);
        }
    }

    /// Names of the axioms with at least one witness.
    pub fn failed_axioms(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for f in &self.failures {
            if !out.contains(&f.axiom.as_str()) {
                out.push(&f.axiom);
            }
        }
        out
    }

    pub fn summary(&self) -> String {
        if self.passed() {
            format!("{} axioms pass", self.checked.len())
        } else {
            let first = &self.failures[0];
            format!(
                "{} of {} axioms fail; first: {} at {:?}->{:?} ({} vs {})",
                self.failed_axioms().len(),
                self.checked.len(),
                first.axiom,
                first.input,
                first.output,
                first.lhs,
                first.rhs
            )
        }
    }
}
