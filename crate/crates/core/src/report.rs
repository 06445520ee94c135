//! Verification reports: one entry per checked identity.

use std::fmt;

use serde::Serialize;

use crate::tensor::Mismatch;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub index: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

impl From<&Mismatch> for Witness {
    fn from(m: &Mismatch) -> Self {
        Witness { index: m.index.clone(), lhs: m.lhs.to_string(), rhs: m.rhs.to_string() }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.index.iter().map(|i| i.to_string()).collect();
        write!(f, "at ({}): lhs={} rhs={}", idx.join(","), self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    /// Short machine-readable name of the identity.
    pub id: String,
    /// Anchor tag of the identity, e.g. `(q3)`.
    pub anchor: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Extra detail for failures that have no entry witness (e.g. a missing inverse).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Entry {
    pub fn from_mismatch(id: &str, anchor: &str, m: Option<Mismatch>) -> Self {
        Entry {
            id: id.to_string(),
            anchor: anchor.to_string(),
            passed: m.is_none(),
            witness: m.as_ref().map(Witness::from),
            note: None,
        }
    }

    pub fn failed(id: &str, anchor: &str, note: impl Into<String>) -> Self {
        Entry { id: id.to_string(), anchor: anchor.to_string(), passed: false, witness: None, note: Some(note.into()) }
    }

    pub fn passed(id: &str, anchor: &str) -> Self {
        Entry { id: id.to_string(), anchor: anchor.to_string(), passed: true, witness: None, note: None }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub entries: Vec<Entry>,
    /// Observations that are not pass/fail checks, such as two constructions
    /// that were expected to agree but do not.
    pub findings: Vec<String>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, e: Entry) {
        self.entries.push(e);
    }

    pub fn check(&mut self, id: &str, anchor: &str, m: Option<Mismatch>) -> bool {
        let e = Entry::from_mismatch(id, anchor, m);
        let ok = e.passed;
        self.entries.push(e);
        ok
    }

    pub fn finding(&mut self, s: impl Into<String>) {
        self.findings.push(s.into());
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.entries.extend(other.entries);
        self.findings.extend(other.findings);
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn get(&self, id: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let status = if e.passed { "PASS" } else { "FAIL" };
            write!(f, "{status} {:<8} {}", e.anchor, e.id)?;
            if let Some(w) = &e.witness {
                write!(f, "  {w}")?;
            }
            if let Some(n) = &e.note {
                write!(f, "  {n}")?;
            }
            writeln!(f)?;
        }
        for s in &self.findings {
            writeln!(f, "FINDING {s}")?;
        }
        let failed = self.failures().count();
        writeln!(f, "{} checks, {} failed", self.entries.len(), failed)
    }
}
