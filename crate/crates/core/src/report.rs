//! Verification reports shared by every checker in the crate.
//!
//! A report is `Pass` only when a check was exhaustive (or exact) and found
//! nothing. Bounded or sampled searches that find nothing are `Inconclusive`.

use serde::{Deserialize, Serialize};

/// Findings beyond this count are tallied but not stored.
pub const MAX_STORED_FINDINGS: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    /// Name of the law or property, e.g. `"malcev-left"`.
    pub law: String,
    /// Element ids (or rendered elements) where the law was tested.
    pub location: Vec<String>,
    /// Human readable description of the witness.
    pub witness: String,
}

impl Finding {
    pub fn new(law: impl Into<String>, location: Vec<String>, witness: impl Into<String>) -> Self {
        Finding {
            law: law.into(),
            location,
            witness: witness.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub status: Status,
    /// Violations (status `fail`) or informational records.
    pub findings: Vec<Finding>,
    pub violation_count: usize,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            status: Status::Pass,
            findings: Vec::new(),
            violation_count: 0,
            notes: Vec::new(),
        }
    }

    /// Records a violation; the report becomes `Fail`.
    pub fn violation(&mut self, finding: Finding) {
        self.status = Status::Fail;
        self.violation_count += 1;
        if self.findings.len() < MAX_STORED_FINDINGS {
            self.findings.push(finding);
        }
    }

    /// Records an informational finding without changing the status.
    pub fn record(&mut self, finding: Finding) {
        if self.findings.len() < MAX_STORED_FINDINGS {
            self.findings.push(finding);
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Downgrades a clean report to `Inconclusive`. Failures stay failures.
    pub fn mark_bounded(&mut self, why: impl Into<String>) {
        if self.status == Status::Pass {
            self.status = Status::Inconclusive;
        }
        self.notes.push(why.into());
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }

    /// Clean means no violation found, whether or not the search was exhaustive.
    pub fn is_clean(&self) -> bool {
        self.violation_count == 0
    }

    /// Folds another report in; failure dominates, then inconclusive.
    pub fn absorb(&mut self, other: Report) {
        self.violation_count += other.violation_count;
        for f in other.findings {
            if self.findings.len() < MAX_STORED_FINDINGS {
                self.findings.push(f);
            }
        }
        self.notes.extend(other.notes);
        self.status = match (self.status, other.status) {
            (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
            (Status::Inconclusive, _) | (_, Status::Inconclusive) => Status::Inconclusive,
            _ => Status::Pass,
        };
    }

    pub fn summary(&self) -> String {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        };
        match self.findings.first() {
            Some(f) if self.is_fail() => format!(
                "{}: {status}, {} violation(s), first: {} at ({}) {}",
                self.subject,
                self.violation_count,
                f.law,
                f.location.join(", "),
                f.witness
            ),
            _ => format!("{}: {status}", self.subject),
        }
    }
}
