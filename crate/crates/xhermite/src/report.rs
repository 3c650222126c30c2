//! Structured verification reports.
//!
//! Verifiers return the list of checks they ran and any failures with the
//! residual that witnesses the mismatch, rather than a bare boolean; the
//! CLI serializes these directly.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub subject: String,
    pub checks: Vec<String>,
    pub failures: Vec<CheckFailure>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckFailure {
    pub check: String,
    pub residual: String,
}

impl VerifyReport {
    pub fn new(subject: impl Into<String>) -> Self {
        VerifyReport {
            subject: subject.into(),
            checks: Vec::new(),
            failures: Vec::new(),
        }
    }

    /// Records one named check; on failure `residual` describes the
    /// offending difference.
    pub fn record(
        &mut self,
        check: impl Into<String>,
        passed: bool,
        residual: impl FnOnce() -> String,
    ) {
        let check = check.into();
        if !passed {
            self.failures.push(CheckFailure {
                check: check.clone(),
                residual: residual(),
            });
        }
        self.checks.push(check);
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn absorb(&mut self, other: VerifyReport) {
        self.checks.extend(other.checks);
        self.failures.extend(other.failures);
    }
}
