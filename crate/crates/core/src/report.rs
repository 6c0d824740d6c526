//! Verification reports: named checks with verdicts and failure witnesses.

use serde::Serialize;
use std::fmt;

/// Outcome of one named check. Asserted checks hold or fail; reported-only
/// checks never fail a run, they just record what was observed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    ReportedOnly,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    /// Observation for reported-only checks, extra context otherwise.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Failure witness: the offending object and both sides.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        VerificationReport { checks: Vec::new() }
    }

    pub fn assert_check(&mut self, name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        self.checks.push(Check {
            name: name.into(),
            verdict: if ok { Verdict::Holds } else { Verdict::Fails },
            detail: None,
            witness: if ok { None } else { Some(witness()) },
        });
    }

    pub fn report_only(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            verdict: Verdict::ReportedOnly,
            detail: Some(detail.into()),
            witness: None,
        });
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_asserted_hold(&self) -> bool {
        self.checks.iter().all(|c| c.verdict != Verdict::Fails)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Fails)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serialization")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.verdict {
                Verdict::Holds => "PASS",
                Verdict::Fails => "FAIL",
                Verdict::ReportedOnly => "INFO",
            };
            out.push_str(&format!("[{}] {}", tag, c.name));
            if let Some(d) = &c.detail {
                out.push_str(&format!(": {}", d));
            }
            if let Some(w) = &c.witness {
                out.push_str(&format!("\n       witness: {}", w));
            }
            out.push('\n');
        }
        let failed = self.failures().count();
        out.push_str(&format!(
            "{} checks, {} failed\n",
            self.checks.len(),
            failed
        ));
        out
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
