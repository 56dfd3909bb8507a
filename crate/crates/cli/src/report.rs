//! Verification reports: one record per check, rendered as text or JSON.

use std::fmt::Display;

use serde::Serialize;
use serde_json::Value;

pub const REPORT_SCHEMA: &str = "tableaux-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub actual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Check {
    fn new(name: impl Into<String>, n: Option<usize>, status: Status) -> Check {
        Check {
            name: name.into(),
            n,
            status,
            expected: None,
            actual: None,
            counterexample: None,
            note: None,
            elapsed_ms: None,
        }
    }

    /// Passes iff the two renderings coincide; both are kept either way.
    pub fn equal(name: impl Into<String>, n: Option<usize>, expected: impl Display, actual: impl Display) -> Check {
        let (e, a) = (expected.to_string(), actual.to_string());
        let status = if e == a { Status::Pass } else { Status::Fail };
        Check { expected: Some(e), actual: Some(a), ..Check::new(name, n, status) }
    }

    /// Passes iff `ok`; a failure must come with a counterexample.
    pub fn holds(name: impl Into<String>, n: Option<usize>, ok: bool, counterexample: Value) -> Check {
        if ok {
            Check::new(name, n, Status::Pass)
        } else {
            Check { counterexample: Some(counterexample), ..Check::new(name, n, Status::Fail) }
        }
    }

    pub fn skipped(name: impl Into<String>, n: Option<usize>, note: impl Into<String>) -> Check {
        Check { note: Some(note.into()), ..Check::new(name, n, Status::Skipped) }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Check {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema: &'static str,
    pub suite: String,
    pub n_range: [usize; 2],
    pub checks: Vec<Check>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, n_range: [usize; 2], checks: Vec<Check>) -> VerificationReport {
        let passed = checks.iter().all(|c| c.status != Status::Fail);
        VerificationReport { schema: REPORT_SCHEMA, suite: suite.into(), n_range, checks, passed, elapsed_ms: None }
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            out.push_str(&format!("{tag}  {}", c.name));
            if let Some(n) = c.n {
                out.push_str(&format!(" [n={n}]"));
            }
            match (&c.expected, &c.actual) {
                (Some(e), Some(a)) if e == a => out.push_str(&format!(": {a}")),
                (Some(e), Some(a)) => out.push_str(&format!(": expected {e}, got {a}")),
                _ => {}
            }
            if let Some(x) = &c.counterexample {
                out.push_str(&format!("; counterexample {x}"));
            }
            if let Some(note) = &c.note {
                out.push_str(&format!(" ({note})"));
            }
            if let Some(ms) = c.elapsed_ms {
                out.push_str(&format!(" {ms} ms"));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "{} n={}..{}: {} passed, {} failed, {} skipped",
            self.suite,
            self.n_range[0],
            self.n_range[1],
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped)
        ));
        if let Some(ms) = self.elapsed_ms {
            out.push_str(&format!(", {ms} ms"));
        }
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_carry_evidence() {
        let c = Check::equal("x", Some(3), 7, 8);
        assert_eq!(c.status, Status::Fail);
        assert_eq!((c.expected.as_deref(), c.actual.as_deref()), (Some("7"), Some("8")));
        let c = Check::holds("y", None, false, Value::from("T"));
        assert!(c.counterexample.is_some());
        let r = VerificationReport::new("s", [1, 2], vec![Check::equal("x", None, 1, 1), Check::skipped("z", None, "bound")]);
        assert!(r.passed);
        assert!(r.to_text().ends_with("s n=1..2: 1 passed, 0 failed, 1 skipped\n"));
        assert!(r.to_json().starts_with("{\n  \"schema\": \"tableaux-report/1\""));
    }
}
