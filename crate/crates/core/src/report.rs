//! Machine-readable verdicts for instantiated identities.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// One checked identity instance.  A failing report always carries a
/// witness term.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdentityReport {
    pub suite: String,
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    pub theta: u8,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub window: String,
    pub wall_ms: u64,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = match (self.n, self.m) {
            (Some(n), Some(m)) => format!("(n={n},m={m})"),
            (Some(n), None) => format!("(n={n})"),
            _ => String::new(),
        };
        write!(
            f,
            "[{}] {}{} theta={} {} ({} ms)",
            self.suite,
            self.label,
            params,
            self.theta,
            match self.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "FAIL",
            },
            self.wall_ms
        )?;
        if let Some(w) = &self.witness {
            write!(f, " witness: {w}")?;
        }
        Ok(())
    }
}

/// Helper for assembling reports with timing.
pub struct ReportBuilder {
    suite: String,
    label: String,
    n: Option<i64>,
    m: Option<i64>,
    theta: u8,
    window: String,
    start: std::time::Instant,
}

impl ReportBuilder {
    pub fn new(suite: &str, label: &str, theta: u8) -> Self {
        ReportBuilder {
            suite: suite.to_string(),
            label: label.to_string(),
            n: None,
            m: None,
            theta,
            window: "exact".to_string(),
            start: std::time::Instant::now(),
        }
    }

    pub fn params(mut self, n: Option<i64>, m: Option<i64>) -> Self {
        self.n = n;
        self.m = m;
        self
    }

    pub fn window(mut self, w: String) -> Self {
        self.window = w;
        self
    }

    pub fn verdict(self, ok: bool, witness: Option<String>) -> IdentityReport {
        IdentityReport {
            suite: self.suite,
            label: self.label,
            n: self.n,
            m: self.m,
            theta: self.theta,
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            witness: if ok { None } else { witness },
            window: self.window,
            wall_ms: self.start.elapsed().as_millis() as u64,
        }
    }
}
