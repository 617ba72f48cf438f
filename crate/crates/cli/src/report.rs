use crate::config::Format;
use crate::CliError;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// A documented discrepancy; reported but not counted as a failure.
    Known,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Known => "KNOWN",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    pub fn known(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Known,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Report {
            suite: suite.to_string(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, cs: impl IntoIterator<Item = Check>) {
        self.checks.extend(cs);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Text => {
                let mut s = String::new();
                for c in &self.checks {
                    s.push_str(&format!("{} {} {}\n", c.status.label(), c.name, c.detail).replace(" \n", "\n"));
                }
                s.push_str(&format!(
                    "suite {}: {}\n",
                    self.suite,
                    if self.passed() { "PASS" } else { "FAIL" }
                ));
                Ok(s)
            }
            Format::Json => {
                let checks: Vec<Value> = self
                    .checks
                    .iter()
                    .map(|c| json!({"name": c.name, "status": c.status.label(), "detail": c.detail}))
                    .collect();
                Ok(crate::to_json(&json!({
                    "suite": self.suite,
                    "passed": self.passed(),
                    "checks": checks,
                })))
            }
            Format::Dot => Err(CliError::Parse("verify does not support --format dot".into())),
        }
    }
}
