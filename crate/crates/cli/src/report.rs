use std::path::Path;
use std::time::Instant;

use anyhow::Context;
use k4v_core::CheckReport;
use serde::Serialize;

/// One line of the machine-readable report.
#[derive(Debug, Serialize)]
pub struct CheckStatus {
    pub name: String,
    pub passed: bool,
    pub checked: u64,
    pub failures: u64,
    pub counterexample: Option<String>,
}

impl From<&CheckReport> for CheckStatus {
    fn from(r: &CheckReport) -> Self {
        Self {
            name: r.name.clone(),
            passed: r.passed(),
            checked: r.checked,
            failures: r.failures,
            counterexample: r.first_counterexample.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    pub arguments: serde_json::Value,
    pub seed: Option<u64>,
    pub passed: bool,
    pub checks: Vec<CheckStatus>,
    pub elapsed_ms: u128,
    pub result: serde_json::Value,
}

/// Accumulates checks and the result payload of one command.
pub struct ReportBuilder {
    command: &'static str,
    arguments: serde_json::Value,
    seed: Option<u64>,
    checks: Vec<CheckStatus>,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(command: &'static str, arguments: &impl Serialize) -> anyhow::Result<Self> {
        Ok(Self {
            command,
            arguments: serde_json::to_value(arguments)?,
            seed: None,
            checks: Vec::new(),
            started: Instant::now(),
        })
    }

    pub fn seed(&mut self, seed: u64) {
        self.seed = Some(seed);
    }

    pub fn check(&mut self, report: &CheckReport) {
        self.checks.push(report.into());
    }

    pub fn checks<'a>(&mut self, reports: impl IntoIterator<Item = &'a CheckReport>) {
        for r in reports {
            self.check(r);
        }
    }

    /// A single yes/no condition.
    pub fn condition(&mut self, name: &str, ok: bool, counterexample: impl FnOnce() -> String) {
        let mut r = CheckReport::new(name);
        r.record(ok, counterexample);
        self.check(&r);
    }

    pub fn finish(self, result: &impl Serialize) -> anyhow::Result<RunReport> {
        Ok(RunReport {
            command: self.command,
            arguments: self.arguments,
            seed: self.seed,
            passed: self.checks.iter().all(|c| c.passed),
            checks: self.checks,
            elapsed_ms: self.started.elapsed().as_millis(),
            result: serde_json::to_value(result)?,
        })
    }
}

pub fn emit(report: &RunReport, out: Option<&Path>) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(report)?;
    match out {
        Some(path) => std::fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}
