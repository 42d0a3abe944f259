//! Pass/fail records shared by the verification routines.

use serde::{Deserialize, Serialize};

/// Outcome of one named identity check over a family of cases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub checked: u64,
    pub failures: u64,
    pub first_counterexample: Option<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self { name: name.into(), checked: 0, failures: 0, first_counterexample: None }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Record one case; `describe` is only called for the first failure.
    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(describe());
            }
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.failures += other.failures;
        if self.first_counterexample.is_none() {
            self.first_counterexample = other.first_counterexample;
        }
    }
}

pub fn all_passed<'a>(reports: impl IntoIterator<Item = &'a CheckReport>) -> bool {
    reports.into_iter().all(CheckReport::passed)
}
