use std::time::Duration;

use serde::Serialize;

use crate::config::{Suite, SuiteConfig};

/// Running aggregate over the samples of one check.
///
/// Merging is commutative and associative, so the result does not depend on
/// the order samples are evaluated in.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Tally {
    pub used: usize,
    pub skipped: usize,
    pub max_err: f64,
}

impl Tally {
    pub fn error(err: f64) -> Self {
        Self {
            used: 1,
            skipped: 0,
            max_err: if err.is_nan() { f64::INFINITY } else { err.abs() },
        }
    }

    pub fn skip() -> Self {
        Self {
            used: 0,
            skipped: 1,
            max_err: 0.0,
        }
    }

    pub fn merge(self, other: Tally) -> Tally {
        Tally {
            used: self.used + other.used,
            skipped: self.skipped + other.skipped,
            max_err: self.max_err.max(other.max_err),
        }
    }
}

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub suite: Suite,
    pub samples_used: usize,
    pub samples_skipped: usize,
    pub max_abs_err: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub convention_notes: String,
}

/// `err ≤ tol` and fewer skipped than half the used samples. NaN never passes.
pub fn passes(err: f64, tolerance: f64, used: usize, skipped: usize) -> bool {
    err <= tolerance && used > 0 && (skipped as f64) < 0.5 * used as f64
}

impl CheckResult {
    pub fn new(name: &str, suite: Suite, tally: Tally, tolerance: f64, notes: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            suite,
            samples_used: tally.used,
            samples_skipped: tally.skipped,
            max_abs_err: tally.max_err,
            tolerance,
            pass: passes(tally.max_err, tolerance, tally.used, tally.skipped),
            convention_notes: notes.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub config: SuiteConfig,
    pub checks: Vec<CheckResult>,
    /// Not serialized: it would break byte-stability of the emitted files.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// 0 when every check passes, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }
}
