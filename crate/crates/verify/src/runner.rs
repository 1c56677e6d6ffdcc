use std::sync::OnceLock;
use std::time::Instant;

use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use monopole_core::ej::Kinematics;
use monopole_core::orbit::{Derivation, StructureConstants};
use monopole_core::sampling::SampleDomain;

use crate::config::{ConfigError, Suite, SuiteConfig};
use crate::report::{CheckResult, Tally, VerificationReport};
use crate::suites;

/// What a check hands back to the runner.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub tally: Tally,
    pub tolerance: f64,
    pub notes: String,
}

impl Outcome {
    pub fn new(tally: Tally, tolerance: f64, notes: impl Into<String>) -> Self {
        Self {
            tally,
            tolerance,
            notes: notes.into(),
        }
    }
}

/// A registered check. Names are unique and double as the randomness key.
#[derive(Clone, Copy)]
pub struct Check {
    pub name: &'static str,
    pub suite: Suite,
    pub run: fn(&Ctx) -> Outcome,
}

/// Shared, read-only state of one run.
pub struct Ctx {
    pub config: SuiteConfig,
    pub kin: Kinematics,
    pub domain: SampleDomain,
    table: OnceLock<monopole_core::Result<(StructureConstants, Derivation)>>,
}

impl Ctx {
    pub fn new(config: SuiteConfig) -> Self {
        Self {
            kin: config.kinematics(),
            domain: config.domain(),
            config,
            table: OnceLock::new(),
        }
    }

    pub fn samples(&self) -> usize {
        self.config.samples
    }

    /// The structure constants, derived on first use.
    pub fn table(&self) -> &monopole_core::Result<(StructureConstants, Derivation)> {
        self.table.get_or_init(StructureConstants::derive)
    }

    /// Evaluates `draw` for `count` sample indices, each with its own
    /// generator keyed by `id`. A sample is redrawn until `draw` yields an
    /// error value; it is counted as skipped only if every redraw fails.
    pub fn sample<F>(&self, id: &str, count: usize, draw: F) -> Tally
    where
        F: Fn(&SampleDomain, &mut ChaCha8Rng) -> Option<f64> + Sync,
    {
        (0..count)
            .into_par_iter()
            .map(|i| {
                let mut rng = self.domain.rng(id, i);
                match self.domain.draw_admissible(&mut rng, &draw) {
                    Some(err) => Tally::error(err),
                    None => Tally::skip(),
                }
            })
            .reduce(Tally::default, Tally::merge)
    }

    /// Like [`Ctx::sample`] but keeps the values, in index order, with the
    /// number of skipped indices.
    pub fn collect<T, F>(&self, id: &str, count: usize, draw: F) -> (Vec<T>, usize)
    where
        T: Send,
        F: Fn(&SampleDomain, &mut ChaCha8Rng) -> Option<T> + Sync,
    {
        let drawn: Vec<Option<T>> = (0..count)
            .into_par_iter()
            .map(|i| {
                let mut rng = self.domain.rng(id, i);
                self.domain.draw_admissible(&mut rng, &draw)
            })
            .collect();
        let skipped = drawn.iter().filter(|d| d.is_none()).count();
        (drawn.into_iter().flatten().collect(), skipped)
    }
}

/// All registered checks, sorted by name.
pub fn registry() -> Vec<Check> {
    let mut all: Vec<Check> = [
        suites::quat::checks(),
        suites::ej::checks(),
        suites::weyl::checks(),
        suites::orbit::checks(),
    ]
    .concat();
    all.sort_by_key(|c| c.name);
    all
}

/// Runs every check of the selected suites.
pub fn run(config: &SuiteConfig) -> Result<VerificationReport, ConfigError> {
    config.validate()?;
    let start = Instant::now();
    let ctx = Ctx::new(config.clone());
    let selected: Vec<Check> = registry()
        .into_iter()
        .filter(|c| config.suites.contains(&c.suite))
        .collect();
    let checks = selected
        .par_iter()
        .map(|c| {
            let o = (c.run)(&ctx);
            CheckResult::new(c.name, c.suite, o.tally, o.tolerance, o.notes)
        })
        .collect();
    Ok(VerificationReport {
        seed: config.seed,
        config: config.clone(),
        checks,
        wall_time: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;

    #[test]
    fn names_are_unique_and_prefixed_by_suite() {
        let all = registry();
        let names: BTreeSet<_> = all.iter().map(|c| c.name).collect();
        assert_eq!(names.len(), all.len());
        for c in &all {
            assert!(c.name.starts_with(&format!("{}.", c.suite)), "{}", c.name);
        }
    }

    #[test]
    fn sampling_is_independent_of_scheduling() {
        let ctx = Ctx::new(SuiteConfig::default());
        let draw = |d: &SampleDomain, r: &mut ChaCha8Rng| Some(d.point(r).norm());
        let a = ctx.sample("probe", 500, draw);
        let b = ctx.sample("probe", 500, draw);
        assert_eq!(a, b);
        let (v, skipped) = ctx.collect("probe", 500, draw);
        assert_eq!(skipped, 0);
        assert_eq!(v.iter().cloned().fold(0.0, f64::max), a.max_err);
    }
}
