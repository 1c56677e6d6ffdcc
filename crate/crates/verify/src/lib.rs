//! Verification suites for `monopole-core` and the `verify` report format.
//!
//! Every identity is checked against an independent oracle (finite
//! differences, brute-force operator composition, characteristic
//! integration, solid angles) over a reproducible sample domain.

pub mod config;
pub mod emit;
pub mod report;
pub mod runner;
pub mod suites;

pub use config::{ConfigError, Suite, SuiteConfig};
pub use report::{CheckResult, VerificationReport};
pub use runner::run;
