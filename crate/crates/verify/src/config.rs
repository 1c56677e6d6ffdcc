use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use monopole_core::ej::Kinematics;
use monopole_core::sampling::SampleDomain;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Quat,
    Ej,
    Weyl,
    Orbit,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Quat, Suite::Ej, Suite::Weyl, Suite::Orbit];

    pub fn as_str(&self) -> &'static str {
        match self {
            Suite::Quat => "quat",
            Suite::Ej => "ej",
            Suite::Weyl => "weyl",
            Suite::Orbit => "orbit",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "quat" => Ok(Suite::Quat),
            "ej" => Ok(Suite::Ej),
            "weyl" => Ok(Suite::Weyl),
            "orbit" => Ok(Suite::Orbit),
            other => Err(ConfigError::UnknownSuite(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("unknown suite `{0}` (expected quat, ej, weyl or orbit)")]
    UnknownSuite(String),
    #[error("{name} must be a positive finite number, got {value}")]
    NotPositive { name: &'static str, value: f64 },
    #[error("samples must be at least 1")]
    NoSamples,
    #[error("fd_step ({fd_step}) must be smaller than r_min ({r_min})")]
    StepTooLarge { fd_step: f64, r_min: f64 },
    #[error("box half-width ({half_width}) must exceed r_min ({r_min})")]
    BoxTooSmall { half_width: f64, r_min: f64 },
    #[error("no suites selected")]
    NoSuites,
}

/// Everything that determines a verification run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: usize,
    pub tol_exact: f64,
    pub tol_fd: f64,
    pub fd_step: f64,
    pub r_min: f64,
    #[serde(rename = "box")]
    pub half_width: f64,
    pub suites: BTreeSet<Suite>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            samples: 10_000,
            tol_exact: 1e-12,
            tol_fd: 1e-6,
            fd_step: 1e-4,
            r_min: 0.1,
            half_width: 3.0,
            suites: Suite::ALL.into_iter().collect(),
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        for (name, value) in [
            ("tol_exact", self.tol_exact),
            ("tol_fd", self.tol_fd),
            ("fd_step", self.fd_step),
            ("r_min", self.r_min),
            ("box", self.half_width),
        ] {
            if !(value > 0.0 && value.is_finite()) {
                return Err(ConfigError::NotPositive { name, value });
            }
        }
        if self.samples == 0 {
            return Err(ConfigError::NoSamples);
        }
        if self.fd_step >= self.r_min {
            return Err(ConfigError::StepTooLarge {
                fd_step: self.fd_step,
                r_min: self.r_min,
            });
        }
        if self.half_width <= self.r_min {
            return Err(ConfigError::BoxTooSmall {
                half_width: self.half_width,
                r_min: self.r_min,
            });
        }
        if self.suites.is_empty() {
            return Err(ConfigError::NoSuites);
        }
        Ok(())
    }

    pub fn kinematics(&self) -> Kinematics {
        Kinematics {
            r_min: self.r_min,
            fd_step: self.fd_step,
            ..Kinematics::default()
        }
    }

    pub fn domain(&self) -> SampleDomain {
        SampleDomain {
            half_width: self.half_width,
            r_min: self.r_min,
            count: self.samples,
            seed: self.seed,
            ..SampleDomain::default()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_is_valid() {
        assert_eq!(SuiteConfig::default().validate(), Ok(()));
    }

    #[test]
    fn step_must_stay_inside_exclusion_radius() {
        let c = SuiteConfig {
            fd_step: 0.1,
            ..SuiteConfig::default()
        };
        assert!(matches!(c.validate(), Err(ConfigError::StepTooLarge { .. })));
    }

    #[test]
    fn rejects_bad_values() {
        let c = SuiteConfig {
            tol_fd: f64::NAN,
            ..SuiteConfig::default()
        };
        assert!(matches!(c.validate(), Err(ConfigError::NotPositive { name: "tol_fd", .. })));
        assert!("spin".parse::<Suite>().is_err());
        assert_eq!(" orbit".parse::<Suite>(), Ok(Suite::Orbit));
    }
}
