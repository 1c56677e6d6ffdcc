//! Quaternionic quantization kinematics of a particle in a monopole field,
//! the exponential Weyl system built on it, and the coadjoint-orbit calculus
//! of the Poincaré group for massless particles.

pub mod ej;
pub mod error;
pub mod field;
pub mod orbit;
pub mod quat;
pub mod sampling;
pub mod weyl;

pub use error::{Error, Result};
