//! The registered checks, one module per suite.
//!
//! Tolerances that are not configurable are fixed per tier below; the
//! configurable `tol_exact` and `tol_fd` tiers come from the run config.

pub mod ej;
pub mod orbit;
pub mod quat;
pub mod weyl;

/// Pure quaternion round-off over random unit-scale inputs.
pub const TOL_ROUNDOFF: f64 = 1e-13;
/// Analytic operators against five-point differences, and commutator identities.
pub const TOL_COMMUTATOR: f64 = 1e-8;
/// Weyl composition and closed-form identities.
pub const TOL_WEYL: f64 = 1e-10;
/// Coadjoint action identities.
pub const TOL_ORBIT: f64 = 1e-10;
/// Finite-difference regeneration of the coadjoint action and Lie–Poisson brackets.
pub const TOL_BRACKET: f64 = 1e-8;
/// Spread of the geometric-phase ratio and deviation of its magnitude from ½.
pub const TOL_PHASE: f64 = 1e-6;

/// `err / max(1, scale)`: absolute below unit scale, relative above it.
pub fn scaled(err: f64, scale: f64) -> f64 {
    err / scale.max(1.0)
}
