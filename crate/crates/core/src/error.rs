use thiserror::Error;

/// Failure modes of the kinematics and orbit calculus.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A point lies inside the exclusion ball around the monopole.
    #[error("point at distance {norm:e} lies inside the exclusion radius {r_min:e}")]
    SingularPoint { norm: f64, r_min: f64 },

    /// `x` and `x + a` are anti-parallel, so the rotation axis of the cocycle is undefined.
    #[error("translation maps the point to its antipodal ray (deviation {deviation:e})")]
    AntipodalTranslation { deviation: f64 },

    /// Two vertices of a spherical triangle are parallel.
    #[error("spherical triangle is degenerate")]
    DegenerateTriangle,

    /// The solid angle is too small for the phase ratio to be meaningful.
    #[error("solid angle {solid_angle:e} is below the conditioning threshold")]
    IllConditioned { solid_angle: f64 },

    /// A quaternion is too short to carry a direction.
    #[error("quaternion norm {norm:e} is too small to normalize")]
    DegenerateQuaternion { norm: f64 },

    /// A wavefunction value is too small to divide by.
    #[error("wavefunction amplitude {norm:e} is too small to extract a phase")]
    NearZeroAmplitude { norm: f64 },

    /// Too many samples were rejected in a batch.
    #[error("{skipped} of {total} samples were inadmissible")]
    InsufficientSamples { skipped: usize, total: usize },

    /// A massless-orbit chart needs a non-vanishing momentum.
    #[error("momentum norm {norm:e} is below the chart threshold")]
    MomentumTooSmall { norm: f64 },

    /// A point of the dual Poincaré algebra is not on a positive-energy helicity orbit.
    #[error("point is off the massless orbit ({constraint} residual {residual:e})")]
    OffOrbit {
        constraint: &'static str,
        residual: f64,
    },

    /// Finite-difference structure constants do not round to a clean table.
    #[error("structure constants do not round cleanly (residual {residual:e})")]
    InconsistentTable { residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
