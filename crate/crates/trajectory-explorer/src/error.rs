use pseudo_vacuum::PseudoVacuumError;
use thiserror::Error;

/// Failures of trajectory expansions and their extrapolation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum TrajectoryError {
    #[error("trajectory functionals start at order 1; order 0 is the constant-term rule")]
    OrderZero,
    #[error("fit window has {got} partial sums but the two-parameter fit needs at least {needed}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("fit window [{k_min}, {k_max}] is outside the available partial sums 1..={available}")]
    BadWindow {
        k_min: usize,
        k_max: usize,
        available: usize,
    },
    #[error(transparent)]
    Tower(#[from] PseudoVacuumError),
}
