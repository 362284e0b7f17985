use largephi_expansion::ExpansionError;
use pseudo_vacuum::PseudoVacuumError;
use thiserror::Error;
use trajectory_explorer::TrajectoryError;

/// Failures of excitation computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExcitationError {
    #[error("z = {z} is outside [−1/2, 1/2] (the two ends are the same position)")]
    ZOutOfRange { z: f64 },
    #[error("scan grid needs at least {min} points, got {got}")]
    GridTooSmall { min: usize, got: usize },
    #[error("no paired excitation was found on the scanned grid")]
    NoPairs,
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
    #[error(transparent)]
    Tower(#[from] PseudoVacuumError),
    #[error(transparent)]
    Trajectory(#[from] TrajectoryError),
}
