use thiserror::Error;

/// Failures of the finite-size solver.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolverError {
    #[error("Bethe numbers must be distinct (repeated value {0})")]
    DuplicateNumbers(f64),
    #[error("chain length L = {0} must be even and positive")]
    BadLength(usize),
    #[error("Bethe number {number} lies outside the admissible range |I| < {bound}")]
    OutOfRange { number: f64, bound: f64 },
    #[error("Bethe numbers must be integers for odd N and half-integers for even N (got {0})")]
    WrongParity(f64),
    #[error("no convergence after {iterations} iterations (max residual {max_residual:e})")]
    NoConvergence { iterations: usize, max_residual: f64 },
    #[error("singular Jacobian at twist φ = {phi}")]
    SingularJacobian { phi: f64 },
    #[error("roots collided at twist φ = {phi} (separation {separation:e})")]
    RootCollision { phi: f64, separation: f64 },
    #[error("continuation stalled at twist φ = {phi}")]
    ContinuationStalled { phi: f64 },
    #[error("twist must be positive for the twisted solver (got {0})")]
    BadTwist(f64),
    #[error("a root sits on the pole ±i of the energy")]
    Pole,
}
