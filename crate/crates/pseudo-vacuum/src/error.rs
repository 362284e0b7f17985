use num_complex::Complex64;
use series_core::SeriesError;
use thiserror::Error;

/// Failures of the pseudo-vacuum kernels and derivative towers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PseudoVacuumError {
    #[error("kernel evaluated at its pole y = {y}")]
    KernelPole { y: Complex64 },
    #[error("x = {x} is outside (0, 1]")]
    XOutOfRange { x: f64 },
    #[error("tower order {requested} exceeds the supported maximum {max}")]
    OrderTooLarge { requested: usize, max: usize },
    #[error(
        "φ = {phi} is not above the mirror kernel's branch point φ_c = {phi_c}; \
         the m = 1 series has no analytic continuation there"
    )]
    SingularWindow { phi: f64, phi_c: f64 },
    #[error("tower denominator {value:e} at t = {point} is too close to zero")]
    SingularDenominator { point: Complex64, value: f64 },
    #[error("functional points {a} and {b} are distinct but closer than 1e−8")]
    PointCollision { a: Complex64, b: Complex64 },
    #[error("invalid functional list: {0}")]
    BadFunctional(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}
