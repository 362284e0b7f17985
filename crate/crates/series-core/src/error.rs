use thiserror::Error;

/// Errors raised by series operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SeriesError {
    /// Two tables that must share a shape or base point do not.
    #[error("contract violation: {0}")]
    Contract(String),
    /// An expansion was requested about a singular point of the function.
    #[error("singular expansion point {point} ({what})")]
    SingularPoint { point: String, what: &'static str },
    /// A Laurent window does not contain the requested degree.
    #[error("degree {degree} outside Laurent window [{min}, {max}]")]
    OutsideWindow { degree: i64, min: i64, max: i64 },
    /// Not enough coefficients for the requested estimate.
    #[error("need at least {needed} coefficients, got {got}")]
    TooFewCoefficients { needed: usize, got: usize },
}
