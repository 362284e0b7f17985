use thiserror::Error;

/// Errors of the large-twist expansion.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExpansionError {
    #[error("truncation order must be at least {min} (got {got})")]
    OrderTooSmall { min: usize, got: usize },
    #[error("at least {needed} coefficients are required for a radius estimate (got {got})")]
    TooFewCoefficients { needed: usize, got: usize },
    #[error("the series has a nonzero u^-1 term and diverges at φ = {phi}")]
    DivergentLeadingTerm { phi: f64 },
    #[error("only orders up to {max} in m are available for the dual check (requested {requested})")]
    DualOrderTooHigh { max: usize, requested: usize },
}
