use thiserror::Error;

/// Errors raised while building finite-size realisations of a filling.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum FillingError {
    #[error("chain length L = {0} must be even and positive")]
    BadLength(usize),
    #[error("m·L = {count} is not an integer (m = {m}, L = {length})")]
    NonIntegerCount { m: f64, length: usize, count: f64 },
    #[error("interval ({lo}, {hi}) is narrower than 1/L at L = {length}")]
    IntervalTooNarrow { lo: f64, hi: f64, length: usize },
    #[error("filling has no finite-size realisation: {0}")]
    NotRealisable(String),
}
