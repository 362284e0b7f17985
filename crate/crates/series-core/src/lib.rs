//! Arithmetic on truncated series used throughout the Bethe-root expansions.
//!
//! The central object is [`CoeffTable`], a truncated two-index coefficient
//! array representing a bivariate series `Σ c_ab t^a x^b` about some base
//! point in `t`.  Products of such tables are truncated convolutions, and
//! repeated products are cached in a [`PowerFamily`].  The crate also
//! provides Taylor coefficients of `arctan` about arbitrary regular points,
//! the logarithmic expansion of `arctan` about `i`, Laurent constant-term
//! extraction, the point-evaluation functionals that encode moment
//! derivatives, and the [`EnergySeries`] container shared by the expansion
//! crates.
//!
//! Coefficients are generic over [`Scalar`], implemented for `Complex64` and
//! for [`Dual`] numbers (first-order perturbations in an auxiliary parameter
//! `η` with `η² = 0`).

mod arctan;
mod energy;
mod error;
mod functional;
mod laurent;
mod scalar;
mod table;
pub mod univariate;

pub use arctan::{arctan_log_coeffs, arctan_taylor_about, ArctanLogExpansion};
pub use energy::{EnergySeries, SeriesVariable};
pub use error::SeriesError;
pub use functional::{kappa, theta_derivative_at, EvaluationFunctional, FunctionalTerm};
pub use laurent::{laurent_constant_term, LaurentCoeffs};
pub use scalar::{Dual, Scalar};
pub use table::{binomial, compose, convolve, reinstate_linear, CoeffTable, PowerFamily};

/// Complex double, the base numeric type.
pub use num_complex::Complex64;
