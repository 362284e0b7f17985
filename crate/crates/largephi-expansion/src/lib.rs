//! Large-twist expansion of the thermodynamic energy.
//!
//! For a first-level root configuration the energy per site at twist `φ` is
//! `F(φ) = Σ_{b≥−1} f_b u^b` with `u = e^{−2φ}`, and each `f_b` is a
//! polynomial in finitely many moments `X_a` of the filling function.  The
//! coefficients follow from an exactly triangular recurrence on the root
//! deviation coefficients `c_ab` of `λ_k = i + Σ c_ab e^{2iπaI_k/L} u^b`.
//!
//! The recurrence is generic over [`Scalar`], so feeding it dual-number
//! moments yields first-order perturbations of the energy at no extra cost.

mod dual;
mod error;
mod recurrence;
mod series;

pub use dual::{dual_expansion_crosscheck, printed_dual_coefficients, DualCheck};
pub use error::ExpansionError;
pub use recurrence::{expand_coefficients, expand_generic, DeviationTables};
pub use series::{estimate_radius, evaluate, evaluate_u, stable_window};

pub use series_core::{EnergySeries, Scalar, SeriesVariable};
