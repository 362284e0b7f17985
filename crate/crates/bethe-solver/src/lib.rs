//! Finite-size solutions of the logarithmic Bethe equations of the
//! non-compact `s = −1` chain, with and without an imaginary extensive twist.
//!
//! The untwisted equations
//! `arctan λ_k = π I_k/L − (1/L) Σ_l arctan(λ_k − λ_l)`
//! are the stationarity conditions of a strictly convex potential, so they
//! are solved by damped Newton descent on that potential: the solution is
//! real, unique and ordered like the Bethe numbers.
//!
//! The twisted equations add `iφ` to the right-hand side (times `π`).  At
//! large `φ` every first-level root sits close to `i`, which gives an
//! explicit starting point; the solver then follows the solution down in `φ`
//! by continuation.  The mirror chain (`s = +1`), whose energies continue
//! the `s = −1` energies to negative densities, differs only by the sign of
//! the scattering kernel and of the energy.

mod error;
mod state;
mod twisted;
mod untwisted;

pub use error::SolverError;
pub use state::{energy, energy_s0, pseudo_vacuum_relation_defect, BetheState, Chain};
pub use twisted::{exp_form_residual, log_residual, solve_twisted, solve_twisted_sweep, TwistOptions};
pub use untwisted::{solve_untwisted, untwisted_residual};

pub use num_complex::Complex64;
