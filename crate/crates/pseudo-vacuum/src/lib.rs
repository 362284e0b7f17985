//! Closed-form machinery at the second pseudo-vacuum and its mirror.
//!
//! At root density `m = −1` (all moments `X_a = −δ_{a0}`) the twisted Bethe
//! equations decouple in the thermodynamic limit and the root deviations are
//! generated by the closed-form kernel [`delta_kernel`]; the `m = +1`
//! configuration has its own kernel [`delta_kernel_mirror`].  Deforming the
//! moments away from either point order by order gives a tower of
//! generating functions `γ_p` ([`GammaTower`]) solved by nested Taylor
//! recurrences about the points the deformation reads, and with it the
//! energy as a power series in the deformation parameter.
//!
//! For the symmetric filling the deformation parameter is `m + 1` (or
//! `m − 1` at the mirror), giving [`derivatives_at_pseudovacuum`] and
//! [`mirror_derivatives_at_m1`] at any twist `φ = −½·log x`.  The same
//! engine, fed with other functionals, drives trajectories through moment
//! space and excitation energies.

mod derivatives;
mod error;
mod kernel;
mod tower;

pub use derivatives::{
    derivatives_at_pseudovacuum, first_derivative_closed_form, gamma_tower, mirror_derivatives_at_m1,
    mirror_first_derivative_closed_form, mu_functionals, DEFAULT_DERIVATIVE_ORDER, MAX_DERIVATIVE_ORDER,
};
pub use error::PseudoVacuumError;
pub use kernel::{delta_kernel, delta_kernel_mirror, mirror_critical_phi, Kernel, MIRROR_BRANCH_X};
pub use tower::{GammaTower, MIN_DENOMINATOR, ORIGIN_T_ORDER};
