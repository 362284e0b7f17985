//! Energy expansions along trajectories through moment space.
//!
//! A trajectory is a one-parameter family of fillings `ξ ↦ X_a(ξ)` that
//! starts at the second pseudo-vacuum (`ξ = 0`).  Its moment derivatives are
//! encoded as point-evaluation functionals `Ξ^p` acting on functions of `t`
//! ([`functional_traj1`], [`functional_traj2`]); the pseudo-vacuum tower
//! turns them into the energy coefficients `F(ξ) = Σ_p f_p ξ^p`
//! ([`trajectory_energy`]).  Partial sums at the target `ξ` are extrapolated
//! with an `a + b/k` fit ([`extrapolate`]), and two real-group energies
//! combine into an energy of the non-compact chain ([`assemble_sl2c`]).

mod error;
mod functionals;
mod trajectory;

pub use error::TrajectoryError;
pub use functionals::{functional_traj1, functional_traj2};
pub use trajectory::{
    assemble_sl2c, extrapolate, trajectory_energy, Extrapolation, TrajectoryName, TrajectorySpec, DEFAULT_TRAJ1_ORDER,
    DEFAULT_TRAJ2_ORDER,
};
