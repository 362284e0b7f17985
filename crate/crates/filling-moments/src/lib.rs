//! Filling functions of Bethe-root configurations and their Fourier moments.
//!
//! In the thermodynamic limit a root configuration is described by a filling
//! function `χ(x)` on the circle of scaled Bethe numbers `x = I/L`, and the
//! energy series only depend on its moments
//! `X_a = ∫ χ(x) e^{2iπax} dx`.  The named fillings come with closed forms
//! that are entire in the density `m`, which is what makes the continuation to
//! negative densities possible.
//!
//! The crate also produces the concrete finite-size Bethe-number sets that
//! realise a filling at chain length `L`, for use by the numerical solver.

mod config;
mod error;
mod moments;
mod numbers;

pub use config::{traj1_filling, traj2_filling, FillingConfig, FillingKind, Interval};
pub use error::FillingError;
pub use moments::{
    moments_edgesplit, moments_piecewise, moments_standard, moments_threeblock, perturb_moments, perturbation_mode,
    MomentProvider,
};
pub use numbers::bethe_numbers_for;

pub use num_complex::Complex64;
