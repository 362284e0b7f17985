//! First-level particle–hole excitations above states at `m = −1`.
//!
//! Adding a root at scaled Bethe-number position `z` shifts the moments by
//! `η·e^{2iπaz}`; the energy change per unit `η` is the excitation curve
//! `∂_ηF(z)`.  It is available as a large-φ series
//! ([`eta_derivative_largephi`]), in closed form at `φ = 0` above the second
//! pseudo-vacuum ([`eta_derivative_pseudovacuum_phi0`]), and as a
//! ξ-expansion along a trajectory ([`eta_derivative_along_trajectory`]).
//! A physical excitation removes one root and adds one so that the energy
//! stays real; [`pair_real`] solves that constraint and [`gap_scan`]
//! reports the smallest resulting energy change.

mod curves;
mod error;
mod pairing;

pub use curves::{eta_derivative_along_trajectory, eta_derivative_largephi, eta_derivative_pseudovacuum_phi0};
pub use error::ExcitationError;
pub use pairing::{
    gap_scan, pair_real, ExcitationCurve, ExcitationKind, ExcitationModel, ExcitationPoint, GapScan, PairedExcitation,
    PairingReport,
};
