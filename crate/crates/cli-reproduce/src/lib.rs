//! Library behind the `reproduce` command-line driver.
//!
//! Every command computes one or more [`Table`]s — finite-length energies,
//! large-twist series, expansions about the second pseudo-vacuum,
//! trajectory energies and excitation curves — which the binary writes as
//! CSV files with a one-line header and 17 significant digits.  Figure
//! presets ([`figure`]) bundle the exact parameter sets of the published
//! plots.  Outputs are deterministic and written atomically.

pub mod commands;
pub mod figures;
pub mod grid;
pub mod table;

pub use commands::{
    excitation_model, excitations, pseudovacuum, series, solve, trajectory, ConfigName, ExcitationMethod, ExcitedState,
    TrajectoryName,
};
pub use figures::{describe, figure, small_m_energy, FIGURES};
pub use grid::{linspace, x_of_phi};
pub use table::{bundle_paths, command_paths, write_all, Cell, Table};
