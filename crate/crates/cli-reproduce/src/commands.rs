use crate::grid::x_of_phi;
use crate::table::Table;
use anyhow::{bail, Context, Result};
use bethe_solver::{energy, log_residual, solve_twisted_sweep, Chain, TwistOptions};
use clap::ValueEnum;
use excitations::{pair_real, ExcitationModel};
use filling_moments::{bethe_numbers_for, traj1_filling, FillingConfig, MomentProvider};
use largephi_expansion::{estimate_radius, evaluate_u, expand_coefficients, stable_window};
use num_complex::Complex64;
use pseudo_vacuum::{derivatives_at_pseudovacuum, first_derivative_closed_form};
use rayon::prelude::*;
use trajectory_explorer::{extrapolate, trajectory_energy, TrajectorySpec, DEFAULT_TRAJ1_ORDER, DEFAULT_TRAJ2_ORDER};

/// Tolerance defining the window on which a truncated large-φ series is
/// considered settled.
pub const SETTLED_TOLERANCE: f64 = 1e-3;

/// Root configuration families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConfigName {
    /// Roots packed symmetrically around the origin.
    Standard,
    /// Two blocks against the edges.
    Edgesplit,
    /// Three blocks.
    Threeblock,
}

impl ConfigName {
    pub fn at(self, m: f64) -> FillingConfig {
        match self {
            ConfigName::Standard => FillingConfig::standard(m),
            ConfigName::Edgesplit => FillingConfig::edge_split(m),
            ConfigName::Threeblock => FillingConfig::three_block(m),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ConfigName::Standard => "standard",
            ConfigName::Edgesplit => "edgesplit",
            ConfigName::Threeblock => "threeblock",
        }
    }
}

/// Named trajectories from the second pseudo-vacuum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TrajectoryName {
    Traj1,
    Traj2,
}

impl TrajectoryName {
    pub fn spec(self, order: Option<usize>) -> TrajectorySpec {
        match self {
            TrajectoryName::Traj1 => TrajectorySpec::ground_traj1(order.unwrap_or(DEFAULT_TRAJ1_ORDER)),
            TrajectoryName::Traj2 => TrajectorySpec::ground_traj2(order.unwrap_or(DEFAULT_TRAJ2_ORDER)),
        }
    }
}

/// States at `m = −1` above which excitations are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExcitedState {
    /// The lowest state, reached by the first trajectory at `ξ = 1/2`.
    Ground,
    /// The second pseudo-vacuum.
    Pseudovacuum,
}

/// How the excitation curve is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExcitationMethod {
    /// Exact or trajectory expansion at `φ = 0`, large-φ series otherwise.
    Auto,
    Largephi,
    Trajectory,
    /// Closed form (pseudo-vacuum at `φ = 0` only).
    Exact,
}

fn check_phis(phis: &[f64]) -> Result<()> {
    if phis.is_empty() {
        bail!("empty φ grid");
    }
    if let Some(p) = phis.iter().find(|p| !(p.is_finite() && **p >= 0.0)) {
        bail!("twist φ = {p} must be finite and non-negative");
    }
    Ok(())
}

/// Finite-length energies: columns `phi, x, energy_re, energy_im,
/// max_residual`.  Negative `m` uses the mirror chain with `|m|·L` roots,
/// whose energy continues the `s = −1` energy to negative density.
pub fn solve(config: ConfigName, m: f64, length: usize, phis: &[f64]) -> Result<Table> {
    check_phis(phis)?;
    if !m.is_finite() || m.abs() > 1.0 {
        bail!("density m = {m} must lie in [−1, 1]");
    }
    let mut table = Table::new("solver", &["phi", "x", "energy_re", "energy_im", "max_residual"]);
    if (m * length as f64).round() == 0.0 {
        if length == 0 || length % 2 == 1 {
            bail!("chain length {length} must be even and positive");
        }
        for &phi in phis {
            table.push(vec![
                phi.into(),
                x_of_phi(phi).into(),
                0.0.into(),
                0.0.into(),
                0.0.into(),
            ]);
        }
        return Ok(table);
    }
    let chain = if m < 0.0 { Chain::Mirror } else { Chain::SpinMinusOne };
    let numbers = bethe_numbers_for(&config.at(m.abs()), length)?;
    let states = solve_twisted_sweep(length, &numbers, phis, chain, &TwistOptions::default())?;
    for (phi, state) in phis.iter().zip(&states) {
        let e = energy(state)?;
        let res = log_residual(&state.roots, &numbers, length, *phi, chain)
            .iter()
            .fold(0.0f64, |a, r| a.max(r.norm()));
        table.push(vec![
            (*phi).into(),
            x_of_phi(*phi).into(),
            e.re.into(),
            e.im.into(),
            res.into(),
        ]);
    }
    Ok(table)
}

/// Large-φ series: values `phi, x, value_re, value_im, inside_window` plus
/// the coefficient table `b, f_re, f_im` and a summary with the estimated
/// radius and settled window.
pub fn series(config: ConfigName, m: f64, order: usize, phis: &[f64]) -> Result<Vec<Table>> {
    check_phis(phis)?;
    let s = expand_coefficients(&MomentProvider::Filling(config.at(m)), order)?;
    let radius = estimate_radius(&s)?;
    let window = stable_window(&s, SETTLED_TOLERANCE)?;
    let mut values = Table::new("values", &["phi", "x", "value_re", "value_im", "inside_window"]);
    for &phi in phis {
        let x = x_of_phi(phi);
        let v = evaluate_u(&s, x, phi)?;
        values.push(vec![
            phi.into(),
            x.into(),
            v.re.into(),
            v.im.into(),
            usize::from(x <= window).into(),
        ]);
    }
    let mut coeffs = Table::new("coefficients", &["b", "f_re", "f_im"]);
    for (k, c) in s.coeffs.iter().enumerate() {
        coeffs.push(vec![(k as i64 + s.min_index).into(), c.re.into(), c.im.into()]);
    }
    let mut summary = Table::new("summary", &["config", "m", "order", "radius", "settled_window"]);
    summary.push(vec![
        config.label().into(),
        m.into(),
        order.into(),
        radius.into(),
        window.into(),
    ]);
    Ok(vec![values, coeffs, summary])
}

/// Expansion of the symmetric-filling energy in powers of `m + 1` for each
/// twist: coefficients `phi, x, p, f_re, f_im`, and the first coefficient
/// against its closed form.
pub fn pseudovacuum(phis: &[f64], order: usize) -> Result<Vec<Table>> {
    check_phis(phis)?;
    let rows: Vec<_> = phis
        .par_iter()
        .map(|&phi| derivatives_at_pseudovacuum(x_of_phi(phi), order).map(|s| (phi, s)))
        .collect::<Result<_, _>>()?;
    let mut coeffs = Table::new("coefficients", &["phi", "x", "p", "f_re", "f_im"]);
    let mut first = Table::new("first_derivative", &["phi", "x", "series", "closed_form", "abs_diff"]);
    for (phi, s) in rows {
        let x = x_of_phi(phi);
        for (p, c) in s.coeffs.iter().enumerate() {
            coeffs.push(vec![phi.into(), x.into(), p.into(), c.re.into(), c.im.into()]);
        }
        let closed = first_derivative_closed_form(phi);
        let got = s.coeff(1);
        first.push(vec![
            phi.into(),
            x.into(),
            got.re.into(),
            closed.into(),
            (got - closed).norm().into(),
        ]);
    }
    Ok(vec![coeffs, first])
}

/// Energy along a trajectory: coefficients `p, f_re, f_im`, partial sums
/// `xi, k, sum_re, sum_im`, and `a + b/k` fits for every `(ξ, k_min)`.
pub fn trajectory(
    name: TrajectoryName,
    x: f64,
    order: Option<usize>,
    xis: &[f64],
    kmins: &[usize],
) -> Result<Vec<Table>> {
    let spec = name.spec(order);
    let s = trajectory_energy(&spec, x, None)?;
    let mut coeffs = Table::new("coefficients", &["p", "f_re", "f_im"]);
    for (p, c) in s.coeffs.iter().enumerate() {
        coeffs.push(vec![p.into(), c.re.into(), c.im.into()]);
    }
    let mut sums = Table::new("partial_sums", &["xi", "k", "sum_re", "sum_im"]);
    let mut fits = Table::new("fits", &["xi", "k_min", "k_max", "estimate", "slope", "residual"]);
    for &xi in xis {
        for (k, v) in s.partial_sums(xi).iter().enumerate() {
            sums.push(vec![xi.into(), (k + 1).into(), v.re.into(), v.im.into()]);
        }
        for &k_min in kmins {
            let e = extrapolate(&s, xi, k_min, None)?;
            fits.push(vec![
                xi.into(),
                e.k_min.into(),
                e.k_max.into(),
                e.estimate.into(),
                e.slope.into(),
                e.residual.into(),
            ]);
        }
    }
    Ok(vec![coeffs, sums, fits])
}

/// The excitation model for a state, twist and method.  `order` is the
/// number of ξ-terms for trajectory sums and the recursion depth for
/// large-φ series.
pub fn excitation_model(
    state: ExcitedState,
    x: f64,
    method: ExcitationMethod,
    order: Option<usize>,
) -> Result<ExcitationModel> {
    let method = match method {
        ExcitationMethod::Auto if x == 1.0 => match state {
            ExcitedState::Pseudovacuum => ExcitationMethod::Exact,
            ExcitedState::Ground => ExcitationMethod::Trajectory,
        },
        ExcitationMethod::Auto => ExcitationMethod::Largephi,
        m => m,
    };
    let base = match state {
        ExcitedState::Ground => MomentProvider::Filling(traj1_filling(0.5)),
        ExcitedState::Pseudovacuum => MomentProvider::Filling(FillingConfig::standard(-1.0)),
    };
    Ok(match method {
        ExcitationMethod::Largephi => ExcitationModel::LargePhi {
            base,
            order: order.unwrap_or(14),
        },
        ExcitationMethod::Trajectory => {
            let terms = order.unwrap_or(5).max(1);
            let xi = match state {
                ExcitedState::Ground => 0.5,
                ExcitedState::Pseudovacuum => 0.0,
            };
            ExcitationModel::Trajectory {
                spec: TrajectorySpec::ground_traj1(terms - 1),
                xi,
                terms,
            }
        }
        ExcitationMethod::Exact => {
            if state != ExcitedState::Pseudovacuum || x != 1.0 {
                bail!("the closed-form curve exists for the pseudo-vacuum at φ = 0 only");
            }
            ExcitationModel::PseudoVacuumPhi0
        }
        ExcitationMethod::Auto => unreachable!("resolved above"),
    })
}

/// Excitation curve `z, dF_re, dF_im` over the grid, and the real-paired
/// excitations `z_p, z_h, delta, imag_residual` found from its points.
pub fn excitations(model: &ExcitationModel, x: f64, zs: &[f64]) -> Result<Vec<Table>> {
    if let Some(z) = zs.iter().find(|z| !(-0.5..=0.5).contains(*z)) {
        bail!("excitation position z = {z} is outside [−1/2, 1/2]");
    }
    let curve = model.prepare(x)?;
    let values: Vec<Option<Complex64>> = zs.par_iter().map(|&z| curve.eval(z)).collect();
    let mut table = Table::new("curve", &["z", "dF_re", "dF_im"]);
    for (z, v) in zs.iter().zip(values) {
        if let Some(v) = v {
            table.push(vec![(*z).into(), v.re.into(), v.im.into()]);
        }
    }
    let inner: Vec<f64> = zs.iter().copied().filter(|z| z.abs() < 0.25).collect();
    let report = pair_real(&inner, |s| curve.eval(s));
    let mut pairs = Table::new("pairs", &["z_p", "z_h", "delta", "imag_residual"]);
    for p in report.pairs {
        pairs.push(vec![p.z_p.into(), p.z_h.into(), p.delta.into(), p.imag_residual.into()]);
    }
    Ok(vec![table, pairs])
}

/// Solves one finite-length configuration on a twist grid, labelled for
/// presets; failures are reported with the configuration.
pub(crate) fn solve_labelled(config: ConfigName, m: f64, length: usize, phis: &[f64]) -> Result<Table> {
    solve(config, m, length, phis).with_context(|| format!("solving {} at m = {m}, L = {length}", config.label()))
}
