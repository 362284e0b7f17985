use crate::commands::{
    excitation_model, excitations, solve_labelled, ConfigName, ExcitationMethod, ExcitedState, SETTLED_TOLERANCE,
};
use crate::grid::{linspace, x_of_phi};
use crate::table::Table;
use anyhow::{bail, Result};
use bethe_solver::{solve_twisted_sweep, Chain, TwistOptions};
use excitations::{gap_scan, ExcitationModel};
use filling_moments::{bethe_numbers_for, traj1_filling, traj2_filling, FillingConfig, Interval, MomentProvider};
use largephi_expansion::{evaluate_u, expand_coefficients, stable_window};
use pseudo_vacuum::{
    derivatives_at_pseudovacuum, mirror_critical_phi, mirror_derivatives_at_m1, mirror_first_derivative_closed_form,
};
use rayon::prelude::*;
use std::f64::consts::PI;
use trajectory_explorer::{extrapolate, trajectory_energy, TrajectorySpec};

/// Figure numbers with a data preset.
pub const FIGURES: [usize; 13] = [1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14];

/// One-line description of each preset.
pub fn describe(n: usize) -> Option<&'static str> {
    Some(match n {
        1 => "symmetric filling, m = 0.25 (L = 200) and m = 0.75 (L = 100): series vs finite-length energy",
        2 => "edge-split filling, m = 0.25 (L = 240) and m = 0.5 (L = 144): series vs finite-length energy",
        3 => "three-block filling, m = 0.25 (L = 240) and m = 0.5 (L = 144): series vs finite-length energy",
        5 => "twisted roots of the symmetric filling m = 0.25, L = 40, collapsing onto i as the twist grows",
        6 => "large-twist series of the three families continued to m = −1",
        7 => "m = 1 state above the critical twist: energy 3 and its m-derivative against the closed form",
        8 => "energy near m = 0 at φ ∈ {0, .5, .75, 1, 1.25}: small-m expansion vs 80-root finite-length data",
        9 => "first trajectory: coefficients, truncated curves (ξ⁴, ξ⁹, ξ¹⁴), partial sums at ξ = ±1/2 and fits",
        10 => "filling functions along the first trajectory for ξ ∈ {0, 1/8, 1/4, 3/8, 1/2}",
        11 => "expansion around m = −1: energy vs m at five twists, and 1/F at m = −1/2 vs e^{−2φ}",
        12 => "second trajectory: coefficients, truncated curves (ξ³, ξ⁵, ξ⁷), partial sums at ξ = 1/2 and fit",
        13 => "excitations above the ground state at φ = 1.5 (13 large-twist terms): curve and paired δ",
        14 => "excitations above the ground state at φ = 0 (3, 4, 5 trajectory terms): curves and paired δ",
        _ => return None,
    })
}

/// Computes the tables of a preset.
pub fn figure(n: usize) -> Result<Vec<Table>> {
    match n {
        1 => overlay(ConfigName::Standard, &[(0.25, 200), (0.75, 100)]),
        2 => overlay(ConfigName::Edgesplit, &[(0.25, 240), (0.5, 144)]),
        3 => overlay(ConfigName::Threeblock, &[(0.25, 240), (0.5, 144)]),
        5 => root_collapse(),
        6 => continued_series(),
        7 => mirror_state(),
        8 => around_zero(),
        9 => trajectory_figure(TrajectorySpec::ground_traj1(14), &[4, 9, 14], &[0.5, -0.5], &[5, 6]),
        10 => trajectory_fillings(),
        11 => around_minus_one(),
        12 => trajectory_figure(TrajectorySpec::ground_traj2(7), &[3, 5, 7], &[0.5], &[4]),
        13 => excitation_figure(1.5, &[13]),
        14 => excitation_figure(0.0, &[3, 4, 5]),
        4 => bail!("figure 4 is a schematic without data; presets exist for {FIGURES:?}"),
        _ => bail!("no preset for figure {n}; presets exist for {FIGURES:?}"),
    }
}

/// Series and finite-length energies on a common grid inside the settled
/// window of the twenty-term series.
fn overlay(config: ConfigName, cases: &[(f64, usize)]) -> Result<Vec<Table>> {
    let per_case: Vec<Vec<Table>> = cases
        .par_iter()
        .map(|&(m, length)| -> Result<Vec<Table>> {
            let s = expand_coefficients(&MomentProvider::Filling(config.at(m)), 21)?;
            let window = stable_window(&s, SETTLED_TOLERANCE)?;
            let us: Vec<f64> = (1..=40).map(|k| window * k as f64 / 40.0).collect();
            let phis: Vec<f64> = us.iter().map(|u| -0.5 * u.ln()).collect();
            let mut series = Table::new(format!("series_m{m}"), &["phi", "x", "value_re", "value_im"]);
            for (&u, &phi) in us.iter().zip(&phis) {
                let v = evaluate_u(&s, u, phi)?;
                series.push(vec![phi.into(), u.into(), v.re.into(), v.im.into()]);
            }
            let mut solver = solve_labelled(config, m, length, &phis)?;
            solver.name = format!("solver_m{m}_L{length}");
            Ok(vec![series, solver])
        })
        .collect::<Result<_>>()?;
    Ok(per_case.into_iter().flatten().collect())
}

fn root_collapse() -> Result<Vec<Table>> {
    let length = 40;
    let numbers = bethe_numbers_for(&FillingConfig::standard(0.25), length)?;
    let phis = [0.25, 0.5, 1.0, 2.0, 4.0];
    let states = solve_twisted_sweep(length, &numbers, &phis, Chain::SpinMinusOne, &TwistOptions::default())?;
    let mut t = Table::new(
        "roots",
        &["phi", "bethe_number", "root_re", "root_im", "distance_from_i"],
    );
    for (phi, st) in phis.iter().zip(&states) {
        for (n, r) in numbers.iter().zip(&st.roots) {
            let d = (r - num_complex::Complex64::new(0.0, 1.0)).norm();
            t.push(vec![(*phi).into(), (*n).into(), r.re.into(), r.im.into(), d.into()]);
        }
    }
    Ok(vec![t])
}

fn continued_series() -> Result<Vec<Table>> {
    let mut t = Table::new("series", &["config", "phi", "x", "value_re", "value_im"]);
    for config in [ConfigName::Standard, ConfigName::Edgesplit, ConfigName::Threeblock] {
        let s = expand_coefficients(&MomentProvider::Filling(config.at(-1.0)), 21)?;
        let window = stable_window(&s, SETTLED_TOLERANCE)?.min(1.0);
        for k in 1..=40 {
            let u = window * k as f64 / 40.0;
            let phi = -0.5 * u.ln();
            let v = evaluate_u(&s, u, phi)?;
            t.push(vec![
                config.label().into(),
                phi.into(),
                u.into(),
                v.re.into(),
                v.im.into(),
            ]);
        }
    }
    Ok(vec![t])
}

fn mirror_state() -> Result<Vec<Table>> {
    let phi_c = mirror_critical_phi();
    let mut t = Table::new(
        "series",
        &["phi", "x", "energy", "derivative_series", "derivative_closed_form"],
    );
    for phi in linspace(phi_c + 0.02, 3.0, 40)? {
        let s = mirror_derivatives_at_m1(x_of_phi(phi), 22)?;
        let closed = mirror_first_derivative_closed_form(phi)?;
        t.push(vec![
            phi.into(),
            x_of_phi(phi).into(),
            s.coeff(0).re.into(),
            s.coeff(1).re.into(),
            closed.into(),
        ]);
    }
    Ok(vec![t])
}

/// Small-m expansion of the symmetric-filling energy: exact to `m⁸` at
/// `φ = 0`, to `m⁴` at other twists.
pub fn small_m_energy(m: f64, phi: f64) -> f64 {
    let (p2, p4, p6) = (PI * PI, PI.powi(4), PI.powi(6));
    if phi == 0.0 {
        2.0 * m - p2 / 6.0 * m.powi(3)
            + p2 / 3.0 * m.powi(4)
            + (-60.0 * p2 + p4) / 120.0 * m.powi(5)
            + (2.0 * p2 / 3.0 - 11.0 * p4 / 180.0) * m.powi(6)
            + (-5.0 * p2 / 6.0 + 2.0 * p4 / 9.0 - p6 / 5040.0) * m.powi(7)
            + (p2 - 7.0 * p4 / 12.0 + 31.0 * p6 / 2520.0) * m.powi(8)
    } else {
        2.0 * m * phi.cosh().powi(2) - p2 / 6.0 * (2.0 * phi).cosh() * m.powi(3)
            + p2 / 3.0 * (1.0 + phi.tanh().powi(2)) * m.powi(4)
    }
}

const FIVE_TWISTS: [f64; 5] = [0.0, 0.5, 0.75, 1.0, 1.25];

/// Finite-length energies with 80 roots at the five twists; negative `m`
/// uses the mirror chain.
fn eighty_root_data(ms: &[f64]) -> Result<Table> {
    let tables: Vec<Table> = ms
        .par_iter()
        .map(|&m| {
            let length = (80.0 / m.abs()).round() as usize;
            solve_labelled(ConfigName::Standard, m, length, &FIVE_TWISTS)
        })
        .collect::<Result<_>>()?;
    let mut t = Table::new("solver", &["m", "L", "phi", "energy_re"]);
    for (m, table) in ms.iter().zip(&tables) {
        let length = (80.0 / m.abs()).round() as usize;
        for (phi, e) in table.reals("phi").iter().zip(table.reals("energy_re")) {
            t.push(vec![(*m).into(), length.into(), (*phi).into(), e.into()]);
        }
    }
    Ok(t)
}

fn around_zero() -> Result<Vec<Table>> {
    let mut series = Table::new("series", &["phi", "m", "value"]);
    for &phi in &FIVE_TWISTS {
        for m in linspace(-0.5, 0.5, 41)? {
            series.push(vec![phi.into(), m.into(), small_m_energy(m, phi).into()]);
        }
    }
    let solver = eighty_root_data(&[-0.4, -0.25, -0.2, -0.1, 0.1, 0.2, 0.25, 0.4])?;
    Ok(vec![series, solver])
}

fn around_minus_one() -> Result<Vec<Table>> {
    let order = 22;
    let mut left = Table::new("series_vs_m", &["phi", "m", "value_re", "value_im"]);
    for &phi in &FIVE_TWISTS {
        let s = derivatives_at_pseudovacuum(x_of_phi(phi), order)?;
        for m in linspace(-1.0, -0.4, 31)? {
            let v = s.evaluate_at(m + 1.0);
            left.push(vec![phi.into(), m.into(), v.re.into(), v.im.into()]);
        }
    }
    let solver = eighty_root_data(&[-0.4, -0.25, -0.2, -0.1])?;
    let us: Vec<f64> = (1..=24).map(|k| 0.6 * k as f64 / 24.0).collect();
    let phis: Vec<f64> = us.iter().map(|u| -0.5 * u.ln()).collect();
    let values: Vec<f64> = us
        .par_iter()
        .map(|&u| derivatives_at_pseudovacuum(u, order).map(|s| 1.0 / s.evaluate_at(0.5).re))
        .collect::<Result<_, _>>()?;
    let half = solve_labelled(ConfigName::Standard, -0.5, 200, &phis)?;
    let mut right = Table::new("inverse_at_half", &["phi", "x", "series_inverse", "solver_inverse"]);
    for (((phi, u), v), e) in phis.iter().zip(&us).zip(&values).zip(half.reals("energy_re")) {
        right.push(vec![(*phi).into(), (*u).into(), (*v).into(), (1.0 / e).into()]);
    }
    Ok(vec![left, solver, right])
}

fn trajectory_figure(spec: TrajectorySpec, truncations: &[usize], xis: &[f64], kmins: &[usize]) -> Result<Vec<Table>> {
    let s = trajectory_energy(&spec, 1.0, None)?;
    let mut coeffs = Table::new("coefficients", &["p", "f_re", "f_im"]);
    for (p, c) in s.coeffs.iter().enumerate() {
        coeffs.push(vec![p.into(), c.re.into(), c.im.into()]);
    }
    let mut curves = Table::new("curves", &["max_power", "xi", "energy"]);
    for &top in truncations {
        for xi in linspace(-0.5, 0.5, 41)? {
            let v = s.partial_sums(xi)[top.min(s.coeffs.len() - 1)];
            curves.push(vec![top.into(), xi.into(), v.re.into()]);
        }
    }
    let mut sums = Table::new("partial_sums", &["xi", "k", "inverse_k", "sum"]);
    let mut fits = Table::new("fits", &["xi", "k_min", "k_max", "estimate", "slope", "residual"]);
    for &xi in xis {
        for (k, v) in s.partial_sums(xi).iter().enumerate() {
            sums.push(vec![
                xi.into(),
                (k + 1).into(),
                (1.0 / (k + 1) as f64).into(),
                v.re.into(),
            ]);
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
    Ok(vec![coeffs, curves, sums, fits])
}

/// Value of a piecewise-constant filling at `x`, folded onto `(−1/2, 1/2]`.
fn filling_value(intervals: &[Interval], x: f64) -> f64 {
    intervals
        .iter()
        .map(|iv| {
            let (lo, hi) = if iv.lo <= iv.hi { (iv.lo, iv.hi) } else { (iv.hi, iv.lo) };
            let sign = if iv.lo <= iv.hi { 1.0 } else { -1.0 };
            let inside = (-2i32..=2).any(|k| {
                let y = x + k as f64;
                y > lo && y < hi
            });
            if inside {
                sign * iv.weight as f64
            } else {
                0.0
            }
        })
        .sum()
}

fn trajectory_fillings() -> Result<Vec<Table>> {
    let mut t = Table::new("fillings", &["trajectory", "xi", "x", "value"]);
    for (name, f) in [
        ("traj1", traj1_filling as fn(f64) -> FillingConfig),
        ("traj2", traj2_filling),
    ] {
        for xi in [0.0, 0.125, 0.25, 0.375, 0.5] {
            let iv = f(xi).intervals();
            for k in 0..200 {
                let x = -0.5 + (k as f64 + 0.5) / 200.0;
                t.push(vec![name.into(), xi.into(), x.into(), filling_value(&iv, x).into()]);
            }
        }
    }
    Ok(vec![t])
}

fn excitation_figure(phi: f64, term_counts: &[usize]) -> Result<Vec<Table>> {
    let x = x_of_phi(phi);
    let zs: Vec<f64> = (0..200).map(|k| -0.5 + (k as f64 + 0.5) / 200.0).collect();
    let mut out = Vec::new();
    for &terms in term_counts {
        let model: ExcitationModel = if phi == 0.0 {
            excitation_model(ExcitedState::Ground, x, ExcitationMethod::Trajectory, Some(terms))?
        } else {
            excitation_model(ExcitedState::Ground, x, ExcitationMethod::Largephi, Some(terms + 1))?
        };
        let mut tables = excitations(&model, x, &zs)?;
        let scan = gap_scan(&model, x, 48)?;
        let mut gap = Table::new(format!("gap_terms{terms}"), &["min_delta", "z_p", "z_h"]);
        gap.push(vec![
            scan.min_delta.into(),
            scan.argmin.z_p.into(),
            scan.argmin.z_h.into(),
        ]);
        for t in tables.iter_mut() {
            t.name = format!("{}_terms{terms}", t.name);
        }
        out.extend(tables);
        out.push(gap);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_m_forms_agree_at_zero_twist_to_fourth_order() {
        let m: f64 = 0.01;
        let four = 2.0 * m - PI * PI / 6.0 * m.powi(3) + PI * PI / 3.0 * m.powi(4);
        assert!((small_m_energy(m, 0.0) - four).abs() < 1e-8);
        assert!((small_m_energy(m, 1e-9) - four).abs() < 1e-8);
    }

    #[test]
    fn filling_values_fold_and_reverse() {
        let iv = traj1_filling(0.5).intervals();
        assert_eq!(filling_value(&iv, 0.1), -2.0);
        assert_eq!(filling_value(&iv, 0.4), 0.0);
        let back = traj1_filling(-0.5).intervals();
        assert_eq!(filling_value(&back, 0.0), -1.0);
        assert_eq!(filling_value(&back, 0.45), 0.0);
    }

    #[test]
    fn figure_four_and_unknown_numbers_are_rejected() {
        assert!(figure(4).is_err());
        assert!(figure(15).is_err());
        assert!(FIGURES.iter().all(|n| describe(*n).is_some()));
    }
}
