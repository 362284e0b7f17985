use filling_moments::{moments_piecewise, traj1_filling, traj2_filling, FillingConfig};
use num_complex::Complex64;
use series_core::LaurentCoeffs;
use std::time::Instant;
use trajectory_explorer::{
    assemble_sl2c, extrapolate, functional_traj1, functional_traj2, trajectory_energy, TrajectorySpec,
    DEFAULT_TRAJ1_ORDER, DEFAULT_TRAJ2_ORDER,
};

const TRAJ1_LEADING: [f64; 5] = [
    1.0,
    -2.0843415503833818,
    -3.6786511453555093,
    1.8521456475091602,
    1.2729662567394795,
];

const TRAJ2_LEADING: [f64; 8] = [1.0, -3.64696, -1.23503, 2.61719, 0.486268, -2.02445, -2.67343, -2.55268];

fn traj1_series() -> series_core::EnergySeries {
    trajectory_energy(&TrajectorySpec::ground_traj1(DEFAULT_TRAJ1_ORDER), 1.0, None).unwrap()
}

/// Taylor coefficients `c_0..c_deg` of `f` at 0 from exact interpolation on
/// `2K+1` equispaced nodes.
fn taylor_by_interpolation(f: impl Fn(f64) -> Complex64, h: f64, k: i32) -> Vec<Complex64> {
    let n = (2 * k + 1) as usize;
    let mut a = vec![vec![Complex64::new(0.0, 0.0); n + 1]; n];
    for (row, j) in (-k..=k).enumerate() {
        let s = j as f64;
        for col in 0..n {
            a[row][col] = Complex64::new(s.powi(col as i32), 0.0);
        }
        a[row][n] = f(s * h);
    }
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))
            .unwrap();
        a.swap(col, piv);
        for row in 0..n {
            if row != col {
                let r = a[row][col] / a[col][col];
                for c in col..=n {
                    let v = a[col][c];
                    a[row][c] -= r * v;
                }
            }
        }
    }
    (0..n).map(|i| a[i][n] / a[i][i] / h.powi(i as i32)).collect()
}

fn check_functionals_against_moments(
    family: fn(usize) -> Result<series_core::EvaluationFunctional, trajectory_explorer::TrajectoryError>,
    filling: fn(f64) -> FillingConfig,
) {
    for a in -3i64..=3 {
        let taylor = taylor_by_interpolation(|xi| moments_piecewise(&filling(xi).intervals(), a), 0.02, 6);
        let monomial = LaurentCoeffs::new(a, vec![Complex64::new(1.0, 0.0)]);
        for p in 1..=4 {
            let got = family(p).unwrap().apply(&monomial, 0.0);
            assert!(
                (got - taylor[p]).norm() < 1e-6 * (1.0 + taylor[p].norm()),
                "a={a} p={p}: {got} vs {}",
                taylor[p]
            );
        }
    }
}

#[test]
fn traj1_functionals_differentiate_its_moments() {
    check_functionals_against_moments(functional_traj1, traj1_filling);
}

#[test]
fn traj2_functionals_differentiate_its_moments() {
    check_functionals_against_moments(functional_traj2, traj2_filling);
}

#[test]
fn traj1_leading_coefficients() {
    let start = Instant::now();
    let s = traj1_series();
    for (p, want) in TRAJ1_LEADING.iter().enumerate() {
        let got = s.coeffs[p];
        assert!((got.re - want).abs() <= 1e-9 * want.abs(), "f_{p} = {got}, want {want}");
        assert!(got.im.abs() < 1e-9, "f_{p} imaginary part {}", got.im);
    }
    let exact_f1 = 0.5 * (-4.0 * 5f64.sqrt() + 2.0 * Complex64::new(5.0, -4.0).sqrt().re);
    assert!((s.coeffs[1].re - exact_f1).abs() < 1e-12);
    assert!(start.elapsed().as_secs_f64() < 60.0);
}

#[test]
fn traj1_extrapolation_at_half() {
    let s = traj1_series();
    let e5 = extrapolate(&s, 0.5, 5, None).unwrap();
    let e6 = extrapolate(&s, 0.5, 6, None).unwrap();
    assert!((e5.estimate + 0.992).abs() <= 5e-3, "k_min=5: {}", e5.estimate);
    assert!((e6.estimate + 1.002).abs() <= 5e-3, "k_min=6: {}", e6.estimate);
}

#[test]
fn traj1_closes_on_pseudovacuum() {
    let s = traj1_series();
    let sums = s.partial_sums(-0.5);
    assert!((sums[14].re - 1.0).abs() <= 2e-2, "S_15(−1/2) = {}", sums[14].re);
}

#[test]
fn ground_state_assembly() {
    assert_eq!(assemble_sl2c(-1.0, -1.0), 0.0);
    let e = extrapolate(&traj1_series(), 0.5, 6, None).unwrap().estimate;
    assert!(assemble_sl2c(e, e).abs() <= 4e-2, "2 + 2F = {}", assemble_sl2c(e, e));
}

#[test]
fn traj2_leading_coefficients_and_agreement() {
    let s = trajectory_energy(&TrajectorySpec::ground_traj2(DEFAULT_TRAJ2_ORDER), 1.0, None).unwrap();
    for (p, want) in TRAJ2_LEADING.iter().enumerate() {
        assert!(
            (s.coeffs[p].re - want).abs() <= 5e-5,
            "f_{p} = {}, want {want}",
            s.coeffs[p]
        );
        assert!(s.coeffs[p].im.abs() < 1e-9);
    }
    let e2 = extrapolate(&s, 0.5, 4, None).unwrap().estimate;
    let e1 = extrapolate(&traj1_series(), 0.5, 6, None).unwrap().estimate;
    assert!((e1 - e2).abs() <= 3e-2, "traj1 {e1} vs traj2 {e2}");
}

#[test]
fn trajectories_start_at_pseudovacuum_for_every_twist() {
    for x in [0.1, 0.4, 0.8] {
        let s = trajectory_energy(&TrajectorySpec::ground_traj1(3), x, None).unwrap();
        assert!((s.coeffs[0] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }
}
