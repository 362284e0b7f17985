//! Radius-of-convergence estimates on series with known singularities.

use largephi_expansion::{estimate_radius, evaluate, expand_generic, EnergySeries, SeriesVariable};
use num_complex::Complex64;
use pseudo_vacuum::{mirror_first_derivative_closed_form, MIRROR_BRANCH_X};
use series_core::Dual;

#[test]
fn geometric_series_radius() {
    let coeffs: Vec<Complex64> = (0..20).map(|b| Complex64::new(3f64.powi(b), 0.0)).collect();
    let s = EnergySeries::new(SeriesVariable::ExpTwist, 0, coeffs);
    let r = estimate_radius(&s).unwrap();
    assert!((r - 1.0 / 3.0).abs() <= 0.05 / 3.0, "radius {r}");
}

/// `∂_m f_b` at the `m = 1` filling: moments `δ_{a0}` with derivative `(−1)^a`.
fn mirror_derivative_series(order: usize) -> EnergySeries {
    let moment = |a: i64| {
        let value = if a == 0 { 1.0 } else { 0.0 };
        let slope = if a % 2 == 0 { 1.0 } else { -1.0 };
        Dual::new(Complex64::new(value, 0.0), Complex64::new(slope, 0.0))
    };
    let (f, _) = expand_generic(moment, order).unwrap();
    assert!((f[1].re - 3.0).norm() < 1e-12);
    EnergySeries::new(SeriesVariable::ExpTwist, -1, f.iter().map(|v| v.eps).collect())
}

#[test]
fn mirror_derivative_series_matches_closed_form() {
    let s = mirror_derivative_series(30);
    for phi in [1.8, 2.0, 2.5] {
        let got = evaluate(&s, phi).unwrap();
        let want = mirror_first_derivative_closed_form(phi).unwrap();
        assert!((got - want).norm() <= 1e-9 * want.abs(), "φ = {phi}: {got} vs {want}");
    }
}

#[test]
fn mirror_derivative_radius_is_the_branch_point() {
    // The branch point is a square root, so the root test approaches it from
    // above like b^{−3/(2b)}; with 42 coefficients it is within 15%.
    let s = mirror_derivative_series(41);
    let r = estimate_radius(&s).unwrap();
    assert!(
        (MIRROR_BRANCH_X..=1.2 * MIRROR_BRANCH_X).contains(&r),
        "radius {r} vs {MIRROR_BRANCH_X}"
    );
}
