use crate::error::ExpansionError;
use num_complex::Complex64;
use series_core::EnergySeries;

/// Evaluates the truncated series at `u = e^{−2φ}`.
///
/// The `u^{−1}` term makes the series meaningless at `φ = +∞`; that case is
/// reported as an error.  Finite `φ ≥ 0` is always accepted.
pub fn evaluate(series: &EnergySeries, phi: f64) -> Result<Complex64, ExpansionError> {
    if phi.is_nan() || (phi == f64::INFINITY && series.min_index < 0 && series.coeff(-1) != Complex64::new(0.0, 0.0)) {
        return Err(ExpansionError::DivergentLeadingTerm { phi });
    }
    evaluate_u(series, (-2.0 * phi).exp(), phi)
}

/// Evaluates the truncated series at a given value `u` of the expansion
/// variable (`phi` is only used for error reporting).
pub fn evaluate_u(series: &EnergySeries, u: f64, phi: f64) -> Result<Complex64, ExpansionError> {
    if u == 0.0 && series.min_index < 0 && series.coeff(-1) != Complex64::new(0.0, 0.0) {
        return Err(ExpansionError::DivergentLeadingTerm { phi });
    }
    if u == 0.0 {
        return Ok(series.coeff(0));
    }
    Ok(series.evaluate_at(u))
}

/// Root-test estimate of the radius of convergence in the expansion variable.
///
/// Uses `1/max |f_b|^{1/b}` over the trailing half of the positive powers;
/// the maximum over that window damps the oscillation of sign-alternating or
/// parity-sparse tails.  Returns `+∞` when the whole window is below `1e−13`.
pub fn estimate_radius(series: &EnergySeries) -> Result<f64, ExpansionError> {
    if series.coeffs.len() < 8 {
        return Err(ExpansionError::TooFewCoefficients {
            needed: 8,
            got: series.coeffs.len(),
        });
    }
    let top = series.max_index();
    let start = ((top + 1) / 2).max(1);
    let mut best: f64 = 0.0;
    for b in start..=top {
        let mag = series.coeff(b).norm();
        if mag >= 1e-13 {
            best = best.max(mag.powf(1.0 / b as f64));
        }
    }
    if best == 0.0 {
        Ok(f64::INFINITY)
    } else {
        Ok(1.0 / best)
    }
}

/// Largest `u` up to the root-test radius on which the truncated series is
/// numerically settled: the contribution of its last quarter of terms stays
/// below `tolerance·max(1, |S(u)|)` everywhere on `(0, u]`.
///
/// At twenty terms the root test overestimates the radius noticeably (the
/// coefficients carry algebraic prefactors), so this is the window on which
/// the truncated series can be trusted; it is the "partial sums are stable"
/// criterion applied on a grid of 400 points.
pub fn stable_window(series: &EnergySeries, tolerance: f64) -> Result<f64, ExpansionError> {
    let radius = estimate_radius(series)?;
    let upper = if radius.is_finite() { radius } else { 1.0 };
    let len = series.coeffs.len();
    let drop = (len / 4).max(2);
    let steps = 400;
    let mut last_good = 0.0;
    for j in 1..=steps {
        let u = upper * j as f64 / steps as f64;
        let full = series.evaluate_at(u);
        let tail: Complex64 = (len - drop..len)
            .map(|i| series.coeffs[i] * u.powi(series.min_index as i32 + i as i32))
            .sum();
        if tail.norm() > tolerance * full.norm().max(1.0) {
            break;
        }
        last_good = u;
    }
    Ok(last_good)
}
