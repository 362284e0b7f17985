use crate::error::TrajectoryError;
use num_complex::Complex64;
use series_core::{EvaluationFunctional, FunctionalTerm};
use std::f64::consts::{FRAC_PI_4, PI};

fn factorial(p: usize) -> f64 {
    (1..=p).map(|k| k as f64).product()
}

fn term(point: Complex64, derivative_order: usize, weight: Complex64) -> FunctionalTerm {
    FunctionalTerm {
        point,
        derivative_order,
        weight,
    }
}

/// `Ξ^p` of the first ground-state trajectory:
/// `(iπ)^{p−1}/(2·p!)·[(1−(−1)^p)·∂̸^{p−1}F(−1) + (−1)^p·∂̸^{p−1}F(i) − ∂̸^{p−1}F(−i)]`.
pub fn functional_traj1(p: usize) -> Result<EvaluationFunctional, TrajectoryError> {
    if p == 0 {
        return Err(TrajectoryError::OrderZero);
    }
    let c = Complex64::new(0.0, PI).powu(p as u32 - 1) / (2.0 * factorial(p));
    let parity = if p.is_multiple_of(2) { 1.0 } else { -1.0 };
    let k = p - 1;
    Ok(EvaluationFunctional::from_terms(
        p,
        vec![
            term(Complex64::new(-1.0, 0.0), k, c * (1.0 - parity)),
            term(Complex64::new(0.0, 1.0), k, c * parity),
            term(Complex64::new(0.0, -1.0), k, -c),
        ],
    ))
}

/// `Ξ^p` of the second ground-state trajectory:
/// `(1−(−1)^p)(iπ)^{p−1}/(2·p!)·[∂̸^{p−1}F(−1) − (∂̸^{p−1}F(e^{iπ/4}) + ∂̸^{p−1}F(e^{−iπ/4}))/2^p]`.
/// Vanishes for even `p`.
pub fn functional_traj2(p: usize) -> Result<EvaluationFunctional, TrajectoryError> {
    if p == 0 {
        return Err(TrajectoryError::OrderZero);
    }
    let parity = if p.is_multiple_of(2) { 1.0 } else { -1.0 };
    let c = Complex64::new(0.0, PI).powu(p as u32 - 1) * (1.0 - parity) / (2.0 * factorial(p));
    let k = p - 1;
    let half = c / 2f64.powi(p as i32);
    Ok(EvaluationFunctional::from_terms(
        p,
        vec![
            term(Complex64::new(-1.0, 0.0), k, c),
            term(Complex64::from_polar(1.0, FRAC_PI_4), k, -half),
            term(Complex64::from_polar(1.0, -FRAC_PI_4), k, -half),
        ],
    ))
}
