use crate::error::PseudoVacuumError;
use crate::kernel::{mirror_critical_phi, Kernel, MIRROR_BRANCH_X};
use crate::tower::GammaTower;
use num_complex::Complex64;
use series_core::{EnergySeries, EvaluationFunctional, FunctionalTerm, SeriesVariable};
use std::f64::consts::PI;

/// Largest supported order of the `m`-derivative towers.
pub const MAX_DERIVATIVE_ORDER: usize = 22;

/// Default order ("more than twenty terms").
pub const DEFAULT_DERIVATIVE_ORDER: usize = 22;

/// Functionals of the symmetric filling expanded about `m = ±1`.
///
/// With `μ = m ∓ 1`, `X_a = sin(πa(±1+μ))/(πa) = (−1)^a·sin(πaμ)/(πa)`, so
/// `Ξ^{2j+1}[F] = (−1)^j π^{2j}/(2j+1)!·∂̸^{2j}F(−1)` and the even orders
/// vanish.
pub fn mu_functionals(order: usize) -> Vec<EvaluationFunctional> {
    let mut out = vec![EvaluationFunctional::constant_term_only()];
    let mut factorial = 1.0;
    for p in 1..=order {
        factorial *= p as f64;
        let terms = if p % 2 == 1 {
            let j = (p - 1) / 2;
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            vec![FunctionalTerm {
                point: Complex64::new(-1.0, 0.0),
                derivative_order: 2 * j,
                weight: Complex64::new(sign * PI.powi(2 * j as i32) / factorial, 0.0),
            }]
        } else {
            Vec::new()
        };
        out.push(EvaluationFunctional::from_terms(p, terms));
    }
    out
}

fn check_order(order: usize) -> Result<(), PseudoVacuumError> {
    if order > MAX_DERIVATIVE_ORDER {
        return Err(PseudoVacuumError::OrderTooLarge {
            requested: order,
            max: MAX_DERIVATIVE_ORDER,
        });
    }
    Ok(())
}

/// The `m`-derivative tower at the second pseudo-vacuum: `γ_p` tables about
/// `t = 0` and `t = −1`, truncated at total order `s_order` in the point
/// tables.
pub fn gamma_tower(x: f64, order: usize, s_order: usize) -> Result<GammaTower, PseudoVacuumError> {
    check_order(order)?;
    GammaTower::build(Kernel::Standard, x, &mu_functionals(order), Some(s_order))
}

/// Coefficients of the symmetric-filling energy in powers of `m + 1` at
/// fixed `x = e^{−2φ}` (`0 < x ≤ 1`).  The zeroth coefficient is `1`.
pub fn derivatives_at_pseudovacuum(x: f64, order: usize) -> Result<EnergySeries, PseudoVacuumError> {
    let tower = gamma_tower(x, order, order + 2)?;
    Ok(EnergySeries::new(
        SeriesVariable::MPlusOne,
        0,
        tower.energy_coefficients().to_vec(),
    ))
}

/// Coefficients of the symmetric-filling energy of the `m = 1` configuration
/// in powers of `m − 1`, at `x = e^{−2φ}`.
///
/// The mirror kernel has a square-root branch point at `x = e^{−2φ_c}`; the
/// series only continues the finite-size energies for `φ > φ_c`, so any
/// `x ≥ e^{−2φ_c}` is rejected.
pub fn mirror_derivatives_at_m1(x: f64, order: usize) -> Result<EnergySeries, PseudoVacuumError> {
    check_order(order)?;
    // A relative margin keeps x = e^{−2φ_c} (rounded either way) on the rejected side.
    if x.is_nan() || x >= MIRROR_BRANCH_X * (1.0 - 1e-12) {
        return Err(PseudoVacuumError::SingularWindow {
            phi: -0.5 * x.ln(),
            phi_c: mirror_critical_phi(),
        });
    }
    let tower = GammaTower::build(Kernel::Mirror, x, &mu_functionals(order), Some(order + 2))?;
    Ok(EnergySeries::new(
        SeriesVariable::MMinusOne,
        0,
        tower.energy_coefficients().to_vec(),
    ))
}

/// Closed form of the first `(m+1)`-coefficient:
/// `−2cosh²φ·√(5 − 4 tanh φ)`.
pub fn first_derivative_closed_form(phi: f64) -> f64 {
    -2.0 * phi.cosh().powi(2) * (5.0 - 4.0 * phi.tanh()).sqrt()
}

/// Closed form of the first `(m−1)`-coefficient of the mirror configuration,
/// valid for `φ > φ_c`: with `c = cosh 2φ` and `r = √(c − 7)`,
/// `2cosh²φ·(c − 7 − 2√2·sinhφ·r)/(5c − 11 − 4√2·sinhφ·r)`.
pub fn mirror_first_derivative_closed_form(phi: f64) -> Result<f64, PseudoVacuumError> {
    let phi_c = mirror_critical_phi();
    if !(phi > phi_c) {
        return Err(PseudoVacuumError::SingularWindow { phi, phi_c });
    }
    let c = (2.0 * phi).cosh();
    let r = (c - 7.0).sqrt();
    let s = 2f64.sqrt() * phi.sinh() * r;
    Ok(2.0 * phi.cosh().powi(2) * (c - 7.0 - 2.0 * s) / (5.0 * c - 11.0 - 4.0 * s))
}
