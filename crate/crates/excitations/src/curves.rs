use crate::error::ExcitationError;
use filling_moments::{perturbation_mode, MomentProvider};
use largephi_expansion::expand_generic;
use num_complex::Complex64;
use pseudo_vacuum::GammaTower;
use pseudo_vacuum::Kernel;
use series_core::{Dual, EnergySeries, SeriesVariable};
use std::f64::consts::PI;
use trajectory_explorer::TrajectorySpec;

/// Distance below which an excitation point is identified with an
/// expansion point the trajectory already uses.
const POINT_SNAP: f64 = 1e-8;

fn check_z(z: f64) -> Result<(), ExcitationError> {
    if (-0.5..=0.5).contains(&z) {
        Ok(())
    } else {
        Err(ExcitationError::ZOutOfRange { z })
    }
}

/// `e^{2iπz}` computed from the reduced argument.
pub(crate) fn unit(z: f64) -> Complex64 {
    let arg = 2.0 * PI * z;
    Complex64::new(arg.cos(), arg.sin())
}

/// Large-φ series of `∂_η F` for the perturbed moments
/// `X_a + η·e^{2iπaz}` (one root added at scaled position `z`).
///
/// The moments enter the recurrence polynomially, so the derivative is
/// exact: the recurrence runs over dual numbers and the `η`-parts of
/// `f_{−1}, …, f_{order−2}` are returned.
pub fn eta_derivative_largephi(base: &MomentProvider, z: f64, order: usize) -> Result<EnergySeries, ExcitationError> {
    check_z(z)?;
    let (f, _) = expand_generic(|a| Dual::new(base.moment(a), perturbation_mode(z, a)), order)?;
    Ok(EnergySeries::new(
        SeriesVariable::ExpTwist,
        -1,
        f.iter().map(|v| v.eps).collect(),
    ))
}

/// Sensitivities `s_a = Σ_b x^b·∂f_b/∂X_a`, `a = −1..=order`, of the
/// large-φ series summed at `x`.  Because the perturbation enters the
/// moments linearly, `∂_ηF(z) = Σ_a s_a·e^{2iπaz}` exactly.
pub(crate) fn largephi_sensitivities(
    base: &MomentProvider,
    order: usize,
    x: f64,
) -> Result<Vec<Complex64>, ExcitationError> {
    let zero = Complex64::new(0.0, 0.0);
    (-1..=order as i64)
        .map(|seed| {
            let moment = |a: i64| Dual::new(base.moment(a), if a == seed { Complex64::new(1.0, 0.0) } else { zero });
            let (f, _) = expand_generic(moment, order)?;
            let eps: Vec<Complex64> = f.iter().map(|v| v.eps).collect();
            Ok(EnergySeries::new(SeriesVariable::ExpTwist, -1, eps).evaluate_at(x))
        })
        .collect()
}

/// `∂_η F` at `φ = 0` for an excitation above the second pseudo-vacuum:
/// `(e^{−2iπz}/2)(e^{2iπz} − 1)²·√((9e^{2iπz} − 1)/(e^{2iπz} − 1))`.
///
/// The ratio under the root lies on the line `Re = 5` for every `z`, so the
/// principal branch is continuous on the whole circle except at `z = 0`,
/// where the value tends to zero and zero is returned.
pub fn eta_derivative_pseudovacuum_phi0(z: f64) -> Complex64 {
    let reduced = z - z.round();
    if reduced == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let w = unit(reduced);
    let one = Complex64::new(1.0, 0.0);
    let ratio = (9.0 * w - one) / (w - one);
    w.conj() / 2.0 * (w - one) * (w - one) * ratio.sqrt()
}

/// ξ-coefficients of `∂_η F` along a trajectory, at `x = e^{−2φ}`.
///
/// The order-0 functional becomes `−F_0 + η·F(e^{2iπz})` and the tower is
/// run over dual numbers; an excitation point within `1e−8` of an
/// expansion point already used by the trajectory is identified with it.
pub fn eta_derivative_along_trajectory(
    spec: &TrajectorySpec,
    z: f64,
    x: f64,
    s_order: Option<usize>,
) -> Result<EnergySeries, ExcitationError> {
    check_z(z)?;
    let mut w = unit(z);
    if let Some(p) = spec
        .required_points()
        .into_iter()
        .find(|p| (*p - w).norm() < POINT_SNAP)
    {
        w = p;
    }
    let mut functionals = spec.functionals.clone();
    if let Some(first) = functionals.first_mut() {
        first.eta_point = Some(w);
    }
    let tower: GammaTower<Dual> = GammaTower::build(Kernel::Standard, x, &functionals, s_order)?;
    Ok(EnergySeries::new(
        SeriesVariable::Xi,
        0,
        tower.energy_coefficients().iter().map(|v| v.eps).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_examples() {
        assert_eq!(eta_derivative_pseudovacuum_phi0(0.0), Complex64::new(0.0, 0.0));
        let half = eta_derivative_pseudovacuum_phi0(0.5);
        assert!((half - Complex64::new(-2.0 * 5f64.sqrt(), 0.0)).norm() < 1e-12);
        assert!(eta_derivative_pseudovacuum_phi0(1e-7).norm() < 1e-9);
    }

    #[test]
    fn z_range_is_checked() {
        let pv = MomentProvider::Filling(filling_moments::FillingConfig::standard(-1.0));
        assert!(matches!(
            eta_derivative_largephi(&pv, 0.6, 6),
            Err(ExcitationError::ZOutOfRange { .. })
        ));
        assert!(eta_derivative_largephi(&pv, 0.5, 6).is_ok());
    }
}
