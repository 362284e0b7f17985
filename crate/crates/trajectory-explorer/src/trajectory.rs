use crate::error::TrajectoryError;
use crate::functionals::{functional_traj1, functional_traj2};
use num_complex::Complex64;
use pseudo_vacuum::{GammaTower, Kernel};
use series_core::{EnergySeries, EvaluationFunctional, SeriesVariable};

/// Default depth of the first ground-state trajectory.
pub const DEFAULT_TRAJ1_ORDER: usize = 14;
/// Default depth of the second ground-state trajectory.
pub const DEFAULT_TRAJ2_ORDER: usize = 7;

/// Which family a [`TrajectorySpec`] belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrajectoryName {
    GroundTraj1,
    GroundTraj2,
    Custom,
}

/// A path `ξ ↦ X_a(ξ)` through moment space starting at the second
/// pseudo-vacuum, encoded by its functionals `Ξ^0..Ξ^P`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrajectorySpec {
    pub name: TrajectoryName,
    /// `functionals[p] = Ξ^p`; `functionals[0]` is `−F_0`.
    pub functionals: Vec<EvaluationFunctional>,
}

impl TrajectorySpec {
    /// The first ground-state trajectory to order `order`.
    pub fn ground_traj1(order: usize) -> Self {
        Self::from_family(TrajectoryName::GroundTraj1, order, functional_traj1)
    }

    /// The second ground-state trajectory to order `order`.
    pub fn ground_traj2(order: usize) -> Self {
        Self::from_family(TrajectoryName::GroundTraj2, order, functional_traj2)
    }

    /// A user-supplied trajectory; `functionals[p]` must be of order `p`
    /// and `functionals[0]` the constant-term rule.
    pub fn custom(functionals: Vec<EvaluationFunctional>) -> Self {
        TrajectorySpec {
            name: TrajectoryName::Custom,
            functionals,
        }
    }

    fn from_family(
        name: TrajectoryName,
        order: usize,
        family: fn(usize) -> Result<EvaluationFunctional, TrajectoryError>,
    ) -> Self {
        let mut functionals = vec![EvaluationFunctional::constant_term_only()];
        functionals.extend((1..=order).map(|p| family(p).expect("p ≥ 1")));
        TrajectorySpec { name, functionals }
    }

    /// Highest order `P`.
    pub fn order(&self) -> usize {
        self.functionals.len().saturating_sub(1)
    }

    /// Points on the unit circle at which the recurrence needs expansions
    /// (the origin is always used in addition).
    pub fn required_points(&self) -> Vec<Complex64> {
        let mut out: Vec<Complex64> = Vec::new();
        for t in self.functionals.iter().flat_map(|f| f.terms.iter()) {
            if !out.iter().any(|p| (*p - t.point).norm() <= 1e-14) {
                out.push(t.point);
            }
        }
        out
    }
}

/// Coefficients `f_0..f_P` of the energy along the trajectory at
/// `x = e^{−2φ}`; `s_order` overrides the point-table truncation.
pub fn trajectory_energy(
    spec: &TrajectorySpec,
    x: f64,
    s_order: Option<usize>,
) -> Result<EnergySeries, TrajectoryError> {
    let tower: GammaTower = GammaTower::build(Kernel::Standard, x, &spec.functionals, s_order)?;
    Ok(EnergySeries::new(
        SeriesVariable::Xi,
        0,
        tower.energy_coefficients().to_vec(),
    ))
}

/// Result of fitting partial sums `S_k ≈ a + b/k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extrapolation {
    /// The limit estimate `a`.
    pub estimate: f64,
    /// The `1/k` slope `b`.
    pub slope: f64,
    /// Root-mean-square fit residual.
    pub residual: f64,
    pub k_min: usize,
    pub k_max: usize,
}

/// Least-squares fit of the real partial sums `S_k = Σ_{i<k} ξ^i f_i`,
/// `k ∈ [k_min, k_max]`, against `a + b/k`.  `k_max` defaults to the number
/// of coefficients.
pub fn extrapolate(
    series: &EnergySeries,
    xi: f64,
    k_min: usize,
    k_max: Option<usize>,
) -> Result<Extrapolation, TrajectoryError> {
    let sums = series.partial_sums(xi);
    let available = sums.len();
    let k_max = k_max.unwrap_or(available);
    if k_min == 0 || k_max > available || k_min > k_max {
        return Err(TrajectoryError::BadWindow {
            k_min,
            k_max,
            available,
        });
    }
    let count = k_max - k_min + 1;
    if count < 2 {
        return Err(TrajectoryError::TooFewPoints { needed: 2, got: count });
    }
    let pts: Vec<(f64, f64)> = (k_min..=k_max).map(|k| (1.0 / k as f64, sums[k - 1].re)).collect();
    let n = count as f64;
    let mean_u = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_s = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let suu: f64 = pts.iter().map(|p| (p.0 - mean_u).powi(2)).sum();
    let sus: f64 = pts.iter().map(|p| (p.0 - mean_u) * (p.1 - mean_s)).sum();
    let slope = sus / suu;
    let estimate = mean_s - slope * mean_u;
    let residual = (pts.iter().map(|p| (p.1 - estimate - slope * p.0).powi(2)).sum::<f64>() / n).sqrt();
    Ok(Extrapolation {
        estimate,
        slope,
        residual,
        k_min,
        k_max,
    })
}

/// Energy level of the non-compact chain from two copies of the real-group
/// energy: `𝓔 = 2 + e_i(m) + e_j(−2−m)`.
pub fn assemble_sl2c(e_i: f64, e_j: f64) -> f64 {
    2.0 + e_i + e_j
}
