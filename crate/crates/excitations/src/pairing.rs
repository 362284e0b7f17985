use crate::curves::{
    eta_derivative_along_trajectory, eta_derivative_largephi, eta_derivative_pseudovacuum_phi0, largephi_sensitivities,
};
use crate::error::ExcitationError;
use filling_moments::{perturbation_mode, MomentProvider};
use largephi_expansion::evaluate_u;
use num_complex::Complex64;
use trajectory_explorer::TrajectorySpec;

/// Bisection stops once the bracket is narrower than this.
const BISECTION_WIDTH: f64 = 1e-13;
/// Samples per unit length of the partner window used to bracket roots.
const BRACKET_SAMPLES: usize = 96;
/// Roots closer than this (modulo 1) are the same partner.
const SAME_PARTNER: f64 = 1e-9;
/// A bracketed sign change whose `Im` mismatch exceeds this (relative to the
/// curve scale) is a jump of the curve, not a root.
const ROOT_ACCEPTANCE: f64 = 1e-6;

/// Whether a root is added (`Particle`) or removed (`Hole`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExcitationKind {
    Particle,
    Hole,
}

/// A single excitation at scaled Bethe-number position `z = I/L`.
///
/// Above a state at `m = −1` the reality constraint pairs a particle in the
/// inner window `|z| < 1/4` with a hole in the outer window
/// `1/4 < |z| ≤ 1/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExcitationPoint {
    pub z: f64,
    pub kind: ExcitationKind,
}

impl ExcitationPoint {
    /// Whether `z` lies in the window admissible for its kind.
    pub fn admissible(&self) -> bool {
        match self.kind {
            ExcitationKind::Particle => in_inner(self.z),
            ExcitationKind::Hole => in_outer(self.z),
        }
    }
}

/// A particle–hole pair satisfying the reality constraint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairedExcitation {
    /// Inner-window position.
    pub z_p: f64,
    /// Outer-window position.
    pub z_h: f64,
    /// Energy change `Re(∂_ηF(z_p) − ∂_ηF(z_h))` (per root, times `L`).
    pub delta: f64,
    /// Remaining `Im(∂_ηF(z_p) − ∂_ηF(z_h))` after the root solve.
    pub imag_residual: f64,
}

/// Outcome of [`pair_real`]: the pairs found, the positions for which the
/// complementary window holds no partner, and the positions at which the
/// curve could not be evaluated.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PairingReport {
    pub pairs: Vec<PairedExcitation>,
    pub unpaired: Vec<f64>,
    pub unavailable: Vec<f64>,
}

fn in_inner(z: f64) -> bool {
    z.abs() <= 0.25
}

fn in_outer(z: f64) -> bool {
    z.abs() >= 0.25 && z.abs() <= 0.5
}

/// A sampled segment of a partner window; `None` marks samples at which
/// the curve is unavailable.
struct Segment {
    z: Vec<f64>,
    values: Vec<Option<Complex64>>,
}

fn sample(lo: f64, hi: f64, curve: &impl Fn(f64) -> Option<Complex64>) -> Segment {
    let n = ((hi - lo) * BRACKET_SAMPLES as f64).ceil().max(2.0) as usize;
    let z: Vec<f64> = (0..=n).map(|k| lo + (hi - lo) * k as f64 / n as f64).collect();
    let values = z.iter().map(|&s| curve(s)).collect();
    Segment { z, values }
}

/// Bisects `Im c(z′) = target` on `[lo, hi]`, where `g_lo = target − Im c(lo)`
/// has the opposite sign to the value at `hi`.
fn bisect(
    mut lo: f64,
    mut hi: f64,
    mut g_lo: f64,
    target: f64,
    curve: &impl Fn(f64) -> Option<Complex64>,
) -> Option<(f64, Complex64)> {
    let mut best = None;
    while hi - lo > BISECTION_WIDTH {
        let mid = 0.5 * (lo + hi);
        let value = curve(mid)?;
        best = Some((mid, value));
        let g_mid = target - value.im;
        if g_mid == 0.0 {
            break;
        }
        if g_mid * g_lo < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            g_lo = g_mid;
        }
    }
    best
}

fn same_position(a: f64, b: f64) -> bool {
    let d = (a - b).abs();
    d < SAME_PARTNER || (d - 1.0).abs() < SAME_PARTNER
}

/// Pairs each position with partners in the complementary window.
///
/// For `z` in one window, every `z′` of the other window with
/// `Im ∂_ηF(z) = Im ∂_ηF(z′)` is located by bracketing on a fixed grid and
/// bisection; each root gives one [`PairedExcitation`] (several roots are
/// reported as separate pairs).  Positions without any root are listed in
/// [`PairingReport::unpaired`].  The curve may be unavailable at isolated
/// positions (a kernel pole at `z = 0` when `x = 1`); brackets touching
/// them are skipped and such positions of `zs` are listed in
/// [`PairingReport::unavailable`].
pub fn pair_real(zs: &[f64], curve: impl Fn(f64) -> Option<Complex64>) -> PairingReport {
    let mut report = PairingReport::default();
    let inner_side = [sample(-0.25, 0.0, &curve), sample(0.0, 0.25, &curve)];
    let outer_side = [sample(0.25, 0.5, &curve), sample(-0.5, -0.25, &curve)];
    for &z in zs {
        let Some(own) = curve(z) else {
            report.unavailable.push(z);
            continue;
        };
        let segments = if in_inner(z) { &outer_side } else { &inner_side };
        let scale = 1.0 + own.norm();
        let mut partners: Vec<(f64, Complex64)> = Vec::new();
        for seg in segments.iter() {
            for i in 0..seg.z.len() - 1 {
                let (Some(v0), Some(v1)) = (seg.values[i], seg.values[i + 1]) else {
                    continue;
                };
                let (g0, g1) = (own.im - v0.im, own.im - v1.im);
                let root = if g0 == 0.0 {
                    Some((seg.z[i], v0))
                } else if g0 * g1 < 0.0 {
                    bisect(seg.z[i], seg.z[i + 1], g0, own.im, &curve)
                } else if i + 2 == seg.z.len() && g1 == 0.0 {
                    Some((seg.z[i + 1], v1))
                } else {
                    None
                };
                if let Some((zr, vr)) = root {
                    let accepted = (own.im - vr.im).abs() <= ROOT_ACCEPTANCE * scale.max(1.0 + vr.norm());
                    if accepted && !partners.iter().any(|(q, _)| same_position(*q, zr)) {
                        partners.push((zr, vr));
                    }
                }
            }
        }
        if partners.is_empty() {
            report.unpaired.push(z);
        }
        for (zr, vr) in partners {
            let (z_p, z_h, d) = if in_inner(z) {
                (z, zr, own - vr)
            } else {
                (zr, z, vr - own)
            };
            report.pairs.push(PairedExcitation {
                z_p,
                z_h,
                delta: d.re,
                imag_residual: d.im,
            });
        }
    }
    report
}

/// Source of the excitation curve `z ↦ ∂_ηF(z)`.
#[derive(Debug, Clone, PartialEq)]
pub enum ExcitationModel {
    /// Large-φ series of the given depth around the given moments,
    /// evaluated at `x = e^{−2φ}`.
    LargePhi { base: MomentProvider, order: usize },
    /// ξ-expansion along a trajectory, summed at `xi` with the first `terms`
    /// coefficients.
    Trajectory {
        spec: TrajectorySpec,
        xi: f64,
        terms: usize,
    },
    /// The exact `φ = 0` curve above the second pseudo-vacuum (`x` is
    /// ignored).
    PseudoVacuumPhi0,
}

impl ExcitationModel {
    /// Prepares the curve at `x = e^{−2φ}` for many evaluations.  For the
    /// large-φ model the curve is linear in the moment perturbation, hence a
    /// trigonometric polynomial in `z` whose coefficients are computed once.
    /// Configuration errors are reported here.
    pub fn prepare(&self, x: f64) -> Result<ExcitationCurve<'_>, ExcitationError> {
        self.curve(0.5, x)?;
        let inner = match self {
            ExcitationModel::LargePhi { base, order } => {
                CurveKind::Trigonometric(largephi_sensitivities(base, *order, x)?)
            }
            _ => CurveKind::Direct { model: self, x },
        };
        Ok(ExcitationCurve { inner })
    }

    /// `∂_ηF(z)` at `x = e^{−2φ}`.
    pub fn curve(&self, z: f64, x: f64) -> Result<Complex64, ExcitationError> {
        match self {
            ExcitationModel::LargePhi { base, order } => {
                let s = eta_derivative_largephi(base, z, *order)?;
                Ok(evaluate_u(&s, x, -0.5 * x.ln())?)
            }
            ExcitationModel::Trajectory { spec, xi, terms } => {
                let s = eta_derivative_along_trajectory(spec, z, x, None)?;
                Ok(s.partial_sums(*xi)[(*terms).clamp(1, s.coeffs.len()) - 1])
            }
            ExcitationModel::PseudoVacuumPhi0 => Ok(eta_derivative_pseudovacuum_phi0(z)),
        }
    }
}

/// An excitation curve at fixed `x`, prepared for repeated evaluation
/// (see [`ExcitationModel::prepare`]).
#[derive(Debug, Clone)]
pub struct ExcitationCurve<'a> {
    inner: CurveKind<'a>,
}

#[derive(Debug, Clone)]
enum CurveKind<'a> {
    /// `Σ_a s_a·e^{2iπaz}` for `a = −1, 0, 1, …`.
    Trigonometric(Vec<Complex64>),
    Direct {
        model: &'a ExcitationModel,
        x: f64,
    },
}

impl ExcitationCurve<'_> {
    /// `∂_ηF(z)`, or `None` where the curve is unavailable.
    pub fn eval(&self, z: f64) -> Option<Complex64> {
        if !((-0.5..=0.5).contains(&z)) {
            return None;
        }
        match &self.inner {
            CurveKind::Trigonometric(s) => Some(
                s.iter()
                    .enumerate()
                    .map(|(k, v)| v * perturbation_mode(z, k as i64 - 1))
                    .sum(),
            ),
            CurveKind::Direct { model, x } => model.curve(z, *x).ok(),
        }
    }
}

/// Result of [`gap_scan`].
#[derive(Debug, Clone, PartialEq)]
pub struct GapScan {
    /// Smallest `δ` over all pairs.
    pub min_delta: f64,
    /// The pair attaining it.
    pub argmin: PairedExcitation,
    /// Every pair found.
    pub pairs: Vec<PairedExcitation>,
    /// Inner-window positions without a partner.
    pub unpaired: Vec<f64>,
    /// Inner-window positions at which the curve is unavailable.
    pub unavailable: Vec<f64>,
}

/// Pairs `grid_size` inner-window positions (cell midpoints of
/// `(−1/4, 1/4)`) and reports the smallest energy change.  A positive
/// minimum means the state is a local minimum against first-level
/// particle–hole excitations.
pub fn gap_scan(model: &ExcitationModel, x: f64, grid_size: usize) -> Result<GapScan, ExcitationError> {
    if grid_size < 2 {
        return Err(ExcitationError::GridTooSmall { min: 2, got: grid_size });
    }
    let zs: Vec<f64> = (0..grid_size)
        .map(|k| -0.25 + 0.5 * (k as f64 + 0.5) / grid_size as f64)
        .collect();
    let prepared = model.prepare(x)?;
    let report = pair_real(&zs, |z| prepared.eval(z));
    let argmin = *report
        .pairs
        .iter()
        .min_by(|a, b| a.delta.total_cmp(&b.delta))
        .ok_or(ExcitationError::NoPairs)?;
    Ok(GapScan {
        min_delta: argmin.delta,
        argmin,
        pairs: report.pairs,
        unpaired: report.unpaired,
        unavailable: report.unavailable,
    })
}
