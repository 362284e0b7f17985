use crate::config::{FillingConfig, FillingKind, Interval};
use num_complex::Complex64;
use std::f64::consts::PI;

fn sign(a: i64) -> f64 {
    if a.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `sin(πx)`, exact at integers and half-integers so that moments of
/// fillings at rational densities such as `m = −1` vanish exactly.
fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).round();
    if r == 0.0 || r.abs() == 1.0 {
        0.0
    } else if r.abs() == 0.5 {
        r.signum()
    } else {
        (PI * r).sin()
    }
}

/// `cos(πx) = sin(π(x + 1/2))`.
fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}

/// `sin(πa·w)/(πa)`, the moment of a centred interval of width `w`.
fn sinc_moment(a: i64, w: f64) -> f64 {
    sin_pi(a as f64 * w) / (PI * a as f64)
}

/// Moments of the symmetric block `(−m/2, m/2)`: `m` at `a = 0`, else
/// `sin(πam)/(πa)`.  Entire in `m`; at `m = −1` all `a ≠ 0` moments vanish.
pub fn moments_standard(m: f64, a: i64) -> Complex64 {
    if a == 0 {
        Complex64::new(m, 0.0)
    } else {
        Complex64::new(sinc_moment(a, m), 0.0)
    }
}

/// Moments of the edge-split filling: `(−1)^a sin(πam)/(πa)` for `a ≠ 0`.
pub fn moments_edgesplit(m: f64, a: i64) -> Complex64 {
    if a == 0 {
        Complex64::new(m, 0.0)
    } else {
        Complex64::new(sign(a) * sinc_moment(a, m), 0.0)
    }
}

/// Moments of the three-block filling:
/// `sin(πam/2)/(πa) + (−1)^a (sin(πam) − sin(πam/2))/(πa)` for `a ≠ 0`.
pub fn moments_threeblock(m: f64, a: i64) -> Complex64 {
    if a == 0 {
        return Complex64::new(m, 0.0);
    }
    let half = sinc_moment(a, m / 2.0);
    Complex64::new(half + sign(a) * (sinc_moment(a, m) - half), 0.0)
}

/// Exact moments `Σ weight·∫_lo^hi e^{2iπax} dx` of a piecewise-constant filling.
pub fn moments_piecewise(intervals: &[Interval], a: i64) -> Complex64 {
    intervals
        .iter()
        .map(|iv| {
            let w = iv.weight as f64;
            if a == 0 {
                Complex64::new(w * (iv.hi - iv.lo), 0.0)
            } else {
                // e^{iπa(hi+lo)}·sin(πa(hi−lo))/(πa), free of cancellation.
                let arg = a as f64 * (iv.hi + iv.lo);
                let phase = Complex64::new(cos_pi(arg), sin_pi(arg));
                phase * (w * sinc_moment(a, iv.hi - iv.lo))
            }
        })
        .sum()
}

/// `e^{2iπaz}`: the change of `X_a` per unit `η` when a root is added at `z`.
pub fn perturbation_mode(z: f64, a: i64) -> Complex64 {
    let arg = 2.0 * a as f64 * z;
    Complex64::new(cos_pi(arg), sin_pi(arg))
}

/// First-order perturbed moment `X_a + η·e^{2iπaz}`.
pub fn perturb_moments(base: &MomentProvider, z: f64, eta: f64, a: i64) -> Complex64 {
    base.moment(a) + perturbation_mode(z, a) * eta
}

/// Any source of moments `X_a` consumed by the energy series.
#[derive(Debug, Clone, PartialEq)]
pub enum MomentProvider {
    Filling(FillingConfig),
    /// `X_a(base) + η·e^{2iπaz}`.
    Perturbed {
        base: Box<MomentProvider>,
        z: f64,
        eta: f64,
    },
    /// Explicit values `X_a` for `min_index ≤ a < min_index + values.len()`;
    /// zero outside.
    Table {
        min_index: i64,
        values: Vec<Complex64>,
    },
}

impl MomentProvider {
    pub fn perturbed(base: MomentProvider, z: f64, eta: f64) -> Self {
        MomentProvider::Perturbed {
            base: Box::new(base),
            z,
            eta,
        }
    }

    /// The moment `X_a`.
    pub fn moment(&self, a: i64) -> Complex64 {
        match self {
            MomentProvider::Filling(cfg) => match &cfg.kind {
                FillingKind::Standard => moments_standard(cfg.m, a),
                FillingKind::EdgeSplit => moments_edgesplit(cfg.m, a),
                FillingKind::ThreeBlock => moments_threeblock(cfg.m, a),
                FillingKind::PiecewiseConstant(iv) => moments_piecewise(iv, a),
            },
            MomentProvider::Perturbed { base, z, eta } => perturb_moments(base, *z, *eta, a),
            MomentProvider::Table { min_index, values } => {
                let idx = a - min_index;
                if idx >= 0 && (idx as usize) < values.len() {
                    values[idx as usize]
                } else {
                    Complex64::new(0.0, 0.0)
                }
            }
        }
    }

    /// `X_0`, the density.
    pub fn density(&self) -> Complex64 {
        self.moment(0)
    }

    /// The moments `X_lo..=X_hi` as a vector.
    pub fn moments(&self, lo: i64, hi: i64) -> Vec<Complex64> {
        (lo..=hi).map(|a| self.moment(a)).collect()
    }
}

impl From<FillingConfig> for MomentProvider {
    fn from(cfg: FillingConfig) -> Self {
        MomentProvider::Filling(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_values() {
        assert_eq!(moments_standard(0.5, 0).re, 0.5);
        assert!(moments_standard(1.0, 1).norm() < 1e-15);
        assert!(moments_standard(-1.0, 3).norm() < 1e-15);
        assert_eq!(moments_standard(-1.0, 0).re, -1.0);
        assert!((moments_edgesplit(0.5, 1).re + 1.0 / PI).abs() < 1e-15);
        assert!((moments_threeblock(-1.0, 1).re + 2.0 / PI).abs() < 1e-15);
        assert!(moments_threeblock(-1.0, 2).norm() < 1e-15);
        let s4 = (PI / 4.0).sin();
        let want = s4 / PI - (1.0 - s4) / PI;
        assert!((moments_threeblock(0.5, 1).re - want).abs() < 1e-15);
    }

    #[test]
    fn exact_trigonometry() {
        assert_eq!(sin_pi(3.0), 0.0);
        assert_eq!(sin_pi(-2.5), -1.0);
        assert_eq!(cos_pi(1.0), -1.0);
        assert!((sin_pi(0.3) - (0.3 * PI).sin()).abs() < 1e-15);
        assert_eq!(moments_standard(-1.0, 7), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn perturbation() {
        let pv = MomentProvider::Filling(FillingConfig::standard(-1.0));
        assert!((perturb_moments(&pv, 0.5, 0.1, 1) - Complex64::new(-0.1, 0.0)).norm() < 1e-15);
        assert!((perturb_moments(&pv, 0.3, 0.1, 0) - Complex64::new(-0.9, 0.0)).norm() < 1e-15);
        assert_eq!(perturb_moments(&pv, 0.3, 0.0, 4), pv.moment(4));
    }

    #[test]
    fn table_source_is_zero_outside() {
        let t = MomentProvider::Table {
            min_index: -1,
            values: vec![Complex64::new(1.0, 0.0); 3],
        };
        assert_eq!(t.moment(1).re, 1.0);
        assert_eq!(t.moment(2).re, 0.0);
    }
}
