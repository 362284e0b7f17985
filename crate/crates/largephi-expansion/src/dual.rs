use crate::error::ExpansionError;
use crate::recurrence::expand_generic;
use num_complex::Complex64;
use series_core::Scalar;
use std::f64::consts::PI;

/// Highest power of `m` with a closed-form `g_k(φ)` available.
const MAX_M_ORDER: usize = 4;

/// Coefficients of the `m`-expansion `F = Σ_k g_k(φ) m^k` of the symmetric
/// filling, each re-expanded in `u = e^{−2φ}`: entry `[k][j]` is the
/// coefficient of `m^k u^{j−1}` for `0 ≤ j ≤ max_u + 1`.
///
/// `g_1 = 2cosh²φ`, `g_2 = 0`, `g_3 = −(π²/6)cosh 2φ`,
/// `g_4 = (π²/3)(1 + tanh²φ)` with `1 + tanh²φ = 2(1+u²)/(1+u)²`.
pub fn printed_dual_coefficients(max_m: usize, max_u: usize) -> Result<Vec<Vec<f64>>, ExpansionError> {
    if max_m > MAX_M_ORDER {
        return Err(ExpansionError::DualOrderTooHigh {
            max: MAX_M_ORDER,
            requested: max_m,
        });
    }
    let width = max_u + 2;
    let mut g = vec![vec![0.0; width]; max_m + 1];
    let at = |j: i64| (j + 1) as usize;
    if max_m >= 1 {
        g[1][at(-1)] = 0.5;
        g[1][at(0)] = 1.0;
        if max_u >= 1 {
            g[1][at(1)] = 0.5;
        }
    }
    if max_m >= 3 {
        g[3][at(-1)] = -PI * PI / 12.0;
        if max_u >= 1 {
            g[3][at(1)] = -PI * PI / 12.0;
        }
    }
    if max_m >= 4 {
        // 2(1+u²)/(1+u)² = 2(1+u²)·Σ_j (−1)^j (j+1) u^j
        for j in 0..=max_u {
            let base = |k: usize| {
                if k.is_multiple_of(2) {
                    (k + 1) as f64
                } else {
                    -((k + 1) as f64)
                }
            };
            let mut c = base(j);
            if j >= 2 {
                c += base(j - 2);
            }
            g[4][at(j as i64)] = PI * PI / 3.0 * 2.0 * c;
        }
    }
    Ok(g)
}

/// Comparison of the two double expansions of the symmetric-filling energy.
#[derive(Debug, Clone, PartialEq)]
pub struct DualCheck {
    /// `[k][j]`: the large-twist side's coefficient of `m^k u^{j−1}`.
    pub from_twist_series: Vec<Vec<Complex64>>,
    /// `[k][j]`: the closed-form `m`-expansion side.
    pub from_m_series: Vec<Vec<f64>>,
    /// Largest difference over the grid, relative to `max(1, |coefficient|)`.
    pub max_difference: f64,
}

/// Truncated Taylor polynomial in `m` of degree [`MAX_M_ORDER`].
#[derive(Debug, Clone, Copy, PartialEq)]
struct MPoly([Complex64; MAX_M_ORDER + 1]);

impl MPoly {
    fn constant(z: Complex64) -> Self {
        let mut c = [Complex64::new(0.0, 0.0); MAX_M_ORDER + 1];
        c[0] = z;
        MPoly(c)
    }
}

impl std::ops::Add for MPoly {
    type Output = MPoly;
    fn add(mut self, o: MPoly) -> MPoly {
        self += o;
        self
    }
}
impl std::ops::Sub for MPoly {
    type Output = MPoly;
    fn sub(mut self, o: MPoly) -> MPoly {
        self -= o;
        self
    }
}
impl std::ops::Mul for MPoly {
    type Output = MPoly;
    fn mul(self, o: MPoly) -> MPoly {
        let mut c = [Complex64::new(0.0, 0.0); MAX_M_ORDER + 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().take(MAX_M_ORDER + 1 - i).enumerate() {
                c[i + j] += a * b;
            }
        }
        MPoly(c)
    }
}
impl std::ops::Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly(self.0.map(|z| -z))
    }
}
impl std::ops::AddAssign for MPoly {
    fn add_assign(&mut self, o: MPoly) {
        for (a, b) in self.0.iter_mut().zip(o.0) {
            *a += b;
        }
    }
}
impl std::ops::SubAssign for MPoly {
    fn sub_assign(&mut self, o: MPoly) {
        for (a, b) in self.0.iter_mut().zip(o.0) {
            *a -= b;
        }
    }
}
impl std::ops::MulAssign for MPoly {
    fn mul_assign(&mut self, o: MPoly) {
        *self = *self * o;
    }
}

impl Scalar for MPoly {
    const GRADES: usize = MAX_M_ORDER + 1;
    fn zero() -> Self {
        MPoly::constant(Complex64::new(0.0, 0.0))
    }
    fn one() -> Self {
        MPoly::constant(Complex64::new(1.0, 0.0))
    }
    fn from_c64(z: Complex64) -> Self {
        MPoly::constant(z)
    }
    fn scale(self, z: Complex64) -> Self {
        MPoly(self.0.map(|c| c * z))
    }
    fn value(self) -> Complex64 {
        self.0[0]
    }
    fn recip(self) -> Self {
        let inv0 = self.0[0].inv();
        let mut r = [Complex64::new(0.0, 0.0); MAX_M_ORDER + 1];
        r[0] = inv0;
        for n in 1..=MAX_M_ORDER {
            let s: Complex64 = (1..=n).map(|k| self.0[k] * r[n - k]).sum();
            r[n] = -s * inv0;
        }
        MPoly(r)
    }
    fn times_eta(self) -> Self {
        MPoly::zero()
    }
    fn magnitude(self) -> f64 {
        self.0.iter().fold(0.0, |m, z| m.max(z.norm()))
    }
}

/// Expands every `f_b(m)` of the symmetric filling in powers of `m` and
/// compares with the closed-form coefficients `g_k(φ)` expanded in `u`.
///
/// The recurrence is run over truncated polynomials in `m`, so the
/// `m`-Taylor coefficients come out exactly (up to rounding): each moment
/// `sin(πam)/(πa)` enters through its own Taylor polynomial.
pub fn dual_expansion_crosscheck(max_m: usize, max_u: usize) -> Result<DualCheck, ExpansionError> {
    let printed = printed_dual_coefficients(max_m, max_u)?;
    let order = max_u + 2;
    let width = max_u + 2;
    let moment = |a: i64| {
        let mut c = [Complex64::new(0.0, 0.0); MAX_M_ORDER + 1];
        // sin(πam)/(πa) = Σ_j (−1)^j (πa)^{2j} m^{2j+1} / (2j+1)!
        let x2 = (PI * a as f64).powi(2);
        let mut term = 1.0;
        let mut k = 1;
        while k <= MAX_M_ORDER {
            c[k] = Complex64::new(term, 0.0);
            term *= -x2 / ((k + 1) * (k + 2)) as f64;
            k += 2;
        }
        MPoly(c)
    };
    let (f, _) = expand_generic(moment, order)?;
    let acc: Vec<Vec<Complex64>> = (0..=max_m).map(|k| (0..width).map(|jj| f[jj].0[k]).collect()).collect();
    let mut max_difference: f64 = 0.0;
    for k in 0..=max_m {
        for jj in 0..width {
            let scale = printed[k][jj].abs().max(1.0);
            max_difference = max_difference.max((acc[k][jj] - printed[k][jj]).norm() / scale);
        }
    }
    Ok(DualCheck {
        from_twist_series: acc,
        from_m_series: printed,
        max_difference,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_forms_expand_as_expected() {
        let g = printed_dual_coefficients(4, 3).unwrap();
        assert_eq!(&g[1][..3], &[0.5, 1.0, 0.5]);
        assert_eq!(g[3][1], 0.0);
        // 1 + tanh² at u → 0 is 2.
        assert!((g[4][1] - 2.0 * PI * PI / 3.0).abs() < 1e-15);
        assert!(printed_dual_coefficients(5, 3).is_err());
    }
}
