use crate::error::PseudoVacuumError;
use num_complex::Complex64;
use series_core::univariate::{mul, recip, sqrt};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `x_c = 7 − 4√3 = e^{−2φ_c}`: the mirror kernel's radicand vanishes at
/// `y = −x_c`, i.e. at the point `t = −1` once `x` reaches `x_c`.
pub const MIRROR_BRANCH_X: f64 = 0.071_796_769_724_490_88;

/// `φ_c = ½·log(7 + 4√3)`.
pub fn mirror_critical_phi() -> f64 {
    0.5 * (7.0 + 4.0 * 3f64.sqrt()).ln()
}

/// Closed-form generating function of the root deviations at the second
/// pseudo-vacuum: `Δ(y) = −i/2 + (i/2)·√(1 − 8y/(1−y))`.
///
/// The principal square root is continuous on `ℂ ∖ [1/9, 1]`, which
/// contains the unit disc minus that segment, and pins `Δ(0) = 0`.
pub fn delta_kernel(y: Complex64) -> Result<Complex64, PseudoVacuumError> {
    let one = Complex64::new(1.0, 0.0);
    if (y - one).norm() < 1e-14 {
        return Err(PseudoVacuumError::KernelPole { y });
    }
    Ok(-I * 0.5 + I * 0.5 * (one - y * 8.0 / (one - y)).sqrt())
}

/// The mirror kernel at the `m = +1` configuration:
/// `Δ(y) = (i/2)·((1+3y)/(1−y))·[1 − √(1 + 8y(1−y)/(1+3y)²)]`.
pub fn delta_kernel_mirror(y: Complex64) -> Result<Complex64, PseudoVacuumError> {
    let one = Complex64::new(1.0, 0.0);
    let d = one + y * 3.0;
    if (y - one).norm() < 1e-14 || d.norm() < 1e-14 {
        return Err(PseudoVacuumError::KernelPole { y });
    }
    let inner = one + y * (one - y) * 8.0 / (d * d);
    Ok(I * 0.5 * d / (one - y) * (one - inner.sqrt()))
}

/// Which closed-form kernel a tower is built on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kernel {
    /// The second pseudo-vacuum at `m = −1`.
    Standard,
    /// The mirror configuration at `m = +1`.
    Mirror,
}

impl Kernel {
    /// Sign `σ` of the second `arctan` in `Φ_σ(g) = arctan(i+g) + σ·arctan(g)`.
    pub fn sigma(self) -> f64 {
        match self {
            Kernel::Standard => -1.0,
            Kernel::Mirror => 1.0,
        }
    }

    /// Evaluates the kernel at `y`.
    pub fn eval(self, y: Complex64) -> Result<Complex64, PseudoVacuumError> {
        match self {
            Kernel::Standard => delta_kernel(y),
            Kernel::Mirror => delta_kernel_mirror(y),
        }
    }

    /// Taylor coefficients of `s ↦ Δ(x·(q + s))` up to `s^n`.
    pub fn taylor(self, q: Complex64, x: f64, n: usize) -> Result<Vec<Complex64>, PseudoVacuumError> {
        let y0 = q * x;
        // Validate the base point (poles) before building the series.
        self.eval(y0)?;
        let len = n + 1;
        let mut one = vec![Complex64::new(0.0, 0.0); len];
        one[0] = Complex64::new(1.0, 0.0);
        let mut y = vec![Complex64::new(0.0, 0.0); len];
        y[0] = y0;
        if len > 1 {
            y[1] = Complex64::new(x, 0.0);
        }
        let sub = |a: &[Complex64], b: &[Complex64]| a.iter().zip(b).map(|(u, v)| u - v).collect::<Vec<_>>();
        let add = |a: &[Complex64], b: &[Complex64]| a.iter().zip(b).map(|(u, v)| u + v).collect::<Vec<_>>();
        let scale = |a: &[Complex64], k: Complex64| a.iter().map(|u| u * k).collect::<Vec<_>>();
        let one_minus_y = sub(&one, &y);
        let out = match self {
            Kernel::Standard => {
                let r = sub(&one, &scale(&mul(&y, &recip(&one_minus_y)), Complex64::new(8.0, 0.0)));
                let mut s = scale(&sqrt(&r), I * 0.5);
                s[0] -= I * 0.5;
                s
            }
            Kernel::Mirror => {
                let d = add(&one, &scale(&y, Complex64::new(3.0, 0.0)));
                let a = mul(&d, &recip(&one_minus_y));
                let frac = mul(&mul(&y, &one_minus_y), &recip(&mul(&d, &d)));
                let inner = add(&one, &scale(&frac, Complex64::new(8.0, 0.0)));
                scale(&mul(&a, &sub(&one, &sqrt(&inner))), I * 0.5)
            }
        };
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn standard_values() {
        assert_eq!(delta_kernel(c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
        assert!((delta_kernel(c(1.0 / 9.0, 0.0)).unwrap() - c(0.0, -0.5)).norm() < 1e-7);
        let t = Kernel::Standard.taylor(c(0.0, 0.0), 1.0, 3).unwrap();
        assert!((t[1] - c(0.0, -2.0)).norm() < 1e-14);
        assert!(delta_kernel(c(1.0, 0.0)).is_err());
    }

    #[test]
    fn mirror_values() {
        assert_eq!(delta_kernel_mirror(c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
        assert!(delta_kernel_mirror(c(-1.0 / 3.0, 0.0)).is_err());
        let xc = MIRROR_BRANCH_X;
        assert!((xc - (7.0 - 4.0 * 3f64.sqrt())).abs() < 1e-14);
        assert!(((-2.0 * mirror_critical_phi()).exp() - xc).abs() < 1e-15);
        // The radicand 1 + 8y(1−y)/(1+3y)² vanishes at y = −x_c.
        let y = -xc;
        assert!((1.0 + 8.0 * y * (1.0 - y) / (1.0 + 3.0 * y).powi(2)).abs() < 1e-12);
    }

    #[test]
    fn taylor_matches_values() {
        for kernel in [Kernel::Standard, Kernel::Mirror] {
            let q = c(-1.0, 0.0);
            let x = 0.05;
            let t = kernel.taylor(q, x, 20).unwrap();
            let s = c(0.1, 0.05);
            let series: Complex64 = t.iter().rev().fold(c(0.0, 0.0), |acc, v| acc * s + v);
            let direct = kernel.eval((q + s) * x).unwrap();
            assert!((series - direct).norm() < 1e-13, "{kernel:?}");
        }
    }
}
