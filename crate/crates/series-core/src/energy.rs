use num_complex::Complex64;

/// Expansion variable of an [`EnergySeries`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesVariable {
    /// `u = e^{−2φ}`, starting at `u^{−1}`.
    ExpTwist,
    /// Trajectory parameter `ξ`.
    Xi,
    /// `μ = m + 1` (expansion about the second pseudo-vacuum).
    MPlusOne,
    /// `m − 1` (expansion about the `m = 1` state).
    MMinusOne,
    /// `m` itself.
    M,
}

/// Coefficient list `Σ_k coeffs[k]·v^{min_index + k}`.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergySeries {
    pub variable: SeriesVariable,
    pub min_index: i64,
    pub coeffs: Vec<Complex64>,
}

impl EnergySeries {
    pub fn new(variable: SeriesVariable, min_index: i64, coeffs: Vec<Complex64>) -> Self {
        EnergySeries {
            variable,
            min_index,
            coeffs,
        }
    }

    /// Coefficient of `v^b` (zero outside the stored range).
    pub fn coeff(&self, b: i64) -> Complex64 {
        if b < self.min_index || b >= self.min_index + self.coeffs.len() as i64 {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[(b - self.min_index) as usize]
        }
    }

    /// Largest stored power.
    pub fn max_index(&self) -> i64 {
        self.min_index + self.coeffs.len() as i64 - 1
    }

    /// Truncated sum at `v` (must be nonzero when `min_index < 0`).
    pub fn evaluate_at(&self, v: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc * v.powi(self.min_index as i32)
    }

    /// Partial sums `S_k = Σ_{i<k} coeffs[i]·v^{min_index+i}`, for `k = 1..=len`.
    pub fn partial_sums(&self, v: f64) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += c * v.powi(self.min_index as i32 + i as i32);
            out.push(acc);
        }
        out
    }

    /// Largest imaginary part among the coefficients.
    pub fn max_imag(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.im.abs()))
    }

    /// Real parts of the coefficients.
    pub fn real_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.re).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluation_with_negative_power() {
        let s = EnergySeries::new(
            SeriesVariable::ExpTwist,
            -1,
            vec![
                Complex64::new(2.0, 0.0),
                Complex64::new(1.0, 0.0),
                Complex64::new(3.0, 0.0),
            ],
        );
        let v = 0.5;
        assert!((s.evaluate_at(v).re - (4.0 + 1.0 + 1.5)).abs() < 1e-15);
        let ps = s.partial_sums(v);
        assert!((ps[0].re - 4.0).abs() < 1e-15);
        assert!((ps[2].re - 6.5).abs() < 1e-15);
    }
}
