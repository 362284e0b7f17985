use crate::{Scalar, SeriesError};
use num_complex::Complex64;

/// Finite Laurent data `Σ_{a=min_degree}^{max} F_a t^a`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentCoeffs<S: Scalar = Complex64> {
    pub min_degree: i64,
    pub coeffs: Vec<S>,
}

impl<S: Scalar> LaurentCoeffs<S> {
    pub fn new(min_degree: i64, coeffs: Vec<S>) -> Self {
        LaurentCoeffs { min_degree, coeffs }
    }

    /// Highest stored degree.
    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.coeffs.len() as i64 - 1
    }

    /// Coefficient of `t^a`, zero outside the window.
    pub fn coeff(&self, a: i64) -> S {
        if a < self.min_degree || a > self.max_degree() {
            S::zero()
        } else {
            self.coeffs[(a - self.min_degree) as usize]
        }
    }

    /// Evaluates the finite sum at `t ≠ 0`.
    pub fn evaluate(&self, t: Complex64) -> S {
        let mut acc = S::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            acc += c.scale(t.powi((self.min_degree + k as i64) as i32));
        }
        acc
    }
}

/// The `t⁰` coefficient of a Laurent series.
pub fn laurent_constant_term<S: Scalar>(f: &LaurentCoeffs<S>) -> Result<S, SeriesError> {
    if f.min_degree > 0 || f.max_degree() < 0 {
        return Err(SeriesError::OutsideWindow {
            degree: 0,
            min: f.min_degree,
            max: f.max_degree(),
        });
    }
    Ok(f.coeff(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn constant_terms() {
        assert_eq!(
            laurent_constant_term(&LaurentCoeffs::new(0, vec![c(3.0), c(1.0)])).unwrap(),
            c(3.0)
        );
        assert_eq!(
            laurent_constant_term(&LaurentCoeffs::new(-1, vec![c(1.0), c(0.0)])).unwrap(),
            c(0.0)
        );
        assert!(laurent_constant_term(&LaurentCoeffs::new(1, vec![c(1.0)])).is_err());
    }
}
