use crate::{LaurentCoeffs, Scalar};
use num_complex::Complex64;

/// `κ_i^j = Σ_k C(j,k)·k^i·(−1)^k`, the value of `∂̸^i (t+1)^j` at `t = −1`
/// where `∂̸ = t·d/dt`.  Vanishes for `j > i`.
///
/// The alternating sum cancels catastrophically for large `i`; it is
/// evaluated instead as `(−1)^j·j!·S(i, j)` with the Stirling numbers of the
/// second kind from their positive recurrence.
pub fn kappa(i: usize, j: usize) -> f64 {
    if j > i {
        return 0.0;
    }
    // Row n of S(n, ·), built up to n = i.
    let mut row = vec![0.0f64; j + 1];
    row[0] = 1.0;
    for _ in 0..i {
        for k in (1..=j).rev() {
            row[k] = k as f64 * row[k] + row[k - 1];
        }
        row[0] = 0.0;
    }
    let factorial: f64 = (1..=j).map(|k| k as f64).product();
    let sign = if j.is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * factorial * row[j]
}

/// `∂̸^k F` at `t = q` from the Taylor coefficients of `F(q + s)` in `s`.
///
/// Uses `∂̸^k (t−q)^l |_{t=q} = q^l·(−1)^l·κ_k^l`, so only `l ≤ k` contribute.
pub fn theta_derivative_at<S: Scalar>(taylor: &[S], q: Complex64, k: usize) -> S {
    let mut acc = S::zero();
    let mut ql = Complex64::new(1.0, 0.0);
    for (l, c) in taylor.iter().enumerate().take(k + 1) {
        let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
        acc += c.scale(ql * sign * kappa(k, l));
        ql *= q;
    }
    acc
}

/// One weighted point evaluation `weight·∂̸^{derivative_order} F(point)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionalTerm {
    pub point: Complex64,
    pub derivative_order: usize,
    pub weight: Complex64,
}

/// A functional `Ξ^p` acting on functions of `t` given by Laurent data at
/// `t = 0`: a multiple of the constant term plus weighted `∂̸`-derivatives
/// at points of the unit circle.  The `p = 0` member of a moment expansion
/// is `−F_0`, optionally plus `η·F(e^{2iπz})` for an excitation.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluationFunctional {
    pub order: usize,
    /// Weight of the constant-term extraction `F_0`.
    pub constant_weight: Complex64,
    /// Point `e^{2iπz}` of a first-order (`η`) evaluation, if any.
    pub eta_point: Option<Complex64>,
    pub terms: Vec<FunctionalTerm>,
}

impl EvaluationFunctional {
    /// `Ξ^0[F] = −F_0`.
    pub fn constant_term_only() -> Self {
        EvaluationFunctional {
            order: 0,
            constant_weight: Complex64::new(-1.0, 0.0),
            eta_point: None,
            terms: Vec::new(),
        }
    }

    /// A functional made only of point terms.
    pub fn from_terms(order: usize, terms: Vec<FunctionalTerm>) -> Self {
        let terms = terms
            .into_iter()
            .filter(|t| t.weight != Complex64::new(0.0, 0.0))
            .collect();
        EvaluationFunctional {
            order,
            constant_weight: Complex64::new(0.0, 0.0),
            eta_point: None,
            terms,
        }
    }

    /// True when the functional annihilates everything.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.constant_weight == Complex64::new(0.0, 0.0) && self.eta_point.is_none()
    }

    /// Applies the functional to Laurent data whose sum converges on the
    /// unit circle; the `η` term contributes `eta·F(point)`.
    pub fn apply(&self, f: &LaurentCoeffs<Complex64>, eta: f64) -> Complex64 {
        let mut acc = self.constant_weight * f.coeff(0);
        for term in &self.terms {
            for (k, c) in f.coeffs.iter().enumerate() {
                let a = f.min_degree + k as i64;
                acc += term.weight * c * (a as f64).powi(term.derivative_order as i32) * term.point.powi(a as i32);
            }
        }
        if let Some(w) = self.eta_point {
            acc += f.evaluate(w) * eta;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kappa_values() {
        assert_eq!(kappa(0, 0), 1.0);
        assert_eq!(kappa(1, 1), -1.0);
        assert_eq!(kappa(1, 2), 0.0);
        assert_eq!(kappa(2, 2), 2.0);
        assert_eq!(kappa(2, 3), 0.0);
    }

    #[test]
    fn kappa_matches_alternating_sum() {
        // Exact integer evaluation of the defining sum.
        for i in 0..=24usize {
            for j in 0..=i {
                let mut acc: i128 = 0;
                let mut binom: i128 = 1;
                for k in 0..=j as i128 {
                    let term = binom * k.pow(i as u32);
                    acc += if k % 2 == 0 { term } else { -term };
                    binom = binom * (j as i128 - k) / (k + 1);
                }
                let got = kappa(i, j);
                assert!(
                    (got - acc as f64).abs() <= 1e-15 * (acc as f64).abs().max(1.0),
                    "κ({i},{j})"
                );
            }
        }
    }

    #[test]
    fn theta_derivative_of_power() {
        // F(t) = t^3 about q: F(q+s) = q^3 + 3q^2 s + 3q s^2 + s^3; ∂̸^2 t^3 = 9 t^3.
        let q = Complex64::new(0.3, -0.7);
        let taylor = [q.powi(3), q.powi(2) * 3.0, q * 3.0, Complex64::new(1.0, 0.0)];
        let d = theta_derivative_at(&taylor, q, 2);
        assert!((d - q.powi(3) * 9.0).norm() < 1e-14);
    }
}
