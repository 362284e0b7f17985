use crate::SeriesError;
use num_complex::Complex64;

/// Taylor coefficients `t_n = arctan^{(n)}(z0)/n!` for `0 ≤ n ≤ n_max`.
///
/// `t_0` is the principal value.  Higher coefficients follow from
/// `(1+(z0+w)²)·f′(w) = 1`:
/// `(1+z0²)(n+1)t_{n+1} + 2z0·n·t_n + (n−1)t_{n−1} = 0` for `n ≥ 1`.
pub fn arctan_taylor_about(z0: Complex64, n_max: usize) -> Result<Vec<Complex64>, SeriesError> {
    let i = Complex64::new(0.0, 1.0);
    if (z0 - i).norm() < 1e-12 || (z0 + i).norm() < 1e-12 {
        return Err(SeriesError::SingularPoint {
            point: format!("{z0}"),
            what: "arctan is singular at ±i",
        });
    }
    let q = Complex64::new(1.0, 0.0) + z0 * z0;
    let mut t = Vec::with_capacity(n_max + 1);
    t.push(z0.atan());
    if n_max >= 1 {
        t.push(q.inv());
    }
    for n in 1..n_max {
        let nf = n as f64;
        let next = -(z0 * 2.0 * nf * t[n] + (nf - 1.0) * t[n - 1]) / (q * (nf + 1.0));
        t.push(next);
    }
    Ok(t)
}

/// Logarithmic expansion of `arctan` about `i`:
/// `arctan(i+x) = log(ix/2)/(2i) + Σ_{n≥1} S_n x^n`,
/// with `S_n = (1/2i)·(−1)^n/(n(2i)^n)`.
///
/// The `log(x)` piece is returned symbolically through `log_constant`
/// (the value `log(i/2)/(2i)` of the `x`-independent part); callers combine
/// the remaining `log(x)/(2i)` with the twist and Bethe-number terms.
#[derive(Debug, Clone, PartialEq)]
pub struct ArctanLogExpansion {
    /// `log(i/2)/(2i)`, principal branch.
    pub log_constant: Complex64,
    /// `S_1..S_{n_max}` (index 0 holds `S_1`).
    pub s: Vec<Complex64>,
}

impl ArctanLogExpansion {
    /// Evaluates `log(ix/2)/(2i) + Σ S_n x^n` (principal logarithm).
    pub fn evaluate(&self, x: Complex64) -> Complex64 {
        let two_i = Complex64::new(0.0, 2.0);
        let mut acc = (Complex64::new(0.0, 0.5) * x).ln() / two_i;
        let mut p = x;
        for s in &self.s {
            acc += s * p;
            p *= x;
        }
        acc
    }
}

/// Coefficients of the logarithmic expansion of `arctan(i+x)`.
pub fn arctan_log_coeffs(n_max: usize) -> ArctanLogExpansion {
    let two_i = Complex64::new(0.0, 2.0);
    let s = (1..=n_max)
        .map(|n| {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            sign / (two_i * n as f64 * two_i.powu(n as u32))
        })
        .collect();
    ArctanLogExpansion {
        log_constant: Complex64::new(0.0, 0.5).ln() / two_i,
        s,
    }
}
