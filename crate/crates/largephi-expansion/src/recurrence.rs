use crate::error::ExpansionError;
use filling_moments::MomentProvider;
use num_complex::Complex64;
use series_core::{binomial, CoeffTable, EnergySeries, PowerFamily, Scalar, SeriesVariable};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `arctan⁽ⁿ⁾(0)/n!`: zero for even `n`, `(−1)^{(n−1)/2}/n` for odd `n`.
fn arctan_at_zero(n: usize) -> f64 {
    if n.is_multiple_of(2) {
        0.0
    } else if (n / 2).is_multiple_of(2) {
        1.0 / n as f64
    } else {
        -1.0 / n as f64
    }
}

/// Root-deviation tables produced by the recurrence.
///
/// `c` holds `c_ab` (coefficient of `e^{2iπaI/L}u^b` in `λ − i`) with its
/// convolution powers; `c_tilde` holds `c̃_ab = c_{a+1,b+1}/c_11` with its
/// powers.  Both are triangular: entries with `a > b` vanish.
#[derive(Debug, Clone)]
pub struct DeviationTables<S: Scalar> {
    pub c: PowerFamily<S>,
    pub c_tilde: PowerFamily<S>,
}

/// Runs the recurrence to order `order` for arbitrary moments `X_a` and
/// returns `f_{−1}, …, f_{order−2}` together with the deviation tables.
///
/// `moment(a)` is queried for `−1 ≤ a ≤ order`.
pub fn expand_generic<S: Scalar>(
    moment: impl Fn(i64) -> S,
    order: usize,
) -> Result<(Vec<S>, DeviationTables<S>), ExpansionError> {
    if order < 2 {
        return Err(ExpansionError::OrderTooSmall { min: 2, got: order });
    }
    let m = order;
    let c11 = Complex64::new(0.0, -2.0);
    let x: Vec<S> = (0..=m as i64).map(&moment).collect();
    let x_minus_one = moment(-1);

    let zero_table = CoeffTable::<S>::new(m, Complex64::new(0.0, 0.0));
    let mut c = PowerFamily::new(zero_table.clone(), m);
    let mut ct = PowerFamily::new(zero_table, m);
    c.insert_linear(1, 1, S::from_c64(c11));

    // (−1)^{n+1}/(n·(2i)^n) and (−1)^n/n.
    let log_weight: Vec<Complex64> = (0..=m)
        .map(|n| {
            if n == 0 {
                Complex64::new(0.0, 0.0)
            } else {
                let sign = if n % 2 == 0 { -1.0 } else { 1.0 };
                sign / (n as f64 * (2.0 * I).powi(n as i32))
            }
        })
        .collect();
    let tilde_weight: Vec<f64> = (0..=m)
        .map(|n| {
            if n == 0 {
                0.0
            } else if n % 2 == 0 {
                1.0 / n as f64
            } else {
                -1.0 / n as f64
            }
        })
        .collect();

    for b in 0..m {
        // Moments of the powers: Mom_j(b2) = Σ_a X_a c^{[j]}_{a,b2}, for b2 ≤ b.
        let mom: Vec<Vec<S>> = (0..=b)
            .map(|j| {
                (0..=b)
                    .map(|b2| {
                        if j == 0 {
                            if b2 == 0 {
                                x[0]
                            } else {
                                S::zero()
                            }
                        } else {
                            (1..=b2).fold(S::zero(), |acc, a2| acc + x[a2] * c.powers[j].get(a2, b2))
                        }
                    })
                    .collect()
            })
            .collect();

        for a in 0..=b {
            let mut acc = S::zero();
            for n in 2..=m {
                let v = ct.powers[n].get(a, b);
                if !v.is_zero() {
                    acc += v.scale(Complex64::new(tilde_weight[n], 0.0));
                }
            }
            for n in 1..=m {
                let v = c.powers[n].get(a, b);
                if !v.is_zero() {
                    acc += v.scale(log_weight[n]);
                }
            }
            let mut coupling = S::zero();
            for n in (1..=b).step_by(2) {
                let at = arctan_at_zero(n);
                for q in 0..=n {
                    let w = at * binomial(n, q) * if (n - q) % 2 == 0 { 1.0 } else { -1.0 };
                    let mut inner = S::zero();
                    for b1 in 0..=b {
                        let cq = c.powers[q].get(a, b1);
                        if !cq.is_zero() {
                            inner += cq * mom[n - q][b - b1];
                        }
                    }
                    coupling += inner.scale(Complex64::new(w, 0.0));
                }
            }
            acc += coupling.scale(Complex64::new(0.0, -2.0));
            if a == 0 && b == 0 {
                debug_assert!(acc.magnitude() < 1e-12, "c̃_00 must vanish");
                continue;
            }
            ct.insert_linear(a, b, acc);
            if a < m && b < m {
                c.insert_linear(a + 1, b + 1, acc.scale(c11));
            }
        }
    }

    // f_b = Σ_n Σ_a X_a [(−1)^n/(i c11)·c̃^{[n]}_{a+1,b+1} + c^{[n]}_{ab}/(2(−2i)^n)].
    let inv_ic11 = 1.0 / (I * c11);
    let mut f = Vec::with_capacity(m);
    for b in -1..=(m as i64 - 2) {
        let mut acc = S::zero();
        for n in 0..=m {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let wt = inv_ic11 * sign;
            let wc = 1.0 / (2.0 * (-2.0 * I).powi(n as i32));
            for a in -1..=(b + 1) {
                let xa = if a == -1 { x_minus_one } else { x[a as usize] };
                let t = ct.powers[n].get((a + 1) as usize, (b + 1) as usize);
                let mut term = t.scale(wt);
                if a >= 0 && b >= 0 {
                    term += c.powers[n].get(a as usize, b as usize).scale(wc);
                }
                if !term.is_zero() {
                    acc += xa * term;
                }
            }
        }
        f.push(acc);
    }
    Ok((f, DeviationTables { c, c_tilde: ct }))
}

/// Energy coefficients `f_{−1}, …, f_{order−2}` of `F = Σ_b f_b e^{−2bφ}`.
pub fn expand_coefficients(moments: &MomentProvider, order: usize) -> Result<EnergySeries, ExpansionError> {
    let (f, _) = expand_generic(|a| moments.moment(a), order)?;
    Ok(EnergySeries::new(SeriesVariable::ExpTwist, -1, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use filling_moments::FillingConfig;

    #[test]
    fn pseudo_vacuum_is_flat() {
        let pv = MomentProvider::Filling(FillingConfig::standard(-1.0));
        let s = expand_coefficients(&pv, 20).unwrap();
        assert!(s.coeff(-1).norm() < 1e-15);
        assert!((s.coeff(0) - 1.0).norm() < 1e-12);
        for b in 1..=18 {
            assert!(s.coeff(b).norm() < 1e-12, "f_{b} = {}", s.coeff(b));
        }
    }

    #[test]
    fn deviation_tables_are_triangular() {
        let (_, t) = expand_generic(|a| Complex64::new(0.3 / (1.0 + a.abs() as f64), 0.1 * a as f64), 10).unwrap();
        assert_eq!(t.c.base.max_below_diagonal(), 0.0);
        assert_eq!(t.c_tilde.base.max_below_diagonal(), 0.0);
        assert_eq!(t.c.base.get(1, 1), Complex64::new(0.0, -2.0));
    }
}
