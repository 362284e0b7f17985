//! Independent oracle: the root-deviation generating function as the fixed
//! point of a functional equation, using plain nested vectors.
//!
//! With `G(t, x) = −2i·t·x·H(t, x)` (the deviation `λ − i` as a function of
//! `t = e^{2iπI/L}` and `x = e^{−2φ}`), the Bethe equations become
//! `H = E/(1 + t·x·E)` with `E = exp(−2i·Σ_n a_n Σ_q C(n,q)(−1)^{n−q} G^q·𝓜[G^{n−q}])`,
//! where `𝓜[P](x) = Σ_a X_a [t^a] P(t, x)` and `a_n` are the arctan Taylor
//! coefficients at zero.  The energy is
//! `f_b = ½ Σ_a X_a [t^{a+1} x^{b+1}] 1/(H(1 − t·x·H))`.

#![allow(dead_code)]

use num_complex::Complex64;

pub type Grid = Vec<Vec<Complex64>>;

fn zero(k: usize) -> Grid {
    vec![vec![Complex64::new(0.0, 0.0); k + 1]; k + 1]
}

fn one(k: usize) -> Grid {
    let mut g = zero(k);
    g[0][0] = Complex64::new(1.0, 0.0);
    g
}

fn mul(a: &Grid, b: &Grid, k: usize) -> Grid {
    let mut c = zero(k);
    for i in 0..=k {
        for j in 0..=k {
            if a[i][j] == Complex64::new(0.0, 0.0) {
                continue;
            }
            for p in 0..=k - i {
                for q in 0..=k - j {
                    c[i + p][j + q] += a[i][j] * b[p][q];
                }
            }
        }
    }
    c
}

fn shift_tx(a: &Grid, k: usize) -> Grid {
    let mut c = zero(k);
    for i in 0..k {
        for j in 0..k {
            c[i + 1][j + 1] = a[i][j];
        }
    }
    c
}

/// `1/(1 + Y)` for `Y` with zero constant term.
fn inv_one_plus(y: &Grid, k: usize) -> Grid {
    let mut out = one(k);
    let mut term = one(k);
    for _ in 0..=2 * k {
        term = mul(&term, y, k);
        for row in term.iter_mut() {
            for v in row.iter_mut() {
                *v = -*v;
            }
        }
        for i in 0..=k {
            for j in 0..=k {
                out[i][j] += term[i][j];
            }
        }
    }
    out
}

fn binom(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Returns `f_{−1}, …, f_{k−1}` from moments `x(a)`, truncating at order `k`.
pub fn oracle_energy(x: &dyn Fn(i64) -> Complex64, k: usize) -> Vec<Complex64> {
    let mut h = one(k);
    let at: Vec<f64> = (0..=k + 1)
        .map(|n| {
            if n % 2 == 0 {
                0.0
            } else if (n / 2) % 2 == 0 {
                1.0 / n as f64
            } else {
                -1.0 / n as f64
            }
        })
        .collect();
    for _ in 0..k + 2 {
        let mut g = shift_tx(&h, k);
        for row in g.iter_mut() {
            for v in row.iter_mut() {
                *v *= Complex64::new(0.0, -2.0);
            }
        }
        let mut powers = vec![one(k)];
        for n in 1..=k {
            let next = mul(&powers[n - 1], &g, k);
            powers.push(next);
        }
        let moms: Vec<Vec<Complex64>> = powers
            .iter()
            .map(|p| (0..=k).map(|b| (0..=k).map(|a| x(a as i64) * p[a][b]).sum()).collect())
            .collect();
        let mut s = zero(k);
        for n in 1..=k {
            if at[n] == 0.0 {
                continue;
            }
            for q in 0..=n {
                let w = at[n] * binom(n, q) * if (n - q) % 2 == 0 { 1.0 } else { -1.0 };
                for a in 0..=k {
                    for b1 in 0..=k {
                        let v = powers[q][a][b1];
                        if v == Complex64::new(0.0, 0.0) {
                            continue;
                        }
                        for b2 in 0..=k - b1 {
                            s[a][b1 + b2] += v * moms[n - q][b2] * w;
                        }
                    }
                }
            }
        }
        // E = exp(−2i S)
        let mut wgrid = s.clone();
        for row in wgrid.iter_mut() {
            for v in row.iter_mut() {
                *v *= Complex64::new(0.0, -2.0);
            }
        }
        let mut e = one(k);
        let mut term = one(k);
        for j in 1..=2 * k {
            term = mul(&term, &wgrid, k);
            for row in term.iter_mut() {
                for v in row.iter_mut() {
                    *v /= j as f64;
                }
            }
            for a in 0..=k {
                for b in 0..=k {
                    e[a][b] += term[a][b];
                }
            }
        }
        let d = inv_one_plus(&shift_tx(&e, k), k);
        h = mul(&e, &d, k);
    }
    // Q = 1/(H(1 − t x H)), H has constant term 1.
    let txh = shift_tx(&h, k);
    let hh = mul(&h, &txh, k);
    let mut dd = h.clone();
    for a in 0..=k {
        for b in 0..=k {
            dd[a][b] -= hh[a][b];
        }
    }
    dd[0][0] -= Complex64::new(1.0, 0.0);
    let q = inv_one_plus(&dd, k);
    (-1..k as i64)
        .map(|b| {
            (-1..k as i64)
                .filter(|a| a + 1 <= k as i64)
                .map(|a| x(a) * q[(a + 1) as usize][(b + 1) as usize])
                .sum::<Complex64>()
                / 2.0
        })
        .collect()
}

/// Parses a printed decimal and returns it with half a unit in its last digit.
pub fn printed(s: &str) -> (f64, f64) {
    let (mantissa, exp) = match s.split_once('e') {
        Some((m, e)) => (m, e.parse::<i32>().unwrap()),
        None => (s, 0),
    };
    let digits_after = mantissa.split_once('.').map(|(_, f)| f.len() as i32).unwrap_or(0);
    let v: f64 = s.parse().unwrap();
    (v, 0.5 * 10f64.powi(exp - digits_after) * 1.0001)
}
