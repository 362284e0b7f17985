//! Truncated univariate power series stored as coefficient vectors.
//!
//! All results have the same length as the first argument; coefficients
//! beyond it are discarded.

use crate::Scalar;
use num_complex::Complex64;

/// Truncated product.
pub fn mul<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let n = a.len();
    let mut c = vec![S::zero(); n];
    for (i, &ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, &bj) in b.iter().enumerate().take(n - i) {
            c[i + j] += ai * bj;
        }
    }
    c
}

/// Truncated reciprocal; the constant term must be invertible.
pub fn recip<S: Scalar>(a: &[S]) -> Vec<S> {
    let n = a.len();
    let mut b = vec![S::zero(); n];
    if n == 0 {
        return b;
    }
    let inv0 = a[0].recip();
    b[0] = inv0;
    for k in 1..n {
        let mut s = S::zero();
        for j in 1..=k.min(a.len() - 1) {
            s += a[j] * b[k - j];
        }
        b[k] = -(s * inv0);
    }
    b
}

/// Truncated square root with the principal branch at the constant term.
pub fn sqrt(a: &[Complex64]) -> Vec<Complex64> {
    let n = a.len();
    let mut b = vec![Complex64::new(0.0, 0.0); n];
    if n == 0 {
        return b;
    }
    b[0] = a[0].sqrt();
    for k in 1..n {
        let mut s = a[k];
        for j in 1..k {
            s -= b[j] * b[k - j];
        }
        b[k] = s / (b[0] * 2.0);
    }
    b
}

/// Horner evaluation of `Σ a_k w^k`.
pub fn evaluate<S: Scalar>(a: &[S], w: Complex64) -> S {
    a.iter().rev().fold(S::zero(), |acc, &c| acc.scale(w) + c)
}
