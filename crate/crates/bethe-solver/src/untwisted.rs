use crate::error::SolverError;
use crate::state::{check_numbers, BetheState, Chain};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use std::f64::consts::PI;

const TOLERANCE: f64 = 1e-13;
const MAX_ITERATIONS: usize = 200;

/// Primitive of `arctan` vanishing at zero.
fn primitive(x: f64) -> f64 {
    x * x.atan() - 0.5 * x.mul_add(x, 1.0).ln()
}

/// `π` times the convex potential whose stationary points are the roots.
fn potential(lambda: &[f64], numbers: &[f64], l: f64) -> f64 {
    let mut p = 0.0;
    for (k, (&lk, &ik)) in lambda.iter().zip(numbers).enumerate() {
        p += primitive(lk) - PI * lk * ik / l;
        for &lj in &lambda[k + 1..] {
            p += primitive(lk - lj) / l;
        }
    }
    p
}

/// Residuals `arctan λ_k − π I_k/L + (1/L) Σ_l arctan(λ_k − λ_l)`.
pub fn untwisted_residual(lambda: &[f64], numbers: &[f64], length: usize) -> Vec<f64> {
    let l = length as f64;
    lambda
        .iter()
        .zip(numbers)
        .map(|(&lk, &ik)| {
            let coupling: f64 = lambda.iter().map(|&lj| (lk - lj).atan()).sum();
            lk.atan() - PI * ik / l + coupling / l
        })
        .collect()
}

fn hessian(lambda: &[f64], l: f64) -> DMatrix<f64> {
    let n = lambda.len();
    let mut h = DMatrix::zeros(n, n);
    for k in 0..n {
        let mut diag = 1.0 / (1.0 + lambda[k] * lambda[k]);
        for j in 0..n {
            if j != k {
                let d = lambda[k] - lambda[j];
                let kern = 1.0 / (1.0 + d * d) / l;
                h[(k, j)] = -kern;
                diag += kern;
            }
        }
        h[(k, k)] = diag;
    }
    h
}

/// Solves the untwisted `s = −1` equations by damped Newton descent on the
/// strictly convex potential; the result is real, unique and increasing
/// with the Bethe numbers.
pub fn solve_untwisted(length: usize, numbers: &[f64]) -> Result<BetheState, SolverError> {
    let n = numbers.len();
    check_numbers(length, numbers, (length + n) as f64 / 2.0 - 0.5)?;
    let l = length as f64;
    let mut lambda: Vec<f64> = numbers.iter().map(|&i| (PI * i / (l + n as f64)).tan()).collect();
    let mut iterations = 0;
    loop {
        let g = untwisted_residual(&lambda, numbers, length);
        let max_residual = g.iter().fold(0.0f64, |m, r| m.max(r.abs()));
        if max_residual <= TOLERANCE {
            break;
        }
        if iterations == MAX_ITERATIONS {
            return Err(SolverError::NoConvergence {
                iterations,
                max_residual,
            });
        }
        iterations += 1;
        let grad = DVector::from_vec(g);
        let step = hessian(&lambda, l)
            .cholesky()
            .ok_or(SolverError::SingularJacobian { phi: 0.0 })?
            .solve(&(-&grad));
        let slope = grad.dot(&step);
        let p0 = potential(&lambda, numbers, l);
        let mut t = 1.0;
        let mut trial: Vec<f64>;
        loop {
            trial = lambda.iter().zip(step.iter()).map(|(x, d)| x + t * d).collect();
            let p1 = potential(&trial, numbers, l);
            // Near the minimum the potential is flat to rounding; accept then.
            if p1 <= p0 + 1e-4 * t * slope || (p0 - p1).abs() <= 1e-14 * p0.abs().max(1.0) || t < 1e-10 {
                break;
            }
            t *= 0.5;
        }
        lambda = trial;
    }
    for w in lambda.windows(2) {
        if (w[1] - w[0]).abs() < 1e-10 {
            return Err(SolverError::RootCollision {
                phi: 0.0,
                separation: (w[1] - w[0]).abs(),
            });
        }
    }
    Ok(BetheState {
        length,
        numbers: numbers.to_vec(),
        phi: 0.0,
        roots: lambda.into_iter().map(|x| Complex64::new(x, 0.0)).collect(),
        chain: Chain::SpinMinusOne,
    })
}
