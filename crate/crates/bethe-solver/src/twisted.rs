use crate::error::SolverError;
use crate::state::{check_numbers, BetheState, Chain};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Continuation and Newton settings for the twisted solver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwistOptions {
    /// Twist at which the asymptotic starting guess is used.
    pub phi_start: f64,
    /// Initial continuation step in `φ`; halved whenever Newton fails.
    pub initial_step: f64,
    /// Smallest step tried before giving up.
    pub min_step: f64,
    /// Convergence threshold on the largest logarithmic residual.
    pub tolerance: f64,
    /// Newton iterations allowed per continuation step.
    pub max_newton: usize,
}

impl Default for TwistOptions {
    fn default() -> Self {
        TwistOptions {
            phi_start: 4.0,
            initial_step: 0.25,
            min_step: 1e-6,
            tolerance: 1e-12,
            max_newton: 20,
        }
    }
}

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Residuals `r_k = Log[(1 + iλ_k)/((1 − iλ_k)·e^{θ_k})]` of the twisted
/// equations, with `θ_k = 2iπI_k/L − 2φ − σ(2i/L)Σ_l arctan(λ_k − λ_l)`.
pub fn log_residual(roots: &[Complex64], numbers: &[f64], length: usize, phi: f64, chain: Chain) -> Vec<Complex64> {
    let deviations: Vec<Complex64> = roots.iter().map(|l| l - I).collect();
    deviation_residual(&deviations, numbers, length, phi, chain)
}

/// The residuals in terms of `δ_k = λ_k − i`; `1 + iλ = iδ` and
/// `1 − iλ = 2 − iδ` then carry no cancellation at large twist.
fn deviation_residual(delta: &[Complex64], numbers: &[f64], length: usize, phi: f64, chain: Chain) -> Vec<Complex64> {
    let l = length as f64;
    let sigma = chain.sign();
    delta
        .iter()
        .zip(numbers)
        .map(|(&dk, &ik)| {
            let coupling: Complex64 = delta.iter().map(|&dj| (dk - dj).atan()).sum();
            let theta = I * (2.0 * PI * ik / l) - 2.0 * phi - coupling * (I * (2.0 * sigma / l));
            (I * dk / ((2.0 - I * dk) * theta.exp())).ln()
        })
        .collect()
}

/// Largest relative residual `|lhs/rhs − 1|` of the product form
/// `((λ_k−i)/(λ_k+i))^L = e^{−2φL} Π_{l≠k} ((λ_k−λ_l+i)/(λ_k−λ_l−i))^σ`,
/// evaluated through logarithms so that no power over- or underflows.
pub fn exp_form_residual(state: &BetheState) -> f64 {
    let l = state.length as f64;
    let sigma = state.chain.sign();
    let mut worst: f64 = 0.0;
    for (k, &lk) in state.roots.iter().enumerate() {
        let mut d = ((lk - I) / (lk + I)).ln() * l + 2.0 * state.phi * l;
        for (j, &lj) in state.roots.iter().enumerate() {
            if j != k {
                let x = lk - lj;
                d -= ((x + I) / (x - I)).ln() * sigma;
            }
        }
        let wrapped = Complex64::new(d.re, d.im - 2.0 * PI * (d.im / (2.0 * PI)).round());
        worst = worst.max((wrapped.exp() - 1.0).norm());
    }
    worst
}

fn jacobian(delta: &[Complex64], length: usize, chain: Chain) -> DMatrix<Complex64> {
    let n = delta.len();
    let coef = I * (2.0 * chain.sign() / length as f64);
    let mut j = DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
    for k in 0..n {
        // 1 + λ² = δ(2i + δ)
        let mut diag = 2.0 * I / (delta[k] * (2.0 * I + delta[k]));
        for l in 0..n {
            if l != k {
                let d = delta[k] - delta[l];
                let kern = 1.0 / (1.0 + d * d);
                j[(k, l)] = -coef * kern;
                diag += coef * kern;
            }
        }
        j[(k, k)] = diag;
    }
    j
}

fn max_norm(v: &[Complex64]) -> f64 {
    v.iter().fold(0.0, |m, r| m.max(r.norm()))
}

fn min_separation(roots: &[Complex64]) -> f64 {
    let mut best = f64::INFINITY;
    for (k, a) in roots.iter().enumerate() {
        for b in &roots[k + 1..] {
            best = best.min((a - b).norm());
        }
    }
    best
}

enum NewtonFailure {
    Singular,
    Diverged,
}

fn newton(
    mut delta: Vec<Complex64>,
    numbers: &[f64],
    length: usize,
    phi: f64,
    chain: Chain,
    opts: &TwistOptions,
) -> Result<Vec<Complex64>, NewtonFailure> {
    for _ in 0..=opts.max_newton {
        let r = deviation_residual(&delta, numbers, length, phi, chain);
        let res = max_norm(&r);
        if !res.is_finite() {
            return Err(NewtonFailure::Diverged);
        }
        if res <= opts.tolerance {
            return Ok(delta);
        }
        let step = jacobian(&delta, length, chain)
            .lu()
            .solve(&DVector::from_vec(r))
            .ok_or(NewtonFailure::Singular)?;
        for (x, d) in delta.iter_mut().zip(step.iter()) {
            *x -= d;
        }
    }
    Err(NewtonFailure::Diverged)
}

/// Asymptotic large-twist deviation `λ − i ≈ −2i·e^{−2φ}·e^{2iπI/L}` of a first-level root.
fn asymptotic_guess(numbers: &[f64], length: usize, phi: f64) -> Vec<Complex64> {
    numbers
        .iter()
        .map(|&n| -2.0 * I * (-2.0 * phi).exp() * Complex64::from_polar(1.0, 2.0 * PI * n / length as f64))
        .collect()
}

/// Solves the twisted equations at every requested twist, following a
/// single continuation path downward from `opts.phi_start`.  Results are
/// returned in the order of `phis`.
pub fn solve_twisted_sweep(
    length: usize,
    numbers: &[f64],
    phis: &[f64],
    chain: Chain,
    opts: &TwistOptions,
) -> Result<Vec<BetheState>, SolverError> {
    let n = numbers.len();
    check_numbers(length, numbers, (length + n) as f64 / 2.0 - 0.5)?;
    if let Some(&bad) = phis.iter().find(|p| !(p.is_finite() && **p >= 0.0)) {
        return Err(SolverError::BadTwist(bad));
    }
    let mut order: Vec<usize> = (0..phis.len()).collect();
    order.sort_by(|&a, &b| phis[b].partial_cmp(&phis[a]).expect("finite twists"));
    let mut out: Vec<Option<BetheState>> = vec![None; phis.len()];

    let top = phis.iter().cloned().fold(opts.phi_start, f64::max);
    let mut phi = top;
    let mut delta = newton(
        asymptotic_guess(numbers, length, phi),
        numbers,
        length,
        phi,
        chain,
        opts,
    )
    .map_err(|_| SolverError::ContinuationStalled { phi })?;
    let mut previous: Option<(Vec<Complex64>, f64)> = None;
    let mut step = opts.initial_step;

    for idx in order {
        let target = phis[idx];
        while phi > target + 1e-14 {
            let h = step.min(phi - target);
            // Secant predictor from the last two points of the path.
            let seed: Vec<Complex64> = match &previous {
                Some((prev, prev_h)) => delta
                    .iter()
                    .zip(prev)
                    .map(|(x, p)| x + (x - p) * (h / prev_h))
                    .collect(),
                None => delta.clone(),
            };
            match newton(seed, numbers, length, phi - h, chain, opts)
                .or_else(|_| newton(delta.clone(), numbers, length, phi - h, chain, opts))
            {
                Ok(next) => {
                    let sep = min_separation(&next);
                    if sep < 1e-10 {
                        return Err(SolverError::RootCollision {
                            phi: phi - h,
                            separation: sep,
                        });
                    }
                    previous = Some((std::mem::replace(&mut delta, next), h));
                    phi -= h;
                    step = (2.0 * h).min(opts.initial_step);
                }
                Err(failure) => {
                    step = h / 2.0;
                    if step < opts.min_step {
                        return Err(match failure {
                            NewtonFailure::Singular => SolverError::SingularJacobian { phi },
                            NewtonFailure::Diverged => SolverError::ContinuationStalled { phi },
                        });
                    }
                }
            }
        }
        out[idx] = Some(BetheState {
            length,
            numbers: numbers.to_vec(),
            phi: target,
            roots: delta.iter().map(|d| d + I).collect(),
            chain,
        });
    }
    Ok(out.into_iter().map(|s| s.expect("every twist visited")).collect())
}

/// Solves the twisted equations at a single twist by continuation.
pub fn solve_twisted(
    length: usize,
    numbers: &[f64],
    phi: f64,
    chain: Chain,
    opts: &TwistOptions,
) -> Result<BetheState, SolverError> {
    Ok(solve_twisted_sweep(length, numbers, &[phi], chain, opts)?.remove(0))
}
