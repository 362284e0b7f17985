use crate::error::SolverError;
use num_complex::Complex64;

/// Which chain the roots belong to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chain {
    /// The `s = −1` chain.
    SpinMinusOne,
    /// The `s = +1` mirror: its energies at `N = |m|·L` roots continue the
    /// `s = −1` energies to density `−|m|`.
    Mirror,
}

impl Chain {
    /// Sign multiplying both the scattering kernel and the energy.
    pub fn sign(self) -> f64 {
        match self {
            Chain::SpinMinusOne => 1.0,
            Chain::Mirror => -1.0,
        }
    }
}

/// A solved set of Bethe roots.
#[derive(Debug, Clone, PartialEq)]
pub struct BetheState {
    pub length: usize,
    pub numbers: Vec<f64>,
    pub phi: f64,
    pub roots: Vec<Complex64>,
    pub chain: Chain,
}

impl BetheState {
    pub fn density(&self) -> f64 {
        self.numbers.len() as f64 / self.length as f64
    }

    /// Largest `|λ_k − i|`.
    pub fn max_distance_from_i(&self) -> f64 {
        let i = Complex64::new(0.0, 1.0);
        self.roots.iter().map(|l| (l - i).norm()).fold(0.0, f64::max)
    }
}

/// Energy per site `(σ/L)·Σ 2/(λ_k² + 1)` with `σ = ±1` the chain sign.
pub fn energy(state: &BetheState) -> Result<Complex64, SolverError> {
    let mut sum = Complex64::new(0.0, 0.0);
    for l in &state.roots {
        let i = Complex64::new(0.0, 1.0);
        let d = (l - i) * (l + i);
        if d.norm() < 1e-12 {
            return Err(SolverError::Pole);
        }
        sum += 2.0 / d;
    }
    Ok(sum * state.chain.sign() / state.length as f64)
}

/// Energy per site `2 + (1/L)·Σ 2/(λ_k² + 1)` of the `s = 0` chain sharing
/// the `s = −1` Bethe equations.
pub fn energy_s0(state: &BetheState) -> Result<Complex64, SolverError> {
    Ok(energy(state)? + 2.0)
}

/// Largest deviation from 1 of
/// `((λ_k − i)/(λ_k + i))·(λ_k/(λ_k − 2i))·e^{2φ}·e^{−2iπI_k/L}`.
///
/// For the mirror chain with `N = L` roots (the continuation of the `m = −1`
/// pseudo-vacuum) the roots obey this decoupled equation whenever the twist
/// is above the kernel's branch point `e^{−2φ} = 1/9`.
pub fn pseudo_vacuum_relation_defect(state: &BetheState) -> f64 {
    let i = Complex64::new(0.0, 1.0);
    let l = state.length as f64;
    state
        .roots
        .iter()
        .zip(&state.numbers)
        .map(|(lam, &n)| {
            let q = (lam - i) / (lam + i) * lam / (lam - 2.0 * i);
            let phase = Complex64::from_polar((2.0 * state.phi).exp(), -2.0 * std::f64::consts::PI * n / l);
            (q * phase - 1.0).norm()
        })
        .fold(0.0, f64::max)
}

/// Validates Bethe numbers: distinct, correct parity, within `|I| < bound`.
pub(crate) fn check_numbers(length: usize, numbers: &[f64], bound: f64) -> Result<(), SolverError> {
    if length == 0 || length % 2 == 1 {
        return Err(SolverError::BadLength(length));
    }
    let offset = if numbers.len().is_multiple_of(2) { 0.5 } else { 0.0 };
    let mut sorted = numbers.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite Bethe numbers"));
    for w in sorted.windows(2) {
        if (w[1] - w[0]).abs() < 0.5 {
            return Err(SolverError::DuplicateNumbers(w[0]));
        }
    }
    for &n in numbers {
        if ((n - offset) - (n - offset).round()).abs() > 1e-9 {
            return Err(SolverError::WrongParity(n));
        }
        if n.abs() >= bound {
            return Err(SolverError::OutOfRange { number: n, bound });
        }
    }
    Ok(())
}
