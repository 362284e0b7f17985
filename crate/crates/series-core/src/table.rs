use crate::{Scalar, SeriesError};
use num_complex::Complex64;

/// Truncated two-index coefficient table `c[a][b]` of a bivariate series
/// `Σ c_ab t^a x^b`, with `t` measured from `basepoint`.
///
/// An entry `(a, b)` is retained iff `a ≤ a_max`, `b ≤ b_max` and
/// `a + b ≤ degree_cap`.  The retained index set is closed under lowering
/// either index, so truncated products are exact on it.  Square tables of
/// order `M` ([`CoeffTable::new`]) have `a_max = b_max = M` and no
/// effective degree cap.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffTable<S: Scalar = Complex64> {
    a_max: usize,
    b_max: usize,
    degree_cap: usize,
    basepoint: Complex64,
    data: Vec<S>,
}

impl<S: Scalar> CoeffTable<S> {
    /// Zero square table of order `order` about `basepoint`.
    pub fn new(order: usize, basepoint: Complex64) -> Self {
        Self::with_shape(order, order, 2 * order, basepoint)
    }

    /// Zero table with explicit index bounds.
    pub fn with_shape(a_max: usize, b_max: usize, degree_cap: usize, basepoint: Complex64) -> Self {
        CoeffTable {
            a_max,
            b_max,
            degree_cap,
            basepoint,
            data: vec![S::zero(); (a_max + 1) * (b_max + 1)],
        }
    }

    /// The unit table: 1 at `(0, 0)`, zero elsewhere.
    pub fn delta_like(other: &Self) -> Self {
        let mut t = Self::zeros_like(other);
        t.set(0, 0, S::one());
        t
    }

    /// Zero table with the same shape and base point.
    pub fn zeros_like(other: &Self) -> Self {
        Self::with_shape(other.a_max, other.b_max, other.degree_cap, other.basepoint)
    }

    /// Truncation order (the larger index bound).
    pub fn order(&self) -> usize {
        self.a_max.max(self.b_max)
    }
    pub fn a_max(&self) -> usize {
        self.a_max
    }
    pub fn b_max(&self) -> usize {
        self.b_max
    }
    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }
    pub fn basepoint(&self) -> Complex64 {
        self.basepoint
    }

    /// Whether `(a, b)` is inside the truncation window.
    #[inline]
    pub fn in_window(&self, a: usize, b: usize) -> bool {
        a <= self.a_max && b <= self.b_max && a + b <= self.degree_cap
    }

    #[inline]
    fn idx(&self, a: usize, b: usize) -> usize {
        a * (self.b_max + 1) + b
    }

    /// Coefficient of `t^a x^b`; zero outside the window.
    #[inline]
    pub fn get(&self, a: usize, b: usize) -> S {
        if self.in_window(a, b) {
            self.data[self.idx(a, b)]
        } else {
            S::zero()
        }
    }

    /// Sets an in-window coefficient; out-of-window writes are dropped.
    #[inline]
    pub fn set(&mut self, a: usize, b: usize, v: S) {
        if self.in_window(a, b) {
            let i = self.idx(a, b);
            self.data[i] = v;
        }
    }

    /// Adds to an in-window coefficient; out-of-window updates are dropped.
    #[inline]
    pub fn add_to(&mut self, a: usize, b: usize, v: S) {
        if self.in_window(a, b) {
            let i = self.idx(a, b);
            self.data[i] += v;
        }
    }

    /// Iterator over in-window `(a, b, value)` triples with nonzero value.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, S)> + '_ {
        (0..=self.a_max).flat_map(move |a| {
            (0..=self.b_max).filter_map(move |b| {
                let v = self.get(a, b);
                if self.in_window(a, b) && !v.is_zero() {
                    Some((a, b, v))
                } else {
                    None
                }
            })
        })
    }

    /// True when every entry is exactly zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Largest modulus of any coefficient.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.magnitude()))
    }

    /// Largest modulus of entries strictly below the diagonal (`a > b`).
    pub fn max_below_diagonal(&self) -> f64 {
        self.nonzero()
            .filter(|(a, b, _)| a > b)
            .fold(0.0, |m, (_, _, v)| m.max(v.magnitude()))
    }

    /// Entry-wise linear combination `self + k·other` (same shape required).
    pub fn axpy(&mut self, k: S, other: &Self) {
        debug_assert!(self.same_shape(other));
        for (d, s) in self.data.iter_mut().zip(&other.data) {
            *d += k * *s;
        }
    }

    /// Entry-wise scaling.
    pub fn scaled(&self, k: S) -> Self {
        let mut t = self.clone();
        for d in t.data.iter_mut() {
            *d = k * *d;
        }
        t
    }

    /// Row `b` (fixed second index) as a vector over the first index.
    pub fn column_b(&self, b: usize) -> Vec<S> {
        (0..=self.a_max).map(|a| self.get(a, b)).collect()
    }

    /// Column `a` (fixed first index) as a vector over the second index.
    pub fn row_a(&self, a: usize) -> Vec<S> {
        (0..=self.b_max).map(|b| self.get(a, b)).collect()
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        self.a_max == other.a_max
            && self.b_max == other.b_max
            && self.degree_cap == other.degree_cap
            && self.basepoint == other.basepoint
    }

    /// Truncated product, assuming identical shapes (unchecked).
    pub fn mul_unchecked(&self, other: &Self) -> Self {
        let mut out = Self::zeros_like(self);
        let nz: Vec<(usize, usize, S)> = self.nonzero().collect();
        for a2 in 0..=other.a_max {
            for b2 in 0..=other.b_max {
                if !other.in_window(a2, b2) {
                    continue;
                }
                let v = other.data[other.idx(a2, b2)];
                if v.is_zero() {
                    continue;
                }
                for &(a1, b1, u) in &nz {
                    let (a, b) = (a1 + a2, b1 + b2);
                    if out.in_window(a, b) {
                        let i = out.idx(a, b);
                        out.data[i] += u * v;
                    }
                }
            }
        }
        out
    }
}

/// Truncated bivariate product: `result[a][b] = Σ u[a1][b1]·v[a2][b2]` over
/// `a1+a2 = a`, `b1+b2 = b`.
pub fn convolve<S: Scalar>(u: &CoeffTable<S>, v: &CoeffTable<S>) -> Result<CoeffTable<S>, SeriesError> {
    if !u.same_shape(v) {
        return Err(SeriesError::Contract(format!(
            "convolve needs equal shapes and base points: ({}, {}, cap {}, t0 {}) vs ({}, {}, cap {}, t0 {})",
            u.a_max, u.b_max, u.degree_cap, u.basepoint, v.a_max, v.b_max, v.degree_cap, v.basepoint
        )));
    }
    Ok(u.mul_unchecked(v))
}

/// Binomial coefficient as a float (exact for the sizes used here).
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut r = 1.0;
    for i in 0..k {
        r = r * (n - i) as f64 / (i + 1) as f64;
    }
    r.round()
}

/// A table together with its convolution powers `c^{[k]}`, `0 ≤ k ≤ k_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerFamily<S: Scalar = Complex64> {
    pub base: CoeffTable<S>,
    pub powers: Vec<CoeffTable<S>>,
}

impl<S: Scalar> PowerFamily<S> {
    /// Builds all powers up to `k_max` by repeated convolution.
    pub fn new(base: CoeffTable<S>, k_max: usize) -> Self {
        let mut powers = Vec::with_capacity(k_max + 1);
        powers.push(CoeffTable::delta_like(&base));
        for k in 1..=k_max {
            let next = powers[k - 1].mul_unchecked(&base);
            powers.push(next);
        }
        PowerFamily { base, powers }
    }

    /// Highest stored power.
    pub fn k_max(&self) -> usize {
        self.powers.len() - 1
    }

    /// Sets `base[a0][b0] = value` and updates every stored power so that it
    /// stays equal to the corresponding power of the new base.
    ///
    /// Requires that the entry was zero when the powers were last consistent.
    pub fn insert_linear(&mut self, a0: usize, b0: usize, value: S) {
        debug_assert!(self.base.get(a0, b0).is_zero());
        self.base.set(a0, b0, value);
        *self = reinstate_linear(self, a0, b0);
    }
}

/// Re-expands the stored powers after the base entry `(a0, b0)` has been
/// set to `A = base[a0][b0]`, assuming the powers were consistent with the
/// base with that entry zeroed:
/// `new[n] = Σ_k C(n,k)·A^{n−k}·shift_{(n−k)(a0,b0)}(old[k])`.
pub fn reinstate_linear<S: Scalar>(family: &PowerFamily<S>, a0: usize, b0: usize) -> PowerFamily<S> {
    let a_val = family.base.get(a0, b0);
    let mut out = family.clone();
    if a_val.is_zero() {
        return out;
    }
    let old = &family.powers;
    let k_max = family.k_max();
    // Powers of A.
    let mut apow = vec![S::one(); k_max + 1];
    for j in 1..=k_max {
        apow[j] = apow[j - 1] * a_val;
    }
    for n in 1..=k_max {
        let mut acc = old[n].clone();
        for k in 0..n {
            let j = n - k;
            let (da, db) = (a0 * j, b0 * j);
            if !acc.in_window(da, db) {
                continue;
            }
            let coef = apow[j].scale(Complex64::new(binomial(n, k), 0.0));
            for (a, b, v) in old[k].nonzero() {
                acc.add_to(a + da, b + db, coef * v);
            }
        }
        out.powers[n] = acc;
    }
    out
}

/// Composition `Σ_n coeffs[n]·A^n` with a table `A` whose `η⁰` constant
/// term vanishes (so the sum terminates within the window).
pub fn compose<S: Scalar>(coeffs: &[Complex64], a: &CoeffTable<S>) -> CoeffTable<S> {
    debug_assert!(
        a.get(0, 0).value() == Complex64::new(0.0, 0.0),
        "compose needs a vanishing constant term"
    );
    let mut out = CoeffTable::zeros_like(a);
    if coeffs.is_empty() {
        return out;
    }
    out.set(0, 0, S::from_c64(coeffs[0]));
    let mut pw = CoeffTable::delta_like(a);
    for c in coeffs.iter().skip(1) {
        pw = pw.mul_unchecked(a);
        if pw.is_zero() {
            break;
        }
        out.axpy(S::from_c64(*c), &pw);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn delta_is_identity() {
        let mut x: CoeffTable = CoeffTable::new(4, c(0.0, 0.0));
        x.set(1, 2, c(1.5, -2.0));
        x.set(3, 1, c(0.0, 4.0));
        let d = CoeffTable::delta_like(&x);
        assert_eq!(convolve(&d, &x).unwrap(), x);
    }

    #[test]
    fn single_entry_square() {
        let mut x: CoeffTable = CoeffTable::new(5, c(0.0, 0.0));
        x.set(1, 1, c(0.0, -2.0));
        let sq = convolve(&x, &x).unwrap();
        assert_eq!(sq.get(2, 2), c(-4.0, 0.0));
        assert_eq!(sq.nonzero().count(), 1);
    }

    #[test]
    fn mismatched_shapes_rejected() {
        let x: CoeffTable = CoeffTable::new(4, c(0.0, 0.0));
        let y: CoeffTable = CoeffTable::new(5, c(0.0, 0.0));
        let z: CoeffTable = CoeffTable::new(4, c(-1.0, 0.0));
        assert!(convolve(&x, &y).is_err());
        assert!(convolve(&x, &z).is_err());
    }

    #[test]
    fn reinstate_zero_update_is_noop() {
        let mut x: CoeffTable = CoeffTable::new(4, c(0.0, 0.0));
        x.set(1, 1, c(0.0, -2.0));
        let fam = PowerFamily::new(x, 4);
        assert_eq!(reinstate_linear(&fam, 2, 3), fam);
    }

    #[test]
    fn reinstate_single_entry() {
        let x: CoeffTable = CoeffTable::new(4, c(0.0, 0.0));
        let mut fam = PowerFamily::new(x, 4);
        fam.insert_linear(1, 1, c(0.0, -2.0));
        assert_eq!(fam.powers[2].get(2, 2), c(-4.0, 0.0));
        assert_eq!(fam.powers[3].get(3, 3), c(0.0, 8.0));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10.0);
        assert_eq!(binomial(20, 10), 184756.0);
        assert_eq!(binomial(3, 4), 0.0);
    }

    #[test]
    fn compose_geometric() {
        // 1/(1 - y) with y = t: coefficients all ones.
        let mut y: CoeffTable = CoeffTable::new(6, c(0.0, 0.0));
        y.set(1, 0, c(1.0, 0.0));
        let g = compose(&[c(1.0, 0.0); 10], &y);
        for a in 0..=6 {
            assert_eq!(g.get(a, 0), c(1.0, 0.0));
        }
    }
}
