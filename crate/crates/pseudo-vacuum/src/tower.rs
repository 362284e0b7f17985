use crate::error::PseudoVacuumError;
use crate::kernel::Kernel;
use num_complex::Complex64;
use series_core::univariate::{evaluate, mul, recip};
use series_core::{
    arctan_taylor_about, binomial, compose, theta_derivative_at, CoeffTable, EvaluationFunctional, Scalar,
};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Number of `t`-powers kept in the origin table.  The energy only reads the
/// `t¹` coefficient of `1/(h·(1 − t·x·h))`, so `t²` suffices.
pub const ORIGIN_T_ORDER: usize = 2;

/// Smallest admissible modulus of the linearised-equation denominator
/// `arctan′(i+Δ) + σ·arctan′(Δ)` at any expansion point.
pub const MIN_DENOMINATOR: f64 = 1e-6;

/// One weighted point evaluation read by the recurrence: `weight·∂̸^k F(point)`.
#[derive(Debug, Clone, Copy)]
struct Source<S> {
    point: usize,
    k: usize,
    weight: S,
}

/// Generating functions `G(t) = Σ_p ε^p γ_p(t, x)` of the root deviations
/// along a one-parameter deformation of a pseudo-vacuum, with the energy
/// coefficients `f_p` they determine.
///
/// The deformation is specified by functionals `Ξ^p` (one per order) that
/// express the `p`-th moment derivative as point evaluations.  `γ_p` is
/// stored as Taylor tables about every point the functionals read (row `p`,
/// column `s` = power of `t − point`, truncated at `p + s ≤ s_order`), and
/// about `t = 0` through `G = −2i·x·t·h(t)`, which absorbs the logarithmic
/// singularity of `arctan(i + G)` at the origin.
#[derive(Debug, Clone)]
pub struct GammaTower<S: Scalar = Complex64> {
    x: f64,
    order: usize,
    s_order: usize,
    kernel: Kernel,
    points: Vec<Complex64>,
    kernel_series: Vec<Vec<Complex64>>,
    tables: Vec<CoeffTable<S>>,
    origin: CoeffTable<S>,
    energy: Vec<S>,
    min_denominator: f64,
}

/// Collects the expansion points read by the functionals, merging exact
/// repeats and rejecting near-collisions and the origin.
fn collect_points(functionals: &[EvaluationFunctional]) -> Result<Vec<Complex64>, PseudoVacuumError> {
    let mut points: Vec<Complex64> = Vec::new();
    let candidates = functionals
        .iter()
        .flat_map(|f| f.terms.iter().map(|t| t.point).chain(f.eta_point));
    for q in candidates {
        if q.norm() < 1e-8 {
            return Err(PseudoVacuumError::BadFunctional(
                "point evaluations at t = 0 are not supported; use the constant-term weight".into(),
            ));
        }
        match points.iter().find(|p| (**p - q).norm() < 1e-8) {
            Some(p) if (*p - q).norm() <= 1e-14 => {}
            Some(p) => return Err(PseudoVacuumError::PointCollision { a: *p, b: q }),
            None => points.push(q),
        }
    }
    Ok(points)
}

fn point_index(points: &[Complex64], q: Complex64) -> usize {
    points
        .iter()
        .position(|p| (*p - q).norm() <= 1e-14)
        .expect("point registered by collect_points")
}

/// `A^0, A^1, …` until the powers vanish (at most `n_max + 1` entries).
fn powers<S: Scalar>(a: &CoeffTable<S>, n_max: usize) -> Vec<CoeffTable<S>> {
    let mut out = vec![CoeffTable::delta_like(a)];
    for _ in 0..n_max {
        let next = out.last().expect("non-empty").mul_unchecked(a);
        if next.is_zero() {
            break;
        }
        out.push(next);
    }
    out
}

/// The table with the `η⁰` part of its `(0, 0)` entry removed (the value
/// about which the Taylor data are taken).
fn without_constant<S: Scalar>(a: &CoeffTable<S>) -> CoeffTable<S> {
    let mut out = a.clone();
    let c = a.get(0, 0);
    out.set(0, 0, c - S::from_c64(c.value()));
    out
}

/// The part of `v` that is first order in `η`.
fn eta_part<S: Scalar>(v: S) -> S {
    v - S::from_c64(v.value())
}

/// `x·t·h(t)`: the origin table shifted by one power of `t` and scaled.
fn shifted<S: Scalar>(h: &CoeffTable<S>, factor: Complex64) -> CoeffTable<S> {
    let mut out = CoeffTable::zeros_like(h);
    for (p, s, v) in h.nonzero() {
        out.set(p, s + 1, v.scale(factor));
    }
    out
}

fn to_scalar<S: Scalar>(v: &[Complex64]) -> Vec<S> {
    v.iter().map(|z| S::from_c64(*z)).collect()
}

impl<S: Scalar> GammaTower<S> {
    /// Builds the tower for `functionals[p] = Ξ^p`, `p = 0..=P`.
    ///
    /// `functionals[0]` must be the constant-term functional `−F_0`,
    /// optionally carrying an `η`-point (whose contribution is first order
    /// in the formal parameter `η` of the scalar type); every `p ≥ 1`
    /// functional must consist of point terms only.  `s_order` is the total
    /// truncation of the point tables (default `P + 2`, at least `P`).
    pub fn build(
        kernel: Kernel,
        x: f64,
        functionals: &[EvaluationFunctional],
        s_order: Option<usize>,
    ) -> Result<Self, PseudoVacuumError> {
        if !(x > 0.0 && x <= 1.0) {
            return Err(PseudoVacuumError::XOutOfRange { x });
        }
        let first = functionals
            .first()
            .ok_or_else(|| PseudoVacuumError::BadFunctional("empty functional list".into()))?;
        if first.constant_weight != Complex64::new(-1.0, 0.0) || !first.terms.is_empty() {
            return Err(PseudoVacuumError::BadFunctional(
                "the order-0 functional must be −F_0 (plus an optional η point)".into(),
            ));
        }
        for (p, f) in functionals.iter().enumerate() {
            if f.order != p {
                return Err(PseudoVacuumError::BadFunctional(format!(
                    "functional at index {p} has order {}",
                    f.order
                )));
            }
            if p > 0 && (f.constant_weight != Complex64::new(0.0, 0.0) || f.eta_point.is_some()) {
                return Err(PseudoVacuumError::BadFunctional(format!(
                    "functional of order {p} must consist of point terms only"
                )));
            }
        }
        let order = functionals.len() - 1;
        let s_order = s_order.unwrap_or(order + 2);
        if s_order < order {
            return Err(PseudoVacuumError::BadFunctional(format!(
                "point-table truncation {s_order} is below the order {order}"
            )));
        }
        let points = collect_points(functionals)?;
        let n_pts = points.len();
        let sigma = kernel.sigma();
        let n_max = s_order.max(order + ORIGIN_T_ORDER) + 1;

        let sources: Vec<Vec<Source<S>>> = functionals
            .iter()
            .map(|f| {
                let mut v: Vec<Source<S>> = f
                    .terms
                    .iter()
                    .map(|t| Source {
                        point: point_index(&points, t.point),
                        k: t.derivative_order,
                        weight: S::from_c64(t.weight),
                    })
                    .collect();
                if let Some(w) = f.eta_point {
                    v.push(Source {
                        point: point_index(&points, w),
                        k: 0,
                        weight: S::one().times_eta(),
                    });
                }
                v
            })
            .collect();
        let has_eta = functionals[0].eta_point.is_some();

        // Zeroth order: the kernel itself about every point.
        let mut kernel_series = Vec::with_capacity(n_pts);
        let mut tables = Vec::with_capacity(n_pts);
        let mut comp = Vec::with_capacity(n_pts);
        let mut energy_density = Vec::with_capacity(n_pts);
        let mut inv_denominator: Vec<Vec<S>> = Vec::with_capacity(n_pts);
        let mut min_denominator = f64::INFINITY;
        let len = s_order + 1;
        let mut one = vec![Complex64::new(0.0, 0.0); len];
        one[0] = Complex64::new(1.0, 0.0);
        for &q in &points {
            let d = kernel.taylor(q, x, s_order)?;
            let mut g = CoeffTable::with_shape(order, s_order, s_order, q);
            for (s, v) in d.iter().enumerate() {
                g.set(0, s, S::from_c64(*v));
            }
            let c1 = arctan_taylor_about(I + d[0], n_max + 1)?;
            let c2 = arctan_taylor_about(d[0], n_max)?;
            comp.push(c1.iter().zip(&c2).map(|(a, b)| a + b * sigma).collect::<Vec<_>>());
            energy_density.push(
                (0..=n_max)
                    .map(|n| c1[n + 1] * (2.0 * (n + 1) as f64))
                    .collect::<Vec<_>>(),
            );
            let z1: Vec<Complex64> = d.iter().zip(&one).map(|(a, b)| a + b * I).collect();
            let t1: Vec<Complex64> = mul(&z1, &z1).iter().zip(&one).map(|(a, b)| a + b).collect();
            let t2: Vec<Complex64> = mul(&d, &d).iter().zip(&one).map(|(a, b)| a + b).collect();
            let denom: Vec<Complex64> = recip(&t1).iter().zip(recip(&t2)).map(|(a, b)| a + b * sigma).collect();
            let dn = denom[0].norm();
            min_denominator = min_denominator.min(dn);
            if dn < MIN_DENOMINATOR {
                return Err(PseudoVacuumError::SingularDenominator { point: q, value: dn });
            }
            inv_denominator.push(to_scalar(&recip(&denom)));
            kernel_series.push(d);
            tables.push(g);
        }

        // Origin: G = −2i·x·t·h with h(0) = 1 at zeroth order.
        let d0 = kernel.taylor(Complex64::new(0.0, 0.0), x, ORIGIN_T_ORDER + 1)?;
        let mut origin =
            CoeffTable::with_shape(order, ORIGIN_T_ORDER, order + ORIGIN_T_ORDER, Complex64::new(0.0, 0.0));
        for s in 0..=ORIGIN_T_ORDER {
            origin.set(0, s, S::from_c64(I * d0[s + 1] / (2.0 * x)));
        }

        // arctan(g_target(0) − Δ(source)) Taylor data for the coupling terms.
        let mut coupling = Vec::with_capacity(n_pts + 1);
        for target in 0..=n_pts {
            let g00 = if target < n_pts {
                kernel_series[target][0]
            } else {
                Complex64::new(0.0, 0.0)
            };
            let row = kernel_series
                .iter()
                .map(|d| arctan_taylor_about(g00 - d[0], n_max))
                .collect::<Result<Vec<_>, _>>()?;
            coupling.push(row);
        }
        let log_coeffs: Vec<Complex64> = (0..=n_max)
            .map(|n| {
                if n == 0 {
                    Complex64::new(0.0, 0.0)
                } else {
                    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
                    Complex64::new(sign / n as f64, 0.0)
                }
            })
            .collect();
        let atan0 = arctan_taylor_about(Complex64::new(0.0, 0.0), n_max)?;
        let binom: Vec<Vec<f64>> = (0..=n_max).map(|n| (0..=n).map(|k| binomial(n, k)).collect()).collect();

        let mut tower = GammaTower {
            x,
            order,
            s_order,
            kernel,
            points,
            kernel_series,
            tables,
            origin,
            energy: Vec::new(),
            min_denominator,
        };

        // With an η point the zeroth order acquires an η-part driven by the
        // coupling to that point alone (the η⁰ part is the kernel itself).
        let first = if has_eta { 0 } else { 1 };
        for p in first..=order {
            // With an η point the order-p coupling reads order-p data (times
            // η); a second pass then fixes the η-parts exactly.
            let passes = if has_eta && p > 0 { 2 } else { 1 };
            for _ in 0..passes {
                let coupling_terms = tower.coupling(p, &sources, &coupling, &binom, n_max);
                for i in 0..n_pts {
                    let r: Vec<S> = if p == 0 {
                        coupling_terms[i].clone()
                    } else {
                        let a = without_constant(&tower.tables[i]);
                        let r = compose(&comp[i], &a).row_a(p);
                        r.iter().zip(&coupling_terms[i]).map(|(u, v)| *u + *v).collect()
                    };
                    let update = mul(&r, &inv_denominator[i]);
                    for (s, u) in update.iter().enumerate().take(s_order - p + 1) {
                        tower.tables[i].add_to(p, s, -*u);
                    }
                }
                let n0 = &coupling_terms[n_pts];
                for _ in 0..ORIGIN_T_ORDER + 2 {
                    let h = &tower.origin;
                    let g0 = tower.origin_gamma();
                    let l1 = compose(&log_coeffs, &without_constant(h));
                    let l2 = compose(&log_coeffs, &shifted(h, Complex64::new(-x, 0.0)));
                    let l3 = compose(&atan0, &g0);
                    let mut next = tower.origin.clone();
                    for s in 0..=ORIGIN_T_ORDER {
                        let r =
                            l1.get(p, s) - l2.get(p, s) + l3.get(p, s).scale(I * 2.0 * sigma) + n0[s].scale(I * 2.0);
                        next.add_to(p, s, if p == 0 { -eta_part(r) } else { -r });
                    }
                    tower.origin = next;
                }
            }
        }

        // Energy coefficients.
        let h = &tower.origin;
        let mut one_minus = CoeffTable::delta_like(h);
        one_minus.axpy(S::one(), &shifted(h, Complex64::new(-x, 0.0)));
        let mut hh = h.mul_unchecked(&one_minus);
        hh.add_to(0, 0, -S::one());
        let alternating: Vec<Complex64> = (0..=n_max)
            .map(|n| Complex64::new(if n % 2 == 0 { 1.0 } else { -1.0 }, 0.0))
            .collect();
        let inv = compose(&alternating, &hh);
        let densities: Vec<CoeffTable<S>> = (0..n_pts)
            .map(|i| compose(&energy_density[i], &without_constant(&tower.tables[i])))
            .collect();
        let mut energy = Vec::with_capacity(order + 1);
        for p in 0..=order {
            let mut val = inv.get(p, 1).scale(Complex64::new(sigma / (2.0 * x), 0.0));
            for (q, terms) in sources.iter().enumerate().take(p + 1) {
                for src in terms {
                    let row = densities[src.point].row_a(p - q);
                    val += src.weight * theta_derivative_at(&row, tower.points[src.point], src.k);
                }
            }
            energy.push(val);
        }
        tower.energy = energy;
        Ok(tower)
    }

    /// Order-`p` coupling terms `Σ_q Σ_terms w·∂̸^k_{t′} arctan(G(t) − G(t′))`
    /// for every target (the points, then the origin), as vectors over the
    /// target's expansion variable.
    fn coupling(
        &self,
        p: usize,
        sources: &[Vec<Source<S>>],
        coupling: &[Vec<Vec<Complex64>>],
        binom: &[Vec<f64>],
        n_max: usize,
    ) -> Vec<Vec<S>> {
        let n_pts = self.points.len();
        let apow: Vec<Vec<CoeffTable<S>>> = self
            .tables
            .iter()
            .map(|g| powers(&without_constant(g), n_max))
            .collect();
        let opow = powers(&self.origin_gamma(), n_max);
        let mut out: Vec<Vec<S>> = (0..=n_pts)
            .map(|t| {
                let width = if t < n_pts {
                    self.s_order + 1
                } else {
                    ORIGIN_T_ORDER + 1
                };
                vec![S::zero(); width]
            })
            .collect();
        for (q, terms) in sources.iter().enumerate().take(p + 1) {
            let e = p - q;
            for src in terms {
                let q_pt = self.points[src.point];
                // β_j[i]: ∂̸^k of the ε^i part of A_src^j at the source point.
                let beta: Vec<Vec<S>> = apow[src.point]
                    .iter()
                    .map(|pw| {
                        (0..=e)
                            .map(|i| theta_derivative_at(&pw.row_a(i), q_pt, src.k))
                            .collect()
                    })
                    .collect();
                for (target, acc) in out.iter_mut().enumerate() {
                    let tpow = if target < n_pts { &apow[target] } else { &opow };
                    let a = &coupling[target][src.point];
                    for (m, pw) in tpow.iter().enumerate() {
                        let mut th = vec![S::zero(); e + 1];
                        for (j, b) in beta.iter().enumerate() {
                            if m + j > n_max {
                                break;
                            }
                            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                            let coef = a[m + j] * (binom[m + j][j] * sign);
                            for (t, bi) in th.iter_mut().zip(b) {
                                *t += bi.scale(coef);
                            }
                        }
                        for (i, t) in th.iter().enumerate() {
                            if t.is_zero() {
                                continue;
                            }
                            let wt = src.weight * *t;
                            for (s, cell) in acc.iter_mut().enumerate() {
                                let v = pw.get(e - i, s);
                                if !v.is_zero() {
                                    *cell += wt * v;
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// `G` about the origin, `−2i·x·t·h(t)`, as an `(ε, t)` table.
    pub fn origin_gamma(&self) -> CoeffTable<S> {
        shifted(&self.origin, I * (-2.0 * self.x))
    }

    /// The origin table `h`.
    pub fn origin_table(&self) -> &CoeffTable<S> {
        &self.origin
    }

    /// Taylor table of `G` about `point` (row `p` = `γ_p`), if the tower
    /// expands about it.
    pub fn point_table(&self, point: Complex64) -> Option<&CoeffTable<S>> {
        self.points
            .iter()
            .position(|p| (*p - point).norm() <= 1e-14)
            .map(|i| &self.tables[i])
    }

    /// Taylor coefficients of `s ↦ Δ(x·(point + s))`, if the tower expands
    /// about `point`.
    pub fn kernel_series(&self, point: Complex64) -> Option<&[Complex64]> {
        self.points
            .iter()
            .position(|p| (*p - point).norm() <= 1e-14)
            .map(|i| self.kernel_series[i].as_slice())
    }

    /// `γ_p(t)` summed from the truncated Taylor table about `point`.
    pub fn gamma_about(&self, point: Complex64, p: usize, t: Complex64) -> Option<S> {
        self.point_table(point).map(|g| evaluate(&g.row_a(p), t - point))
    }

    /// Energy coefficients `f_0..f_P` of the deformation parameter.
    pub fn energy_coefficients(&self) -> &[S] {
        &self.energy
    }

    /// Smallest `|arctan′(i+Δ) + σ·arctan′(Δ)|` over the expansion points.
    pub fn min_denominator(&self) -> f64 {
        self.min_denominator
    }

    pub fn x(&self) -> f64 {
        self.x
    }
    pub fn order(&self) -> usize {
        self.order
    }
    pub fn s_order(&self) -> usize {
        self.s_order
    }
    pub fn kernel(&self) -> Kernel {
        self.kernel
    }
    pub fn points(&self) -> &[Complex64] {
        &self.points
    }
}
