/// A constant piece `weight·1_{(lo, hi)}(x)` of a filling function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
    pub weight: i32,
}

impl Interval {
    pub fn new(lo: f64, hi: f64, weight: i32) -> Self {
        Interval { lo, hi, weight }
    }
}

/// The shape of a filling function.
#[derive(Debug, Clone, PartialEq)]
pub enum FillingKind {
    /// All roots packed symmetrically around the origin: `χ = 1` on `(−m/2, m/2)`.
    Standard,
    /// Two blocks against the edges `±1/2`, each of width `m/2`.
    EdgeSplit,
    /// A central block of width `m/2` plus two edge blocks of width `m/4`.
    ThreeBlock,
    /// An explicit list of constant pieces; moments are exact interval integrals.
    PiecewiseConstant(Vec<Interval>),
}

/// A filling function together with its density `m = N/L`.
///
/// For the named kinds `m` may be any real number: moments are then given by
/// their closed forms, which continue analytically to `m ≤ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct FillingConfig {
    pub kind: FillingKind,
    pub m: f64,
}

impl FillingConfig {
    pub fn new(kind: FillingKind, m: f64) -> Self {
        FillingConfig { kind, m }
    }

    pub fn standard(m: f64) -> Self {
        Self::new(FillingKind::Standard, m)
    }

    pub fn edge_split(m: f64) -> Self {
        Self::new(FillingKind::EdgeSplit, m)
    }

    pub fn three_block(m: f64) -> Self {
        Self::new(FillingKind::ThreeBlock, m)
    }

    /// A piecewise filling; its density is the signed total measure.
    pub fn piecewise(intervals: Vec<Interval>) -> Self {
        let m = intervals.iter().map(|iv| iv.weight as f64 * (iv.hi - iv.lo)).sum();
        Self::new(FillingKind::PiecewiseConstant(intervals), m)
    }

    /// The support of the filling as explicit intervals on the circle `[−1/2, 1/2]`.
    pub fn intervals(&self) -> Vec<Interval> {
        let m = self.m;
        match &self.kind {
            FillingKind::Standard => vec![Interval::new(-m / 2.0, m / 2.0, 1)],
            FillingKind::EdgeSplit => vec![
                Interval::new(-0.5, -0.5 + m / 2.0, 1),
                Interval::new(0.5 - m / 2.0, 0.5, 1),
            ],
            FillingKind::ThreeBlock => vec![
                Interval::new(-0.5 + m / 4.0, -0.5 + m / 2.0, 1),
                Interval::new(-m / 4.0, m / 4.0, 1),
                Interval::new(0.5 - m / 2.0, 0.5 - m / 4.0, 1),
            ],
            FillingKind::PiecewiseConstant(iv) => iv.clone(),
        }
    }
}

/// Filling `g(x)` of the first trajectory towards the `m = −1` state at
/// parameter `ξ ∈ [0, 1]`: the uniform `−1` filling of `(−1/2, 1/2)` at
/// `ξ = 0`, continuously deformed to `−2` on `(−1/4, 1/4)` at `ξ = 1/2`.
pub fn traj1_filling(xi: f64) -> FillingConfig {
    FillingConfig::piecewise(vec![
        Interval::new(-0.5 + xi / 2.0, 0.5 - xi / 2.0, -1),
        Interval::new(0.75, 0.75 + xi / 2.0, -1),
        Interval::new(-0.75 - xi / 2.0, -0.75, -1),
    ])
}

/// Filling `g(x)` of the second trajectory: the holes opened at the edges
/// are filled back symmetrically around `±7/8`.
pub fn traj2_filling(xi: f64) -> FillingConfig {
    FillingConfig::piecewise(vec![
        Interval::new(-0.5 + xi / 2.0, 0.5 - xi / 2.0, -1),
        Interval::new(0.875 - xi / 4.0, 0.875 + xi / 4.0, -1),
        Interval::new(-0.875 - xi / 4.0, -0.875 + xi / 4.0, -1),
    ])
}
