//! Core data types: the observed sample, the first-stage parameter box, the
//! integration weight, and the bandwidth bundle.

use crate::error::{Error, Result};
use crate::quad::trapezoid_weights;
use rand::Rng;

/// Absolute tolerance for the unit-integral check on weight functions.
const WEIGHT_INTEGRAL_TOL: f64 = 1e-8;

/// Observed sample for the partially linear binary choice model: binary
/// outcome `y`, special regressor `x1` (coefficient normalized to one),
/// remaining regressors `x_tilde` (n x (d-1), row major), and the scalar
/// smoothing variable `v`.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    y: Vec<f64>,
    x1: Vec<f64>,
    x_tilde: Vec<f64>,
    v: Vec<f64>,
    d: usize,
}

impl Dataset {
    /// Validate and build a dataset. `x_tilde` holds one row per observation,
    /// each of the same nonzero length `d - 1`.
    ///
    /// Checks: equal column lengths, `n >= d + 2`, finite entries, `y` in
    /// {0, 1}, and at least `d + 1` distinct `x1` values (a finite-sample
    /// proxy for the continuously distributed special regressor the
    /// identification argument needs).
    pub fn new(y: Vec<f64>, x1: Vec<f64>, x_tilde: Vec<Vec<f64>>, v: Vec<f64>) -> Result<Self> {
        let n = y.len();
        if x1.len() != n || v.len() != n || x_tilde.len() != n {
            return Err(Error::InvalidData(format!(
                "column lengths differ: y={}, x1={}, x_tilde={}, v={}",
                n,
                x1.len(),
                x_tilde.len(),
                v.len()
            )));
        }
        if n == 0 || x_tilde[0].is_empty() {
            return Err(Error::InvalidData(
                "need at least one observation and one x_tilde column".into(),
            ));
        }
        let k = x_tilde[0].len();
        let d = k + 1;
        if n < d + 2 {
            return Err(Error::InvalidData(format!(
                "need n >= d + 2 = {}, got n = {}",
                d + 2,
                n
            )));
        }
        let mut flat = Vec::with_capacity(n * k);
        for (i, row) in x_tilde.iter().enumerate() {
            if row.len() != k {
                return Err(Error::InvalidData(format!(
                    "x_tilde row {i} has {} entries, expected {k}",
                    row.len()
                )));
            }
            flat.extend_from_slice(row);
        }
        for (name, col) in [("y", &y), ("x1", &x1), ("v", &v)] {
            if let Some(i) = col.iter().position(|x| !x.is_finite()) {
                return Err(Error::InvalidData(format!(
                    "non-finite value in column {name} at row {i}"
                )));
            }
        }
        if let Some(i) = flat.iter().position(|x| !x.is_finite()) {
            return Err(Error::InvalidData(format!(
                "non-finite value in x_tilde at row {}",
                i / k
            )));
        }
        if let Some(i) = y.iter().position(|&yi| yi != 0.0 && yi != 1.0) {
            return Err(Error::InvalidData(format!(
                "y must be 0 or 1, got {} at row {i}",
                y[i]
            )));
        }
        let mut sorted_x1 = x1.clone();
        sorted_x1.sort_by(|a, b| a.partial_cmp(b).unwrap());
        sorted_x1.dedup();
        if sorted_x1.len() < d + 1 {
            return Err(Error::InvalidData(format!(
                "x1 takes only {} distinct values, need at least {}",
                sorted_x1.len(),
                d + 1
            )));
        }
        Ok(Self {
            y,
            x1,
            x_tilde: flat,
            v,
            d,
        })
    }

    /// Build without validation. Used for bootstrap resamples (which may
    /// repeat rows and so fail the distinct-x1 check) and for tests.
    pub(crate) fn from_raw(y: Vec<f64>, x1: Vec<f64>, x_tilde: Vec<f64>, v: Vec<f64>, d: usize) -> Self {
        debug_assert_eq!(y.len() * (d - 1), x_tilde.len());
        Self {
            y,
            x1,
            x_tilde,
            v,
            d,
        }
    }

    pub fn n(&self) -> usize {
        self.y.len()
    }

    /// Total regressor dimension, special regressor included.
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn y(&self) -> &[f64] {
        &self.y
    }

    pub fn x1(&self) -> &[f64] {
        &self.x1
    }

    pub fn v(&self) -> &[f64] {
        &self.v
    }

    /// Row `i` of the remaining regressors (length `d - 1`).
    pub fn x_tilde_row(&self, i: usize) -> &[f64] {
        let k = self.d - 1;
        &self.x_tilde[i * k..(i + 1) * k]
    }

    /// Resample `n` rows i.i.d. uniformly with replacement.
    pub fn resample_with<R: Rng>(&self, rng: &mut R) -> Dataset {
        let n = self.n();
        let k = self.d - 1;
        let mut y = Vec::with_capacity(n);
        let mut x1 = Vec::with_capacity(n);
        let mut x_tilde = Vec::with_capacity(n * k);
        let mut v = Vec::with_capacity(n);
        for _ in 0..n {
            let j = rng.random_range(0..n);
            y.push(self.y[j]);
            x1.push(self.x1[j]);
            x_tilde.extend_from_slice(self.x_tilde_row(j));
            v.push(self.v[j]);
        }
        Dataset::from_raw(y, x1, x_tilde, v, self.d)
    }

    /// Column standard deviations of `W = (1, x_tilde)`; the leading entry is
    /// always 1. Used to precondition the first-stage ascent.
    pub(crate) fn w_scales(&self) -> Vec<f64> {
        let n = self.n() as f64;
        let k = self.d - 1;
        let mut scales = vec![1.0; self.d];
        for c in 0..k {
            let mean: f64 = (0..self.n()).map(|i| self.x_tilde[i * k + c]).sum::<f64>() / n;
            let var: f64 = (0..self.n())
                .map(|i| {
                    let e = self.x_tilde[i * k + c] - mean;
                    e * e
                })
                .sum::<f64>()
                / n;
            let sd = var.sqrt();
            scales[c + 1] = if sd > 1e-12 { sd } else { 1.0 };
        }
        scales
    }
}

/// Compact box the first-stage maximization runs over. Must contain the
/// origin so the fixed start at zero is always feasible.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaDomain {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl ThetaDomain {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.len() != upper.len() || lower.is_empty() {
            return Err(Error::Config("domain bounds must have equal nonzero length".into()));
        }
        for i in 0..lower.len() {
            if !(lower[i].is_finite() && upper[i].is_finite()) || lower[i] >= upper[i] {
                return Err(Error::Config(format!(
                    "domain component {i} needs finite lower < upper, got [{}, {}]",
                    lower[i], upper[i]
                )));
            }
            if lower[i] > 0.0 || upper[i] < 0.0 {
                return Err(Error::Config(format!(
                    "domain component {i} must contain the origin, got [{}, {}]",
                    lower[i], upper[i]
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// The box `[-bound, bound]^dim`.
    pub fn symmetric(dim: usize, bound: f64) -> Self {
        Self {
            lower: vec![-bound; dim],
            upper: vec![bound; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn contains(&self, theta: &[f64]) -> bool {
        theta.len() == self.dim()
            && theta
                .iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(t, (lo, hi))| *t >= *lo && *t <= *hi)
    }

    pub fn clamp(&self, theta: &mut [f64]) {
        for (t, (lo, hi)) in theta.iter_mut().zip(self.lower.iter().zip(&self.upper)) {
            *t = t.clamp(*lo, *hi);
        }
    }
}

/// Known weighting function for the second-stage integral: compact support,
/// nonnegative, unit integral.
#[derive(Debug, Clone, PartialEq)]
pub enum WeightFunction {
    /// Constant `height` on `[a, b]` (endpoints included), zero elsewhere.
    Constant { a: f64, b: f64, height: f64 },
    /// Piecewise-linear interpolation of sorted `(v, tau(v))` pairs, zero
    /// outside the tabulated range.
    Tabulated { points: Vec<(f64, f64)> },
}

impl WeightFunction {
    /// Constant weight on `[a, b]`; `height * (b - a)` must equal 1 within
    /// 1e-8.
    pub fn constant(a: f64, b: f64, height: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && height.is_finite()) || a >= b || height < 0.0 {
            return Err(Error::Config(format!(
                "weight needs finite a < b and height >= 0, got [{a}, {b}] height {height}"
            )));
        }
        let integral = height * (b - a);
        if (integral - 1.0).abs() > WEIGHT_INTEGRAL_TOL {
            return Err(Error::Config(format!(
                "weight must integrate to 1, got {integral}"
            )));
        }
        Ok(WeightFunction::Constant { a, b, height })
    }

    /// Tabulated weight; points must be sorted with strictly increasing `v`,
    /// nonnegative values, and a trapezoid integral of 1 within 1e-8.
    pub fn tabulated(points: Vec<(f64, f64)>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::Config("tabulated weight needs at least two points".into()));
        }
        for w in points.windows(2) {
            if w[1].0 <= w[0].0 {
                return Err(Error::Config("tabulated weight abscissae must increase".into()));
            }
        }
        if points.iter().any(|p| !p.0.is_finite() || !p.1.is_finite() || p.1 < 0.0) {
            return Err(Error::Config("tabulated weight values must be finite and >= 0".into()));
        }
        let integral: f64 = points
            .windows(2)
            .map(|w| 0.5 * (w[1].1 + w[0].1) * (w[1].0 - w[0].0))
            .sum();
        if (integral - 1.0).abs() > WEIGHT_INTEGRAL_TOL {
            return Err(Error::Config(format!(
                "tabulated weight must integrate to 1, got {integral}"
            )));
        }
        Ok(WeightFunction::Tabulated { points })
    }

    pub fn eval(&self, v: f64) -> f64 {
        match self {
            WeightFunction::Constant { a, b, height } => {
                if v >= *a && v <= *b {
                    *height
                } else {
                    0.0
                }
            }
            WeightFunction::Tabulated { points } => {
                let first = points[0].0;
                let last = points[points.len() - 1].0;
                if v < first || v > last {
                    return 0.0;
                }
                let seg = points.windows(2).find(|w| v <= w[1].0).unwrap();
                let t = (v - seg[0].0) / (seg[1].0 - seg[0].0);
                seg[0].1 + t * (seg[1].1 - seg[0].1)
            }
        }
    }

    /// Support endpoints `(a, b)`.
    pub fn support(&self) -> (f64, f64) {
        match self {
            WeightFunction::Constant { a, b, .. } => (*a, *b),
            WeightFunction::Tabulated { points } => (points[0].0, points[points.len() - 1].0),
        }
    }

    /// Trapezoid integral of the weight over a uniform `m`-point grid on its
    /// support. Exactly 1 for the constant weight; used in validation tests.
    pub fn grid_integral(&self, m: usize) -> f64 {
        let (a, b) = self.support();
        let w = trapezoid_weights(a, b, m);
        let step = (b - a) / (m - 1) as f64;
        w.iter()
            .enumerate()
            .map(|(i, wi)| {
                let v = if i == m - 1 { b } else { a + i as f64 * step };
                wi * self.eval(v)
            })
            .sum()
    }
}

impl Default for WeightFunction {
    /// `tau(v) = 1.25` on `[0.1, 0.9]`.
    fn default() -> Self {
        WeightFunction::Constant {
            a: 0.1,
            b: 0.9,
            height: 1.25,
        }
    }
}

/// Smoothing parameters: `h` scales the index inside `G`, `h_v` the
/// first-stage kernel in `v`, and `multiplier` undersmooths `h` without
/// touching `h_v`. The estimator always consumes `effective_h()`.
#[derive(Debug, Clone, PartialEq)]
pub struct Bandwidths {
    pub h: f64,
    pub h_v: f64,
    pub multiplier: f64,
    /// Order of the smoothing kernel `G'`; fixed at 4.
    pub order: usize,
}

impl Bandwidths {
    pub fn new(h: f64, h_v: f64, multiplier: f64) -> Result<Self> {
        if !(h.is_finite() && h > 0.0) || !(h_v.is_finite() && h_v > 0.0) {
            return Err(Error::Config(format!(
                "bandwidths must be positive and finite, got h = {h}, h_v = {h_v}"
            )));
        }
        if !(multiplier > 0.0 && multiplier <= 1.0) {
            return Err(Error::Config(format!(
                "undersmoothing multiplier must lie in (0, 1], got {multiplier}"
            )));
        }
        Ok(Self {
            h,
            h_v,
            multiplier,
            order: crate::kernels::SMOOTHING_ORDER,
        })
    }

    /// Pilot bandwidths `(n^{-1/(2r+1)}, n^{-3/25})` with `r = 4`.
    pub fn pilot(n: usize) -> (f64, f64) {
        let nf = n as f64;
        (nf.powf(-1.0 / 9.0), nf.powf(-3.0 / 25.0))
    }

    /// Same `(h, h_v)` with a different undersmoothing multiplier.
    pub fn with_multiplier(&self, multiplier: f64) -> Result<Self> {
        Bandwidths::new(self.h, self.h_v, multiplier)
    }

    /// The bandwidth the estimator and the test scalings actually use.
    pub fn effective_h(&self) -> f64 {
        self.h * self.multiplier
    }
}
