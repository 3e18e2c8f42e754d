//! CUSUM processes of a fixed data vector, in original and permuted order,
//! under the three normings: `s_n sqrt(n)`, the max-norm `T_n`, and the
//! centered `nu`-norm `T_n^(nu)`.

use crate::error::{Error, Result};
use crate::numeric::exact_sum;
use crate::permutation::Permutation;
use serde::{Deserialize, Serialize};

/// One observed data vector `X_1, ..., X_n` with `n >= 2`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Realization {
    x: Vec<f64>,
}

impl Realization {
    pub fn new(x: Vec<f64>) -> Result<Self> {
        if x.len() < 2 {
            return Err(Error::param(format!("a realization needs n >= 2, got {}", x.len())));
        }
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { x })
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.x
    }

    /// Sample mean, from the correctly rounded total.
    pub fn mean(&self) -> f64 {
        exact_sum(self.x.iter().copied()) / self.x.len() as f64
    }

    /// Unbiased sample variance `s_n^2`.
    pub fn sample_variance(&self) -> f64 {
        let m = self.mean();
        exact_sum(self.x.iter().map(|v| (v - m) * (v - m))) / (self.x.len() - 1) as f64
    }

    /// Indices sorted by value: entry `r` is the index of the `r`-th
    /// smallest observation.
    pub fn rank_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.x.len()).collect();
        idx.sort_by(|&a, &b| self.x[a].total_cmp(&self.x[b]).then(a.cmp(&b)));
        idx
    }

    pub fn has_ties(&self) -> bool {
        let mut sorted = self.x.clone();
        sorted.sort_by(f64::total_cmp);
        sorted.windows(2).any(|w| w[0] == w[1])
    }

    /// `c * X` entrywise.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::new(self.x.iter().map(|v| c * v).collect())
    }
}

/// Breaks ties by adding `j / n^(2 + 1/alpha)` to the entry with 1-based
/// index `j`. Inputs without ties come back unchanged. Where the shift is
/// absorbed by rounding, entries are bumped to the next representable value
/// above their predecessor in sorted order, so the output is tie-free.
pub fn tie_break(r: &Realization, alpha: f64) -> Realization {
    if !r.has_ties() {
        return r.clone();
    }
    let n = r.len() as f64;
    let unit = n.powf(-(2.0 + 1.0 / alpha));
    let mut x: Vec<f64> = r.x.iter().enumerate().map(|(j, v)| v + (j + 1) as f64 * unit).collect();
    let mut order: Vec<usize> = (0..x.len()).collect();
    order.sort_by(|&a, &b| x[a].total_cmp(&x[b]).then(a.cmp(&b)));
    for w in 1..order.len() {
        let floor = x[order[w - 1]].next_up();
        if x[order[w]] < floor {
            x[order[w]] = floor;
        }
    }
    Realization { x }
}

/// `T_n = max |X_j|`.
pub fn t_n(r: &Realization) -> Result<f64> {
    let m = r.x.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    if m == 0.0 {
        Err(Error::Degenerate("all observations are zero"))
    } else {
        Ok(m)
    }
}

/// `T_n^(nu) = (sum |X_j - mean|^nu)^(1/nu)`.
pub fn t_n_nu(r: &Realization, nu: f64) -> Result<f64> {
    if !(nu > 0.0) {
        return Err(Error::param(format!("nu = {nu} must be positive")));
    }
    let m = r.mean();
    let total = exact_sum(r.x.iter().map(|v| (v - m).abs().powf(nu)));
    if total == 0.0 {
        Err(Error::Degenerate("all observations are equal"))
    } else {
        Ok(total.powf(1.0 / nu))
    }
}

/// Default exponent for the `nu`-norm: `min(alpha + 1, 2 alpha)`, always
/// strictly above `alpha`.
pub fn default_nu(alpha: f64) -> f64 {
    (alpha + 1.0).min(2.0 * alpha)
}

/// `floor(n t)`, snapping products that land within rounding error of an
/// integer (so `t = j / n` always yields `j`).
pub fn floor_nt(n: usize, t: f64) -> usize {
    let x = n as f64 * t;
    let r = x.round();
    let v = if (x - r).abs() <= 1e-9 * x.abs().max(1.0) { r } else { x.floor() };
    (v.max(0.0) as usize).min(n)
}

/// Evaluation times for a CUSUM path.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum TimeGrid {
    /// Every `j / n`, `j = 0..=n`, with exact integer counts.
    Full,
    /// Arbitrary times in [0, 1].
    Times(Vec<f64>),
}

impl TimeGrid {
    pub fn times(ts: &[f64]) -> Result<Self> {
        if ts.is_empty() {
            return Err(Error::InvalidGrid("empty time grid"));
        }
        if ts.iter().any(|t| !(0.0..=1.0).contains(t)) {
            return Err(Error::InvalidGrid("times must lie in [0, 1]"));
        }
        if ts.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidGrid("times must be strictly increasing"));
        }
        Ok(Self::Times(ts.to_vec()))
    }

    /// `(t, floor(n t))` pairs for sample size `n`.
    pub fn points(&self, n: usize) -> Vec<(f64, usize)> {
        match self {
            TimeGrid::Full => (0..=n).map(|j| (j as f64 / n as f64, j)).collect(),
            TimeGrid::Times(ts) => ts.iter().map(|&t| (t, floor_nt(n, t))).collect(),
        }
    }
}

/// Which normalization produced a [`CusumPath`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Norming {
    /// `s_n sqrt(n)`
    SampleStd,
    /// `T_n = max |X_j|`
    MaxAbs,
    /// `T_n^(nu)`
    CenteredNu(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CusumPath {
    pub times: Vec<f64>,
    /// `floor(n t)` for each time.
    pub counts: Vec<usize>,
    pub values: Vec<f64>,
    pub norming: Norming,
}

impl CusumPath {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Centered partial sums at `counts`, divided by `scale`. A full count is
/// set to exactly zero since the centered total vanishes.
fn centered_path(r: &Realization, perm: Option<&Permutation>, grid: &TimeGrid, scale: f64, norming: Norming) -> CusumPath {
    let n = r.len();
    let mean = r.mean();
    let points = grid.points(n);
    let max_count = points.iter().map(|p| p.1).max().unwrap_or(0);
    let mut prefix = Vec::with_capacity(max_count + 1);
    prefix.push(0.0);
    let mut acc = 0.0;
    for j in 0..max_count {
        let idx = perm.map_or(j, |p| p.indices()[j]);
        acc += r.x[idx] - mean;
        prefix.push(acc);
    }
    let values = points
        .iter()
        .map(|&(_, c)| if c == n { 0.0 } else { prefix[c] / scale })
        .collect();
    CusumPath {
        times: points.iter().map(|p| p.0).collect(),
        counts: points.iter().map(|p| p.1).collect(),
        values,
        norming,
    }
}

fn check_perm(r: &Realization, perm: &Permutation) -> Result<()> {
    if perm.len() != r.len() {
        Err(Error::InvalidPermutation(perm.len()))
    } else {
        Ok(())
    }
}

/// `Z_n(t) = sum_{j <= nt} (X_j - mean) / (s_n sqrt(n))`.
pub fn cusum_zn(r: &Realization, grid: &TimeGrid) -> Result<CusumPath> {
    let var = r.sample_variance();
    if var == 0.0 {
        return Err(Error::Degenerate("zero sample variance"));
    }
    let scale = var.sqrt() * (r.len() as f64).sqrt();
    Ok(centered_path(r, None, grid, scale, Norming::SampleStd))
}

/// Permuted `Z_{n,pi}(t)`; normings are taken from the unpermuted data.
pub fn cusum_zn_permuted(r: &Realization, perm: &Permutation, grid: &TimeGrid) -> Result<CusumPath> {
    check_perm(r, perm)?;
    let var = r.sample_variance();
    if var == 0.0 {
        return Err(Error::Degenerate("zero sample variance"));
    }
    let scale = var.sqrt() * (r.len() as f64).sqrt();
    Ok(centered_path(r, Some(perm), grid, scale, Norming::SampleStd))
}

/// `A_n(t) = sum_{j <= nt} (X_j - mean) / T_n`.
pub fn cusum_an(r: &Realization, grid: &TimeGrid) -> Result<CusumPath> {
    Ok(centered_path(r, None, grid, t_n(r)?, Norming::MaxAbs))
}

/// `A_{n,pi}(t) = sum_{j <= nt} (X_{pi(j)} - mean) / T_n`.
pub fn cusum_an_permuted(r: &Realization, perm: &Permutation, grid: &TimeGrid) -> Result<CusumPath> {
    check_perm(r, perm)?;
    Ok(centered_path(r, Some(perm), grid, t_n(r)?, Norming::MaxAbs))
}

/// `A_n^(nu)(t)`, normed by `T_n^(nu)`.
pub fn cusum_an_nu(r: &Realization, nu: f64, grid: &TimeGrid) -> Result<CusumPath> {
    Ok(centered_path(r, None, grid, t_n_nu(r, nu)?, Norming::CenteredNu(nu)))
}

/// `A_{n,pi}^(nu)(t)`.
pub fn cusum_an_nu_permuted(r: &Realization, nu: f64, perm: &Permutation, grid: &TimeGrid) -> Result<CusumPath> {
    check_perm(r, perm)?;
    Ok(centered_path(r, Some(perm), grid, t_n_nu(r, nu)?, Norming::CenteredNu(nu)))
}

/// `max |value|` over the path.
pub fn sup_functional(path: &CusumPath) -> Result<f64> {
    if path.values.is_empty() {
        return Err(Error::EmptySample);
    }
    Ok(path.values.iter().fold(0.0, |acc: f64, v| acc.max(v.abs())))
}
