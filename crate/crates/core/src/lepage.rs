//! LePage series for stable laws.
//!
//! A strictly stable variable is built from the arrival times
//! `S_1 < S_2 < ...` of two independent unit-rate Poisson processes, one for
//! each sign: the upper extremes are `w_upper * S_j*^(-1/alpha)` and the
//! lower extremes `w_lower * S_j^(-1/alpha)`, with `w_upper = p^(1/alpha)`
//! and `w_lower = q^(1/alpha)`. Their (compensated) difference is `eta`, and
//! the largest absolute point `M` plays the role of the limiting max-norm.
//!
//! Series are truncated after `k` points per side. The remainder beyond
//! `S_k` is again a Poisson sum, so conditionally on `S_k` its mean and
//! variance are explicit integrals; [`EtaSampler`] adds that conditional
//! mean and (for `alpha >= 1`) a Gaussian with the conditional variance.

use crate::error::{Error, Result};
use crate::numeric::integrate;
use crate::stable::TailParams;
use rand::Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};
use serde::{Deserialize, Serialize};
use statrs::function::gamma::ln_gamma;

/// Default number of series terms per side.
pub const DEFAULT_TRUNCATION: usize = 10_000;

/// Frozen arrival-time sequences `(S_j)` and `(S_j*)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LePageEnvironment {
    s: Vec<f64>,
    s_star: Vec<f64>,
}

impl LePageEnvironment {
    /// Both halves must be nonempty, positive and strictly increasing.
    pub fn new(s: Vec<f64>, s_star: Vec<f64>) -> Result<Self> {
        for half in [&s, &s_star] {
            if half.is_empty() {
                return Err(Error::EmptySample);
            }
            if !(half[0] > 0.0) || half.windows(2).any(|w| !(w[1] > w[0])) {
                return Err(Error::param("arrival times must be positive and strictly increasing"));
            }
        }
        Ok(Self { s, s_star })
    }

    /// Draws both halves with `k` arrivals each.
    pub fn sample<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Result<Self> {
        let s = exp_partial_sums(k, rng)?;
        let s_star = exp_partial_sums(k, rng)?;
        Ok(Self { s, s_star })
    }

    /// Number of arrivals held per half (the shorter half if they differ).
    pub fn len(&self) -> usize {
        self.s.len().min(self.s_star.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Lower-side arrivals `S_j`.
    pub fn s(&self) -> &[f64] {
        &self.s
    }

    /// Upper-side arrivals `S_j*`.
    pub fn s_star(&self) -> &[f64] {
        &self.s_star
    }
}

/// Partial sums `S_j = E_1 + ... + E_j` of `k` unit exponentials.
pub fn exp_partial_sums<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Result<Vec<f64>> {
    if k < 1 {
        return Err(Error::param("need at least one arrival"));
    }
    let mut acc = 0.0;
    Ok((0..k)
        .map(|_| {
            let e: f64 = Exp1.sample(rng);
            acc += e;
            acc
        })
        .collect())
}

/// `Z_j = S_j^(-1/alpha)`.
pub fn lepage_terms(s: &[f64], alpha: f64) -> Vec<f64> {
    s.iter().map(|&x| neg_root(x, alpha)).collect()
}

/// `x^(-1/alpha)` with exact shortcuts for the common integer exponents.
#[inline]
pub(crate) fn neg_root(x: f64, alpha: f64) -> f64 {
    if alpha == 1.0 {
        1.0 / x
    } else if alpha == 0.5 {
        1.0 / (x * x)
    } else {
        x.powf(-1.0 / alpha)
    }
}

/// Per-term LePage centering `c_k = E[Z_k 1{Z_k <= 1}]` for `alpha` in
/// (1, 2), i.e. `(1/Gamma(k)) int_1^inf x^(k-1-1/alpha) e^-x dx`, by
/// adaptive quadrature to relative error 1e-10.
pub fn centering_constant(k: usize, alpha: f64) -> Result<f64> {
    if !(alpha > 1.0 && alpha < 2.0) {
        return Err(Error::param(format!("centering needs alpha in (1, 2), got {alpha}")));
    }
    if k < 1 {
        return Err(Error::param("k must be at least 1"));
    }
    let kf = k as f64;
    let exponent = kf - 1.0 - 1.0 / alpha;
    let log_norm = ln_gamma(kf);
    let integrand = |x: f64| (exponent * x.ln() - x - log_norm).exp();
    // the integrand is a gamma-like bump at x = exponent; past
    // exponent + 45 sqrt(k) + 80 it is below e^-80 of its peak
    let peak = exponent.max(1.0);
    let upper = peak + 45.0 * kf.sqrt() + 80.0;
    let value = if peak > 1.0 {
        integrate(integrand, 1.0, peak, 1e-12) + integrate(integrand, peak, upper, 1e-12)
    } else {
        integrate(integrand, 1.0, upper, 1e-12)
    };
    Ok(value)
}

/// `E[Z_k] = Gamma(k - 1/alpha) / Gamma(k)`, finite whenever `k > 1/alpha`.
pub fn lepage_term_mean(k: usize, alpha: f64) -> f64 {
    let kf = k as f64;
    (ln_gamma(kf - 1.0 / alpha) - ln_gamma(kf)).exp()
}

/// One draw of `(eta, Z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EtaDraw {
    pub eta: f64,
    /// The largest absolute point `M = max(w_lower S_1^(-1/a), w_upper S_1*^(-1/a))`.
    pub z: f64,
}

/// Sampler for the joint `(eta, Z)` pair.
///
/// For `alpha` in (1, 2) every term is centered by its exact mean
/// `E[Z_j]`, so `eta` has mean zero and is strictly stable for every `p`;
/// when `p = q` this coincides with the classical per-term centering.
#[derive(Debug, Clone)]
pub struct EtaSampler {
    tp: TailParams,
    k: usize,
    term_means: Vec<f64>,
    tail_mean_offset: f64,
    tail_correction: bool,
}

impl EtaSampler {
    pub fn new(tp: TailParams, k: usize) -> Result<Self> {
        if k < 1 {
            return Err(Error::param("truncation k must be at least 1"));
        }
        let alpha = tp.alpha();
        let (term_means, tail_mean_offset) = if alpha > 1.0 {
            let means = (1..=k).map(|j| lepage_term_mean(j, alpha)).collect();
            // E[G(S_k)] with G(s) = s^(1-1/alpha) / (1 - 1/alpha)
            let kf = k as f64;
            let e_g = (ln_gamma(kf + 1.0 - 1.0 / alpha) - ln_gamma(kf)).exp() / (1.0 - 1.0 / alpha);
            (means, e_g)
        } else if alpha == 1.0 {
            (Vec::new(), (k as f64).ln())
        } else {
            (Vec::new(), 0.0)
        };
        Ok(Self {
            tp,
            k,
            term_means,
            tail_mean_offset,
            tail_correction: true,
        })
    }

    /// Plain truncation after `k` terms, with no remainder term.
    pub fn without_tail_correction(mut self) -> Self {
        self.tail_correction = false;
        self
    }

    pub fn tail_params(&self) -> &TailParams {
        &self.tp
    }

    pub fn truncation(&self) -> usize {
        self.k
    }

    /// Compensated sum over one side given its arrivals, plus the
    /// conditional remainder driven by the standard normal `gauss`.
    fn side<I: Iterator<Item = f64>>(&self, arrivals: I, gauss: f64) -> (f64, f64) {
        let alpha = self.tp.alpha();
        let mut sum = 0.0;
        let mut first = f64::NAN;
        let mut last = f64::NAN;
        for (j, s) in arrivals.enumerate() {
            if j == 0 {
                first = s;
            }
            last = s;
            let term = neg_root(s, alpha);
            sum += if alpha > 1.0 { term - self.term_means[j] } else { term };
        }
        if self.tail_correction {
            sum += self.remainder(last, gauss);
        }
        (sum, first)
    }

    /// Conditional remainder of one side beyond arrival time `s_k`.
    fn remainder(&self, s_k: f64, gauss: f64) -> f64 {
        let alpha = self.tp.alpha();
        let sd = (s_k.powf(1.0 - 2.0 / alpha) / (2.0 / alpha - 1.0)).sqrt();
        if alpha < 1.0 {
            // sum of positive points beyond s_k; only its mean is kept
            s_k.powf(1.0 - 1.0 / alpha) / (1.0 / alpha - 1.0)
        } else if alpha == 1.0 {
            self.tail_mean_offset - s_k.ln() + sd * gauss
        } else {
            self.tail_mean_offset - s_k.powf(1.0 - 1.0 / alpha) / (1.0 - 1.0 / alpha) + sd * gauss
        }
    }

    fn combine(&self, lower: (f64, f64), upper: (f64, f64)) -> EtaDraw {
        let (wl, wu) = (self.tp.w_lower(), self.tp.w_upper());
        let alpha = self.tp.alpha();
        EtaDraw {
            eta: wu * upper.0 - wl * lower.0,
            z: (wl * neg_root(lower.1, alpha)).max(wu * neg_root(upper.1, alpha)),
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> EtaDraw {
        let mut halves = [(0.0, 0.0); 2];
        for half in halves.iter_mut() {
            let mut acc = 0.0;
            let arrivals = (0..self.k).map(|_| {
                let e: f64 = Exp1.sample(&mut *rng);
                acc += e;
                acc
            });
            // the normal is drawn after the arrivals so streams stay aligned
            let (sum, first) = self.side(arrivals, 0.0);
            let gauss: f64 = if self.tail_correction && self.tp.alpha() >= 1.0 {
                StandardNormal.sample(&mut *rng)
            } else {
                0.0
            };
            let extra = if gauss != 0.0 { self.remainder_sd(acc) * gauss } else { 0.0 };
            *half = (sum + extra, first);
        }
        self.combine(halves[0], halves[1])
    }

    fn remainder_sd(&self, s_k: f64) -> f64 {
        let alpha = self.tp.alpha();
        (s_k.powf(1.0 - 2.0 / alpha) / (2.0 / alpha - 1.0)).sqrt()
    }

    /// `(eta, Z)` from a frozen environment; `gauss` supplies the two
    /// standard normals used by the remainder terms (ignored when `alpha < 1`
    /// or the correction is disabled).
    pub fn from_environment(&self, env: &LePageEnvironment, gauss: (f64, f64)) -> Result<EtaDraw> {
        if env.len() < self.k {
            return Err(Error::EnvironmentTooShort { len: env.len(), k: self.k });
        }
        let lower = self.side(env.s()[..self.k].iter().copied(), gauss.0);
        let upper = self.side(env.s_star()[..self.k].iter().copied(), gauss.1);
        Ok(self.combine(lower, upper))
    }

    /// Stable bridge on `grid` from i.i.d. `(eta_i, Z_i)` per interval.
    pub fn sample_bridge<R: Rng + ?Sized>(&self, grid: &[f64], rng: &mut R) -> Result<StableBridgePath> {
        validate_bridge_grid(grid)?;
        let inv_alpha = 1.0 / self.tp.alpha();
        let m = grid.len() - 1;
        let mut w_values = Vec::with_capacity(m + 1);
        w_values.push(0.0);
        let mut z: f64 = 0.0;
        let mut w = 0.0;
        for i in 0..m {
            let scale = (grid[i + 1] - grid[i]).powf(inv_alpha);
            let draw = self.sample(rng);
            w += scale * draw.eta;
            z = z.max(scale * draw.z);
            w_values.push(w);
        }
        let w_end = w_values[m];
        let b_values = grid.iter().zip(&w_values).map(|(t, w)| w - t * w_end).collect();
        Ok(StableBridgePath {
            grid: grid.to_vec(),
            w_values,
            b_values,
            z,
        })
    }
}

/// Convenience wrapper around [`EtaSampler`] for a single draw.
pub fn sample_eta_with_max<R: Rng + ?Sized>(tp: &TailParams, k: usize, rng: &mut R) -> Result<EtaDraw> {
    Ok(EtaSampler::new(*tp, k)?.sample(rng))
}

/// Values of `W_alpha`, the bridge `B_alpha = W - t W(1)` and `Z` on a grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StableBridgePath {
    pub grid: Vec<f64>,
    pub w_values: Vec<f64>,
    pub b_values: Vec<f64>,
    pub z: f64,
}

impl StableBridgePath {
    /// `B_alpha(t) / Z` at grid index `i`.
    pub fn normalized(&self, i: usize) -> f64 {
        self.b_values[i] / self.z
    }
}

fn validate_bridge_grid(grid: &[f64]) -> Result<()> {
    if grid.len() < 2 {
        return Err(Error::InvalidGrid("need at least the endpoints 0 and 1"));
    }
    if grid[0] != 0.0 || grid[grid.len() - 1] != 1.0 {
        return Err(Error::InvalidGrid("grid must start at 0 and end at 1"));
    }
    if grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::InvalidGrid("grid must be strictly increasing"));
    }
    Ok(())
}

pub fn sample_stable_bridge<R: Rng + ?Sized>(
    tp: &TailParams,
    grid: &[f64],
    k: usize,
    rng: &mut R,
) -> Result<StableBridgePath> {
    EtaSampler::new(*tp, k)?.sample_bridge(grid, rng)
}

/// Truncation diagnostic
/// `A(k) = q^(2/a) sum_{j>k} S_j^(-2/a) + p^(2/a) sum_{j>k} S_j*^(-2/a)`,
/// summed exactly up to the environment length `L` and completed by the
/// conditional mean `S_L^(1-2/a) / (2/a - 1)` of each half beyond `L`.
pub fn truncation_diagnostic(env: &LePageEnvironment, tp: &TailParams, k: usize) -> Result<f64> {
    if env.len() < k {
        return Err(Error::EnvironmentTooShort { len: env.len(), k });
    }
    let alpha = tp.alpha();
    let expo = 2.0 / alpha;
    let half = |s: &[f64]| {
        let last = s[env.len() - 1];
        let mut acc = last.powf(1.0 - expo) / (expo - 1.0);
        // summed from the far end so the result is monotone in k
        for &x in s[k..env.len()].iter().rev() {
            acc += x.powf(-expo);
        }
        acc
    };
    Ok(tp.w_lower().powi(2) * half(env.s()) + tp.w_upper().powi(2) * half(env.s_star()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RngStream;
    use crate::stats::{exp1_cdf, ks_one_sample, ks_two_sample};
    use approx::assert_abs_diff_eq;

    #[test]
    fn partial_sums_are_increasing() {
        let mut rng = RngStream::new(20, 0).rng();
        let one = exp_partial_sums(1, &mut rng).unwrap();
        assert_eq!(one.len(), 1);
        assert!(one[0] > 0.0);
        for _ in 0..100 {
            let s = exp_partial_sums(500, &mut rng).unwrap();
            assert!(s.windows(2).all(|w| w[1] > w[0]));
        }
        assert!(exp_partial_sums(0, &mut rng).is_err());
    }

    #[test]
    fn partial_sums_law_of_large_numbers() {
        let mut rng = RngStream::new(21, 0).rng();
        let reps = 10_000;
        let mean = (0..reps).map(|_| exp_partial_sums(100, &mut rng).unwrap()[99] / 100.0).sum::<f64>() / reps as f64;
        assert!((mean - 1.0).abs() < 0.03, "{mean}");
    }

    #[test]
    fn lepage_terms_examples() {
        assert_eq!(lepage_terms(&[1.0, 2.0, 4.0], 1.0), vec![1.0, 0.5, 0.25]);
        assert_eq!(lepage_terms(&[1.0, 4.0], 0.5), vec![1.0, 1.0 / 16.0]);
        let s = exp_partial_sums(200, &mut RngStream::new(22, 0).rng()).unwrap();
        for alpha in [0.3, 1.0, 1.7] {
            let z = lepage_terms(&s, alpha);
            assert!(z.windows(2).all(|w| w[1] < w[0]));
        }
    }

    /// Midpoint rule on [1, upper] with `points` cells: an oracle that shares
    /// nothing with the adaptive quadrature.
    fn riemann(k: usize, alpha: f64, upper: f64, points: usize) -> f64 {
        let h = (upper - 1.0) / points as f64;
        let e = k as f64 - 1.0 - 1.0 / alpha;
        let norm = ln_gamma(k as f64);
        (0..points)
            .map(|i| {
                let x = 1.0 + (i as f64 + 0.5) * h;
                (e * x.ln() - x - norm).exp()
            })
            .sum::<f64>()
            * h
    }

    #[test]
    fn centering_constant_matches_riemann_oracle() {
        let c1 = centering_constant(1, 1.5).unwrap();
        assert_abs_diff_eq!(c1, riemann(1, 1.5, 60.0, 1_000_000), epsilon = 1e-8);
        let c7 = centering_constant(7, 1.2).unwrap();
        assert_abs_diff_eq!(c7, riemann(7, 1.2, 80.0, 1_000_000), epsilon = 1e-8);
    }

    #[test]
    fn centering_constant_bounded_by_full_mean() {
        for alpha in [1.1, 1.5, 1.9] {
            for k in [1, 2, 5, 20, 100, 1000] {
                let c = centering_constant(k, alpha).unwrap();
                let full = lepage_term_mean(k, alpha);
                assert!(c > 0.0 && c <= full * (1.0 + 1e-10), "alpha {alpha} k {k}: {c} > {full}");
            }
        }
    }

    #[test]
    fn indicator_gap_vanishes_superexponentially() {
        // E[Z_k] - c_k = E[Z_k 1{Z_k > 1}] is bounded by 1 / ((k - 1/a) Gamma(k))
        let gap = lepage_term_mean(50, 1.5) - centering_constant(50, 1.5).unwrap();
        assert!(gap.abs() < 1e-10, "{gap}");
        let gaps: Vec<f64> = (1..=8).map(|k| lepage_term_mean(k, 1.5) - centering_constant(k, 1.5).unwrap()).collect();
        for w in gaps.windows(2) {
            assert!(w[1] < 0.5 * w[0]);
        }
    }

    #[test]
    fn centering_constant_rejects_bad_alpha() {
        assert!(centering_constant(3, 0.8).is_err());
        assert!(centering_constant(3, 2.0).is_err());
    }

    #[test]
    fn one_sided_eta_is_positive_below_one() {
        let tp = TailParams::new(0.7, 1.0).unwrap();
        let sampler = EtaSampler::new(tp, 1000).unwrap();
        let mut rng = RngStream::new(23, 0).rng();
        for _ in 0..2000 {
            assert!(sampler.sample(&mut rng).eta > 0.0);
        }
    }

    #[test]
    fn max_dominates_every_term() {
        let tp = TailParams::new(1.3, 0.6).unwrap();
        let sampler = EtaSampler::new(tp, 300).unwrap();
        let mut rng = RngStream::new(24, 0).rng();
        for _ in 0..200 {
            let env = LePageEnvironment::sample(300, &mut rng).unwrap();
            let draw = sampler.from_environment(&env, (0.0, 0.0)).unwrap();
            let lower = lepage_terms(env.s(), 1.3).into_iter().map(|z| tp.w_lower() * z);
            let upper = lepage_terms(env.s_star(), 1.3).into_iter().map(|z| tp.w_upper() * z);
            assert!(lower.chain(upper).all(|t| t <= draw.z));
        }
    }

    #[test]
    fn max_is_exponential_in_the_right_units() {
        let tp = TailParams::new(1.2, 0.7).unwrap();
        let sampler = EtaSampler::new(tp, 1).unwrap();
        let mut rng = RngStream::new(25, 0).rng();
        let xs: Vec<f64> = (0..100_000).map(|_| sampler.sample(&mut rng).z.powf(-1.2)).collect();
        assert!(ks_one_sample(&xs, exp1_cdf).unwrap() < 0.01);
    }

    #[test]
    fn eta_is_strictly_stable() {
        for (alpha, p) in [(0.5, 0.7), (1.0, 0.5), (1.5, 0.7)] {
            let tp = TailParams::new(alpha, p).unwrap();
            let sampler = EtaSampler::new(tp, 400).unwrap();
            let mut rng = RngStream::new(26, 0).rng();
            let scale = 2f64.powf(1.0 / alpha);
            let sums: Vec<f64> = (0..40_000)
                .map(|_| (sampler.sample(&mut rng).eta + sampler.sample(&mut rng).eta) / scale)
                .collect();
            let fresh: Vec<f64> = (0..40_000).map(|_| sampler.sample(&mut rng).eta).collect();
            let d = ks_two_sample(&sums, &fresh).unwrap();
            assert!(d < 0.02, "alpha {alpha}: KS {d}");
        }
    }

    #[test]
    fn symmetric_eta_has_mean_zero() {
        let tp = TailParams::new(1.7, 0.5).unwrap();
        let sampler = EtaSampler::new(tp, 300).unwrap();
        let mut rng = RngStream::new(27, 0).rng();
        let n = 100_000;
        let xs: Vec<f64> = (0..n).map(|_| sampler.sample(&mut rng).eta).collect();
        let mean = xs.iter().sum::<f64>() / n as f64;
        let cap = (n as f64).powf(1.0 / 1.7);
        let se = (xs.iter().map(|x| x.clamp(-cap, cap).powi(2)).sum::<f64>() / n as f64 / n as f64).sqrt();
        assert!(mean.abs() < 3.0 * se, "{mean} vs {se}");
    }

    #[test]
    fn bridge_endpoints_and_shape() {
        let tp = TailParams::new(1.2, 0.7).unwrap();
        let sampler = EtaSampler::new(tp, 200).unwrap();
        let mut rng = RngStream::new(28, 0).rng();
        let grid = [0.0, 0.1, 0.35, 0.5, 0.9, 1.0];
        for _ in 0..50 {
            let path = sampler.sample_bridge(&grid, &mut rng).unwrap();
            assert_eq!(path.b_values[0], 0.0);
            assert_eq!(path.b_values[grid.len() - 1], 0.0);
            assert!(path.z > 0.0);
            for (i, t) in grid.iter().enumerate() {
                assert_eq!(path.b_values[i], path.w_values[i] - t * path.w_values[grid.len() - 1]);
            }
        }
        assert!(sampler.sample_bridge(&[0.0, 0.5], &mut rng).is_err());
        assert!(sampler.sample_bridge(&[0.0, 0.6, 0.4, 1.0], &mut rng).is_err());
        assert!(sampler.sample_bridge(&[0.0], &mut rng).is_err());
    }

    #[test]
    fn bridge_endpoint_aggregates_to_eta() {
        let tp = TailParams::new(1.5, 0.5).unwrap();
        let sampler = EtaSampler::new(tp, 300).unwrap();
        let mut rng = RngStream::new(29, 0).rng();
        let grid = [0.0, 0.25, 0.5, 0.75, 1.0];
        let ends: Vec<f64> = (0..20_000)
            .map(|_| *sampler.sample_bridge(&grid, &mut rng).unwrap().w_values.last().unwrap())
            .collect();
        let fresh: Vec<f64> = (0..20_000).map(|_| sampler.sample(&mut rng).eta).collect();
        assert!(ks_two_sample(&ends, &fresh).unwrap() < 0.02);
    }

    #[test]
    fn bridge_increments_are_exchangeable() {
        let tp = TailParams::new(1.3, 0.7).unwrap();
        let sampler = EtaSampler::new(tp, 300).unwrap();
        let mut rng = RngStream::new(30, 0).rng();
        let fine: Vec<f64> = (0..30_000)
            .map(|_| sampler.sample_bridge(&[0.0, 0.25, 0.5, 1.0], &mut rng).unwrap().w_values[2])
            .collect();
        let coarse: Vec<f64> = (0..30_000)
            .map(|_| sampler.sample_bridge(&[0.0, 0.5, 1.0], &mut rng).unwrap().w_values[1])
            .collect();
        assert!(ks_two_sample(&fine, &coarse).unwrap() < 0.02);
    }

    #[test]
    fn truncation_diagnostic_properties() {
        let tp = TailParams::new(1.0, 0.5).unwrap();
        let env = LePageEnvironment::sample(10_000, &mut RngStream::new(31, 0).rng()).unwrap();
        let at_100 = truncation_diagnostic(&env, &tp, 100).unwrap();
        let at_1000 = truncation_diagnostic(&env, &tp, 1000).unwrap();
        assert!(at_100 > 5.0 * at_1000, "{at_100} vs {at_1000}");

        let full = truncation_diagnostic(&env, &tp, env.len()).unwrap();
        let last = env.s()[env.len() - 1];
        let last_star = env.s_star()[env.len() - 1];
        assert_abs_diff_eq!(full, 0.25 * last.powi(-1) + 0.25 * last_star.powi(-1), epsilon = 1e-18);

        let mut prev = f64::INFINITY;
        for k in (0..=env.len()).step_by(97) {
            let d = truncation_diagnostic(&env, &tp, k).unwrap();
            assert!(d <= prev);
            prev = d;
        }
        assert!(truncation_diagnostic(&env, &tp, env.len() + 1).is_err());
    }
}
