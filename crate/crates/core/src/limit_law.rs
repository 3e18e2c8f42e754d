//! The random limit `R(t)` of the permuted CUSUM under infinite variance.
//!
//! Given a frozen environment `(S_j), (S_j*)`,
//! `R(t) = (1/M) [ -w_lower sum_j S_j^(-1/a) (d_j(t) - t)
//!                 + w_upper sum_j S_j*^(-1/a) (d*_j(t) - t) ]`
//! with `d_j(t) = 1{U_j <= t}` for fresh uniforms `U_j, U_j*`. One set of
//! uniforms serves every `t`, which gives the joint law across times.

use crate::error::{Error, Result};
use crate::lepage::{lepage_terms, LePageEnvironment};
use crate::numeric::exact_sum;
use crate::rng::{open_unit, RngStream};
use crate::stable::TailParams;
use crate::stats::EmpiricalDistribution;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Number of points of the fixed x-grid for conditional CDFs.
pub const CDF_GRID_POINTS: usize = 201;

/// `M = max(w_lower S_1^(-1/a), w_upper S_1*^(-1/a))`.
pub fn compute_m(env: &LePageEnvironment, tp: &TailParams) -> Result<f64> {
    if env.is_empty() {
        return Err(Error::EmptySample);
    }
    let inv = -1.0 / tp.alpha();
    Ok((tp.w_lower() * env.s()[0].powf(inv)).max(tp.w_upper() * env.s_star()[0].powf(inv)))
}

fn check_open_time(t: f64) -> Result<()> {
    if t > 0.0 && t < 1.0 {
        Ok(())
    } else {
        Err(Error::TimeOutOfRange(t))
    }
}

fn check_len(env: &LePageEnvironment, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::param("truncation k must be at least 1"));
    }
    if env.len() < k {
        return Err(Error::EnvironmentTooShort { len: env.len(), k });
    }
    Ok(())
}

/// `(w_lower^2 sum_{j<=k} S_j^(-2/a) + w_upper^2 sum_{j<=k} S_j*^(-2/a)) / M^2`.
fn second_moment_weight(env: &LePageEnvironment, tp: &TailParams, k: usize) -> Result<f64> {
    check_len(env, k)?;
    let m = compute_m(env, tp)?;
    let e = -2.0 / tp.alpha();
    let lower = exact_sum(env.s()[..k].iter().map(|s| s.powf(e)));
    let upper = exact_sum(env.s_star()[..k].iter().map(|s| s.powf(e)));
    Ok((tp.w_lower().powi(2) * lower + tp.w_upper().powi(2) * upper) / (m * m))
}

/// `Var(R(t) | S)` for the series truncated at `k`.
pub fn r_conditional_variance(env: &LePageEnvironment, tp: &TailParams, t: f64, k: usize) -> Result<f64> {
    r_conditional_covariance(env, tp, t, t, k)
}

/// `Cov(R(t1), R(t2) | S) = (min(t1, t2) - t1 t2) * weight`.
pub fn r_conditional_covariance(env: &LePageEnvironment, tp: &TailParams, t1: f64, t2: f64, k: usize) -> Result<f64> {
    check_open_time(t1)?;
    check_open_time(t2)?;
    Ok((t1.min(t2) - t1 * t2) * second_moment_weight(env, tp, k)?)
}

/// Upper bound on the conditional variance of the discarded tail of
/// `R(t)`: `t (1 - t) A(k) / M^2` with `A` the truncation diagnostic.
pub fn r_tail_variance(env: &LePageEnvironment, tp: &TailParams, t: f64, k: usize) -> Result<f64> {
    check_open_time(t)?;
    let m = compute_m(env, tp)?;
    Ok(t * (1.0 - t) * crate::lepage::truncation_diagnostic(env, tp, k)? / (m * m))
}

/// One joint draw of `(R(t_1), ..., R(t_r))`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitDraw {
    pub ts: Vec<f64>,
    pub values: Vec<f64>,
    /// `(U_j, U_j*)`, kept only when requested.
    pub shared_uniforms: Option<(Vec<f64>, Vec<f64>)>,
}

/// Sampler of `R(t)` for a fixed environment, with the scaled series
/// coefficients precomputed.
#[derive(Debug, Clone)]
pub struct RLimitSampler {
    lower: Vec<f64>,
    upper: Vec<f64>,
    lower_total: f64,
    upper_total: f64,
    ts: Vec<f64>,
    m: f64,
}

impl RLimitSampler {
    pub fn new(env: &LePageEnvironment, tp: &TailParams, ts: &[f64], k: usize) -> Result<Self> {
        check_len(env, k)?;
        if ts.is_empty() {
            return Err(Error::InvalidGrid("no evaluation times"));
        }
        for &t in ts {
            check_open_time(t)?;
        }
        let m = compute_m(env, tp)?;
        let scale = |w: f64, s: &[f64]| -> Vec<f64> {
            lepage_terms(&s[..k], tp.alpha()).into_iter().map(|z| w * z / m).collect()
        };
        let lower = scale(tp.w_lower(), env.s());
        let upper = scale(tp.w_upper(), env.s_star());
        Ok(Self {
            lower_total: exact_sum(lower.iter().copied()),
            upper_total: exact_sum(upper.iter().copied()),
            lower,
            upper,
            ts: ts.to_vec(),
            m,
        })
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn ts(&self) -> &[f64] {
        &self.ts
    }

    pub fn truncation(&self) -> usize {
        self.lower.len()
    }

    /// `R(t)` from given uniforms, as
    /// `-(sum_{U_j <= t} a_j - t A) + (sum_{U_j* <= t} b_j - t B)`.
    pub fn evaluate(&self, u: &[f64], u_star: &[f64], t: f64) -> f64 {
        let hit = |coef: &[f64], us: &[f64]| -> f64 {
            let mut acc = 0.0;
            for (c, &x) in coef.iter().zip(us) {
                if x <= t {
                    acc += c;
                }
            }
            acc
        };
        let lower = hit(&self.lower, u) - t * self.lower_total;
        let upper = hit(&self.upper, u_star) - t * self.upper_total;
        upper - lower
    }

    fn fill_uniforms<R: Rng + ?Sized>(&self, rng: &mut R, u: &mut [f64], u_star: &mut [f64]) {
        for x in u.iter_mut() {
            *x = open_unit(rng);
        }
        for x in u_star.iter_mut() {
            *x = open_unit(rng);
        }
    }

    /// Values at every configured time from one set of fresh uniforms.
    pub fn sample_values<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        let k = self.truncation();
        let (mut u, mut u_star) = (vec![0.0; k], vec![0.0; k]);
        self.fill_uniforms(rng, &mut u, &mut u_star);
        self.ts.iter().map(|&t| self.evaluate(&u, &u_star, t)).collect()
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, keep_uniforms: bool) -> LimitDraw {
        let k = self.truncation();
        let (mut u, mut u_star) = (vec![0.0; k], vec![0.0; k]);
        self.fill_uniforms(rng, &mut u, &mut u_star);
        let values = self.ts.iter().map(|&t| self.evaluate(&u, &u_star, t)).collect();
        LimitDraw {
            ts: self.ts.clone(),
            values,
            shared_uniforms: keep_uniforms.then_some((u, u_star)),
        }
    }

    /// `num_draws` joint draws, returned per time: `out[i][d]` is draw `d`
    /// at `ts[i]`.
    pub fn sample_many<R: Rng + ?Sized>(&self, num_draws: usize, rng: &mut R) -> Vec<Vec<f64>> {
        let k = self.truncation();
        let (mut u, mut u_star) = (vec![0.0; k], vec![0.0; k]);
        let mut out = vec![Vec::with_capacity(num_draws); self.ts.len()];
        for _ in 0..num_draws {
            self.fill_uniforms(rng, &mut u, &mut u_star);
            for (i, &t) in self.ts.iter().enumerate() {
                out[i].push(self.evaluate(&u, &u_star, t));
            }
        }
        out
    }
}

/// `num_draws` joint draws of `R` at `ts` with the environment held fixed.
pub fn sample_r_conditional<R: Rng + ?Sized>(
    env: &LePageEnvironment,
    tp: &TailParams,
    ts: &[f64],
    k: usize,
    num_draws: usize,
    rng: &mut R,
) -> Result<Vec<LimitDraw>> {
    let sampler = RLimitSampler::new(env, tp, ts, k)?;
    Ok((0..num_draws).map(|_| sampler.sample(rng, false)).collect())
}

/// Conditional CDF of `R(t)` on a fixed grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionalLaw {
    pub t: f64,
    pub grid: Vec<f64>,
    pub cdf: Vec<f64>,
}

impl ConditionalLaw {
    /// Empirical CDF of `draws` on 201 points spanning the 0.5% to 99.5%
    /// empirical quantiles.
    pub fn from_draws(t: f64, draws: &[f64]) -> Result<Self> {
        let emp = EmpiricalDistribution::new(draws.to_vec())?;
        let lo = emp.quantile(0.005)?;
        let hi = emp.quantile(0.995)?;
        let grid: Vec<f64> = (0..CDF_GRID_POINTS)
            .map(|i| lo + (hi - lo) * i as f64 / (CDF_GRID_POINTS - 1) as f64)
            .collect();
        let cdf = grid.iter().map(|&x| emp.cdf(x)).collect();
        Ok(Self { t, grid, cdf })
    }
}

/// Draws of `R` for one environment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnvironmentDraws {
    pub env_index: u64,
    pub m: f64,
    pub ts: Vec<f64>,
    /// `draws[i][d]`: draw `d` at `ts[i]`.
    pub draws: Vec<Vec<f64>>,
    pub laws: Vec<ConditionalLaw>,
    /// Discarded-tail variance bound over the conditional variance, per time.
    pub tail_variance_ratio: Vec<f64>,
}

impl EnvironmentDraws {
    /// Fraction of draws at `ts[i]` that are `<= x`.
    pub fn prob_le(&self, i: usize, x: f64) -> f64 {
        let d = &self.draws[i];
        d.iter().filter(|&&v| v <= x).count() as f64 / d.len() as f64
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnconditionalSample {
    pub per_env: Vec<EnvironmentDraws>,
}

impl UnconditionalSample {
    /// All draws at `ts[i]` pooled across environments, in environment order.
    pub fn pooled(&self, i: usize) -> Vec<f64> {
        self.per_env.iter().flat_map(|e| e.draws[i].iter().copied()).collect()
    }
}

/// For each of `num_envs` fresh environments (environment `e` uses
/// `stream.child(e)`), `draws_per_env` joint draws of `R` at `ts`.
pub fn sample_r_unconditional(
    tp: &TailParams,
    ts: &[f64],
    k: usize,
    num_envs: usize,
    draws_per_env: usize,
    stream: &RngStream,
) -> Result<UnconditionalSample> {
    if num_envs == 0 || draws_per_env == 0 {
        return Err(Error::param("num_envs and draws_per_env must be at least 1"));
    }
    let per_env = (0..num_envs as u64)
        .into_par_iter()
        .map(|e| {
            let mut rng = stream.child(e).rng();
            let env = LePageEnvironment::sample(k, &mut rng)?;
            let sampler = RLimitSampler::new(&env, tp, ts, k)?;
            let draws = sampler.sample_many(draws_per_env, &mut rng);
            let laws = ts
                .iter()
                .zip(&draws)
                .map(|(&t, d)| ConditionalLaw::from_draws(t, d))
                .collect::<Result<Vec<_>>>()?;
            let tail_variance_ratio = ts
                .iter()
                .map(|&t| Ok(r_tail_variance(&env, tp, t, k)? / r_conditional_variance(&env, tp, t, k)?))
                .collect::<Result<Vec<_>>>()?;
            Ok(EnvironmentDraws {
                env_index: e,
                m: sampler.m(),
                ts: ts.to_vec(),
                draws,
                laws,
                tail_variance_ratio,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(UnconditionalSample { per_env })
}
