//! Strictly stable laws and Pareto-tailed members of their domains of
//! attraction.

use crate::error::{Error, Result};
use crate::rng::open_unit;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI};

/// Parameters `(alpha, beta, c)` of a strictly stable law.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StableParams {
    alpha: f64,
    beta: f64,
    scale_c: f64,
}

impl StableParams {
    /// `alpha` in (0, 2], `|beta| <= 1`, `scale_c > 0`. At `alpha = 1` only
    /// the symmetric Cauchy law is strictly stable, so `beta` must be 0.
    pub fn new(alpha: f64, beta: f64, scale_c: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 2.0) {
            return Err(Error::param(format!("alpha = {alpha} outside (0, 2]")));
        }
        if !(-1.0..=1.0).contains(&beta) {
            return Err(Error::param(format!("beta = {beta} outside [-1, 1]")));
        }
        if !(scale_c > 0.0 && scale_c.is_finite()) {
            return Err(Error::param(format!("scale c = {scale_c} must be positive")));
        }
        if alpha == 1.0 && beta != 0.0 {
            return Err(Error::param("alpha = 1 requires beta = 0"));
        }
        Ok(Self { alpha, beta, scale_c })
    }

    /// Unit-scale law with the skewness implied by `tp`.
    pub fn from_tail(tp: &TailParams) -> Self {
        Self {
            alpha: tp.alpha,
            beta: if tp.alpha == 1.0 { 0.0 } else { tp.beta() },
            scale_c: 1.0,
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn scale_c(&self) -> f64 {
        self.scale_c
    }

    /// Characteristic function at `t`.
    pub fn characteristic_fn(&self, t: f64) -> Complex64 {
        let c = self.scale_c;
        if self.alpha == 2.0 {
            Complex64::new((-c * t * t / 2.0).exp(), 0.0)
        } else if self.alpha == 1.0 {
            Complex64::new((-c * t.abs()).exp(), 0.0)
        } else {
            let a = t.abs().powf(self.alpha);
            let skew = self.beta * sign(t) * (FRAC_PI_2 * self.alpha).tan();
            (-c * a * Complex64::new(1.0, -skew)).exp()
        }
    }

    /// One draw by the Chambers-Mallows-Stuck transform of a uniform angle
    /// and a unit exponential.
    pub fn sample_one<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let c = self.scale_c;
        if self.alpha == 2.0 {
            let z: f64 = StandardNormal.sample(rng);
            return c.sqrt() * z;
        }
        let v = PI * (open_unit(rng) - 0.5);
        if self.alpha == 1.0 {
            return c * v.tan();
        }
        let w: f64 = Exp1.sample(rng);
        let alpha = self.alpha;
        let bt = self.beta * (FRAC_PI_2 * alpha).tan();
        let shift = bt.atan() / alpha;
        let stretch = (1.0 + bt * bt).powf(0.5 / alpha);
        let phase = alpha * (v + shift);
        let x = stretch * phase.sin() / v.cos().powf(1.0 / alpha)
            * ((v - phase).cos() / w).powf((1.0 - alpha) / alpha);
        c.powf(1.0 / alpha) * x
    }
}

fn sign(t: f64) -> f64 {
    if t > 0.0 {
        1.0
    } else if t < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// `count` i.i.d. draws from the strictly stable law `params`.
pub fn sample_stable<R: Rng + ?Sized>(params: &StableParams, count: usize, rng: &mut R) -> Vec<f64> {
    (0..count).map(|_| params.sample_one(rng)).collect()
}

/// Tail index `alpha` in (0, 2) and right-tail weight `p` of a law in the
/// domain of attraction of a strictly stable law.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TailParams {
    alpha: f64,
    p: f64,
}

impl TailParams {
    /// At `alpha = 1` only the balanced case `p = 1/2` is admitted.
    pub fn new(alpha: f64, p: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 2.0) {
            return Err(Error::param(format!("tail index alpha = {alpha} outside (0, 2)")));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::param(format!("tail weight p = {p} outside [0, 1]")));
        }
        if alpha == 1.0 && p != 0.5 {
            return Err(Error::param("alpha = 1 requires p = q = 1/2"));
        }
        Ok(Self { alpha, p })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        1.0 - self.p
    }

    pub fn beta(&self) -> f64 {
        2.0 * self.p - 1.0
    }

    /// Weight `q^(1/alpha)` of the lower (negative) extremes.
    pub fn w_lower(&self) -> f64 {
        self.q().powf(1.0 / self.alpha)
    }

    /// Weight `p^(1/alpha)` of the upper (positive) extremes.
    pub fn w_upper(&self) -> f64 {
        self.p.powf(1.0 / self.alpha)
    }

    /// Mean of the two-sided Pareto law; `None` when `alpha < 1` (no
    /// centering is used there).
    pub fn analytic_mean(&self) -> Option<f64> {
        analytic_mean(self)
    }
}

/// `(p - q) alpha / (alpha - 1)` for `alpha > 1`, 0 at the symmetric
/// `alpha = 1`, undefined below.
pub fn analytic_mean(tp: &TailParams) -> Option<f64> {
    let a = tp.alpha;
    if a > 1.0 {
        Some((tp.p - tp.q()) * a / (a - 1.0))
    } else if a == 1.0 {
        Some(0.0)
    } else {
        None
    }
}

/// Two-sided Pareto draws: `+U^(-1/alpha)` with probability `p`, otherwise
/// `-U^(-1/alpha)`. Tails are exactly `P{X > y} = p y^-alpha`,
/// `P{X < -y} = q y^-alpha` for `y >= 1`.
pub fn sample_domain_of_attraction<R: Rng + ?Sized>(tp: &TailParams, count: usize, rng: &mut R) -> Vec<f64> {
    sample_two_sided_pareto(tp.alpha, tp.p, count, rng)
}

/// Two-sided Pareto draws for any tail index `alpha > 0`, including the
/// finite-variance range `alpha > 2`.
pub fn sample_two_sided_pareto<R: Rng + ?Sized>(alpha: f64, p: f64, count: usize, rng: &mut R) -> Vec<f64> {
    let inv = -1.0 / alpha;
    (0..count)
        .map(|_| {
            let magnitude = open_unit(rng).powf(inv);
            if rng.random::<f64>() < p {
                magnitude
            } else {
                -magnitude
            }
        })
        .collect()
}
