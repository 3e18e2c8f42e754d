//! Empirical distributions and Kolmogorov-Smirnov machinery.

use crate::error::{Error, Result};
use statrs::function::erf::erfc;
use std::cmp::Ordering;

/// A sorted, finite sample with CDF, quantile and KS queries.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalDistribution {
    samples: Vec<f64>,
}

impl EmpiricalDistribution {
    /// Sorts `samples`. Rejects empty input and non-finite values.
    pub fn new(mut samples: Vec<f64>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::EmptySample);
        }
        if samples.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        samples.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
        Ok(Self { samples })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn min(&self) -> f64 {
        self.samples[0]
    }

    pub fn max(&self) -> f64 {
        self.samples[self.samples.len() - 1]
    }

    /// Number of samples `<= x`.
    fn count_le(&self, x: f64) -> usize {
        self.samples.partition_point(|&s| s <= x)
    }

    /// Right-continuous empirical CDF at `x`.
    pub fn cdf(&self, x: f64) -> f64 {
        self.count_le(x) as f64 / self.len() as f64
    }

    /// Order statistic with 1-based index `ceil(q * count)`, clamped to
    /// `[1, count]`.
    pub fn quantile(&self, q: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&q) {
            return Err(Error::ProbabilityOutOfRange(q));
        }
        let m = self.len();
        let raw = q * m as f64;
        // snap products such as 0.95 * 100 that land a hair off an integer
        let snapped = if (raw - raw.round()).abs() <= 1e-9 * raw.max(1.0) {
            raw.round()
        } else {
            raw.ceil()
        };
        let idx = (snapped as usize).clamp(1, m);
        Ok(self.samples[idx - 1])
    }

    /// Exact two-sample KS distance, computed by merging the sorted samples.
    pub fn ks_two_sample(&self, other: &Self) -> f64 {
        let (a, b) = (&self.samples, &other.samples);
        let (na, nb) = (a.len() as f64, b.len() as f64);
        let (mut i, mut j) = (0usize, 0usize);
        let mut sup: f64 = 0.0;
        while i < a.len() && j < b.len() {
            let x = a[i].min(b[j]);
            while i < a.len() && a[i] <= x {
                i += 1;
            }
            while j < b.len() && b[j] <= x {
                j += 1;
            }
            sup = sup.max((i as f64 / na - j as f64 / nb).abs());
        }
        // once one sample is exhausted the remaining gap is largest right away
        if i < a.len() || j < b.len() {
            sup = sup.max((i as f64 / na - j as f64 / nb).abs());
        }
        sup
    }

    /// One-sample KS distance against a continuous reference CDF, checking
    /// both one-sided gaps at every sample point.
    pub fn ks_one_sample<F: Fn(f64) -> f64>(&self, cdf: F) -> f64 {
        let m = self.len() as f64;
        self.samples
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                let f = cdf(x);
                ((i as f64 + 1.0) / m - f).max(f - i as f64 / m)
            })
            .fold(0.0, f64::max)
    }

    pub fn mean(&self) -> f64 {
        crate::numeric::exact_sum(self.samples.iter().copied()) / self.len() as f64
    }

    /// Unbiased sample variance; zero for a single sample.
    pub fn variance(&self) -> f64 {
        sample_variance(&self.samples)
    }

    /// Interquartile range `Q(0.75) - Q(0.25)`.
    pub fn iqr(&self) -> f64 {
        self.quantile(0.75).unwrap() - self.quantile(0.25).unwrap()
    }
}

/// Convenience wrapper: KS distance between two raw samples.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> Result<f64> {
    let a = EmpiricalDistribution::new(a.to_vec())?;
    let b = EmpiricalDistribution::new(b.to_vec())?;
    Ok(a.ks_two_sample(&b))
}

/// Convenience wrapper: one-sample KS distance of a raw sample.
pub fn ks_one_sample<F: Fn(f64) -> f64>(a: &[f64], cdf: F) -> Result<f64> {
    Ok(EmpiricalDistribution::new(a.to_vec())?.ks_one_sample(cdf))
}

/// Asymptotic 5% critical value of the two-sample KS statistic.
pub fn ks_two_sample_critical_5pct(n: usize, m: usize) -> f64 {
    1.358 * ((n + m) as f64 / (n as f64 * m as f64)).sqrt()
}

/// Asymptotic 5% critical value of the one-sample KS statistic.
pub fn ks_one_sample_critical_5pct(n: usize) -> f64 {
    1.358 / (n as f64).sqrt()
}

/// Kolmogorov distribution `P{sup |B(t)| <= x}` for a Brownian bridge `B`.
///
/// Uses `1 - 2 sum (-1)^(k-1) exp(-2 k^2 x^2)` for `x >= 1` and the
/// Jacobi-transformed series `sqrt(2 pi)/x sum exp(-(2k-1)^2 pi^2 / (8 x^2))`
/// below 1, where the alternating form cancels badly. Both are truncated
/// once a term drops below 1e-12.
pub fn kolmogorov_cdf(x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    const EPS: f64 = 1e-12;
    if x >= 1.0 {
        let mut sum = 0.0;
        for k in 1.. {
            let term = (-2.0 * (k * k) as f64 * x * x).exp();
            sum += if k % 2 == 1 { term } else { -term };
            if term < EPS {
                break;
            }
        }
        (1.0 - 2.0 * sum).clamp(0.0, 1.0)
    } else {
        let pi2 = std::f64::consts::PI * std::f64::consts::PI;
        let mut sum = 0.0;
        for k in 1.. {
            let odd = (2 * k - 1) as f64;
            let term = (-odd * odd * pi2 / (8.0 * x * x)).exp();
            sum += term;
            if term < EPS * sum.max(f64::MIN_POSITIVE) || term == 0.0 {
                break;
            }
        }
        ((2.0 * std::f64::consts::PI).sqrt() / x * sum).clamp(0.0, 1.0)
    }
}

/// Standard normal CDF.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * erfc(-x / std::f64::consts::SQRT_2)
}

/// Unit exponential CDF.
pub fn exp1_cdf(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        -(-x).exp_m1()
    }
}

pub fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Unbiased sample variance (zero below two samples).
pub fn sample_variance(xs: &[f64]) -> f64 {
    if xs.len() < 2 {
        return 0.0;
    }
    let m = mean(xs);
    xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (xs.len() - 1) as f64
}

pub fn sample_sd(xs: &[f64]) -> f64 {
    sample_variance(xs).sqrt()
}

/// Unbiased sample covariance and the standard error of that estimate.
pub fn sample_covariance_with_se(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len().min(ys.len());
    let (mx, my) = (mean(&xs[..n]), mean(&ys[..n]));
    let products: Vec<f64> = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).collect();
    let cov = products.iter().sum::<f64>() / (n - 1) as f64;
    let se = sample_sd(&products) / (n as f64).sqrt();
    (cov, se)
}
