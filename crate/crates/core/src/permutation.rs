//! Random permutations, order-statistic selection indicators and the
//! permutation distribution of `A_{n,pi}(t)` for a fixed sample.

use crate::cusum::{floor_nt, t_n, Realization};
use crate::error::{Error, Result};
use crate::numeric::exact_sum;
use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

/// Largest sample size accepted by [`enumerate_permutation_distribution`].
pub const MAX_ENUMERATION_N: usize = 8;

/// A bijection on `{0, ..., n-1}`; position `j` draws observation `indices()[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    idx: Vec<usize>,
}

impl Permutation {
    pub fn new(idx: Vec<usize>) -> Result<Self> {
        let n = idx.len();
        let mut seen = vec![false; n];
        for &i in &idx {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(n));
            }
            seen[i] = true;
        }
        Ok(Self { idx })
    }

    /// Builds from 1-based notation, e.g. `(2, 3, 1)`.
    pub fn from_one_based(idx: &[usize]) -> Result<Self> {
        if idx.contains(&0) {
            return Err(Error::InvalidPermutation(idx.len()));
        }
        Self::new(idx.iter().map(|i| i - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self { idx: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.idx.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idx.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.idx
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        self.idx.iter().map(|&i| x[i]).collect()
    }
}

/// Uniform random permutation by Fisher-Yates.
pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Permutation> {
    if n < 1 {
        return Err(Error::param("permutation size must be at least 1"));
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    Ok(Permutation { idx })
}

/// `eps[r] = 1` iff the `r`-th smallest observation (0-based rank) is among
/// the first `m = floor(n t)` permuted positions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelectionIndicators {
    pub eps: Vec<u8>,
    pub t: f64,
    pub m: usize,
}

impl SelectionIndicators {
    pub fn n(&self) -> usize {
        self.eps.len()
    }

    /// `eps - m/n` as exact rationals.
    pub fn centered(&self) -> Vec<Rational64> {
        let shift = Rational64::new(self.m as i64, self.n() as i64);
        self.eps.iter().map(|&e| Rational64::from_integer(e as i64) - shift).collect()
    }
}

fn check_t(t: f64) -> Result<()> {
    if (0.0..=1.0).contains(&t) {
        Ok(())
    } else {
        Err(Error::TimeOutOfRange(t))
    }
}

pub fn epsilon_indicators(r: &Realization, perm: &Permutation, t: f64) -> Result<SelectionIndicators> {
    check_t(t)?;
    if perm.len() != r.len() {
        return Err(Error::InvalidPermutation(perm.len()));
    }
    if r.has_ties() {
        return Err(Error::TiesPresent);
    }
    let n = r.len();
    let m = floor_nt(n, t);
    let mut rank = vec![0usize; n];
    for (k, &i) in r.rank_order().iter().enumerate() {
        rank[i] = k;
    }
    let mut eps = vec![0u8; n];
    for &i in &perm.indices()[..m] {
        eps[rank[i]] = 1;
    }
    Ok(SelectionIndicators { eps, t, m })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EpsilonMoments {
    pub variance: Rational64,
    pub covariance: Rational64,
}

/// `Var eps_j = m/n - (m/n)^2` and `Cov(eps_j, eps_k) = -m(n-m) / (n^2 (n-1))`
/// for `j != k`, with `m = floor(n t)`.
pub fn epsilon_moments(n: usize, t: f64) -> Result<EpsilonMoments> {
    if n < 2 {
        return Err(Error::param(format!("epsilon moments need n >= 2, got {n}")));
    }
    check_t(t)?;
    let (n, m) = (n as i64, floor_nt(n, t) as i64);
    let p = Rational64::new(m, n);
    Ok(EpsilonMoments {
        variance: p - p * p,
        covariance: Rational64::new(-m * (n - m), n * n * (n - 1)),
    })
}

/// Exact rational value of a finite float.
pub fn float_to_rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite float")
}

/// Both sides of the rewriting identity
/// `sum_{j<=m} (X_{pi(j)} - mean) = sum_r (X_{(r)} - mean) (eps_r - m/n)`
/// in exact rational arithmetic, with the exact rational sample mean.
pub fn rewriting_identity_sides(r: &Realization, perm: &Permutation, t: f64) -> Result<(BigRational, BigRational)> {
    let ind = epsilon_indicators(r, perm, t)?;
    let n = r.len();
    let xs: Vec<BigRational> = r.values().iter().map(|&v| float_to_rational(v)).collect();
    let total = xs.iter().fold(BigRational::zero(), |acc, v| acc + v);
    let mean = total / BigRational::from_integer(BigInt::from(n));
    let lhs = perm.indices()[..ind.m]
        .iter()
        .fold(BigRational::zero(), |acc, &i| acc + (&xs[i] - &mean));
    let shift = BigRational::new(BigInt::from(ind.m), BigInt::from(n));
    let rhs = r
        .rank_order()
        .iter()
        .zip(&ind.eps)
        .fold(BigRational::zero(), |acc, (&i, &e)| {
            let centered_eps = BigRational::from_integer(BigInt::from(e)) - &shift;
            acc + (&xs[i] - &mean) * centered_eps
        });
    Ok((lhs, rhs))
}

/// `A_{n,pi}(t)` computed two ways in floating point: from the permuted
/// positions and from the sorted sample weighted by `eps`. Both use the
/// correctly rounded sum of the same terms, so they agree bit for bit.
pub fn epsilon_route_values(r: &Realization, perm: &Permutation, t: f64) -> Result<(f64, f64)> {
    let ind = epsilon_indicators(r, perm, t)?;
    let tn = t_n(r)?;
    let mean = r.mean();
    let x = r.values();
    if ind.m == r.len() {
        return Ok((0.0, 0.0));
    }
    let direct = exact_sum(perm.indices()[..ind.m].iter().map(|&i| x[i] - mean)) / tn;
    let via_eps = exact_sum(
        r.rank_order()
            .iter()
            .zip(&ind.eps)
            .map(|(&i, &e)| if e == 1 { x[i] - mean } else { 0.0 }),
    ) / tn;
    Ok((direct, via_eps))
}

/// Estimate (or exact value) of `x -> P_X{A_{n,pi}(t) <= x}` on a set of points.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionalCdfEstimate {
    pub realization_id: u64,
    pub t: f64,
    pub xs: Vec<f64>,
    pub probs: Vec<f64>,
    pub num_perms: u64,
    pub exact: bool,
}

impl ConditionalCdfEstimate {
    pub fn with_realization_id(mut self, id: u64) -> Self {
        self.realization_id = id;
        self
    }
}

/// Draws `num_perms` values of the unnormalized permuted sum
/// `sum_{j <= nt} (X_{pi(j)} - mean)` with `X` held fixed. Only the first
/// `floor(n t)` positions of each permutation are randomized.
pub fn sample_permuted_sums<R: Rng + ?Sized>(r: &Realization, t: f64, num_perms: usize, rng: &mut R) -> Result<Vec<f64>> {
    check_t(t)?;
    let n = r.len();
    let m = floor_nt(n, t);
    let mean = r.mean();
    let mut buf: Vec<f64> = r.values().iter().map(|v| v - mean).collect();
    let mut out = Vec::with_capacity(num_perms);
    for _ in 0..num_perms {
        if m == n {
            out.push(0.0);
            continue;
        }
        let (chosen, _) = buf.partial_shuffle(rng, m);
        out.push(chosen.iter().sum());
    }
    Ok(out)
}

/// Draws `num_perms` values of `A_{n,pi}(t)` with `X` held fixed.
pub fn sample_permuted_statistic<R: Rng + ?Sized>(r: &Realization, t: f64, num_perms: usize, rng: &mut R) -> Result<Vec<f64>> {
    let tn = t_n(r)?;
    let mut sums = sample_permuted_sums(r, t, num_perms, rng)?;
    for v in sums.iter_mut() {
        *v /= tn;
    }
    Ok(sums)
}

/// Monte Carlo estimate of `P_X{A_{n,pi}(t) <= x}` at each `x` in `xs`.
pub fn conditional_cdf_estimate<R: Rng + ?Sized>(
    r: &Realization,
    t: f64,
    xs: &[f64],
    num_perms: usize,
    rng: &mut R,
) -> Result<ConditionalCdfEstimate> {
    if num_perms < 1 {
        return Err(Error::param("num_perms must be at least 1"));
    }
    let values = sample_permuted_statistic(r, t, num_perms, rng)?;
    let probs = xs
        .iter()
        .map(|&x| values.iter().filter(|&&v| v <= x).count() as f64 / num_perms as f64)
        .collect();
    Ok(ConditionalCdfEstimate {
        realization_id: 0,
        t,
        xs: xs.to_vec(),
        probs,
        num_perms: num_perms as u64,
        exact: false,
    })
}

/// One support point of the exact permutation law.
#[derive(Debug, Clone, PartialEq)]
pub struct Atom {
    pub value: f64,
    pub mass: Rational64,
}

/// Exact law of `A_{n,pi}(t)` over all `n!` permutations.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactPermutationLaw {
    pub t: f64,
    /// Sorted by value, masses summing to one.
    pub atoms: Vec<Atom>,
    pub permutations: u64,
}

impl ExactPermutationLaw {
    pub fn cdf(&self, x: f64) -> Rational64 {
        self.atoms
            .iter()
            .filter(|a| a.value <= x)
            .fold(Rational64::zero(), |acc, a| acc + a.mass)
    }

    pub fn cdf_estimate(&self, xs: &[f64]) -> ConditionalCdfEstimate {
        let probs = xs
            .iter()
            .map(|&x| {
                let c = self.cdf(x);
                *c.numer() as f64 / *c.denom() as f64
            })
            .collect();
        ConditionalCdfEstimate {
            realization_id: 0,
            t: self.t,
            xs: xs.to_vec(),
            probs,
            num_perms: self.permutations,
            exact: true,
        }
    }
}

/// Exact permutation law. `A_{n,pi}(t)` only depends on which `m = floor(n t)`
/// observations come first, so the `C(n, m)` subsets are enumerated, each
/// carrying `m! (n-m)!` permutations.
pub fn enumerate_permutation_distribution(r: &Realization, t: f64) -> Result<ExactPermutationLaw> {
    check_t(t)?;
    let n = r.len();
    if n > MAX_ENUMERATION_N {
        return Err(Error::TooLarge { n, limit: MAX_ENUMERATION_N });
    }
    let tn = t_n(r)?;
    let m = floor_nt(n, t);
    let mean = r.mean();
    let dev: Vec<f64> = r.values().iter().map(|v| v - mean).collect();
    let mut values = Vec::new();
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as usize != m {
            continue;
        }
        let v = if m == n {
            0.0
        } else {
            exact_sum((0..n).filter(|i| mask >> i & 1 == 1).map(|i| dev[i])) / tn
        };
        values.push(v);
    }
    values.sort_by(f64::total_cmp);
    let subsets = values.len() as i64;
    let mut atoms: Vec<Atom> = Vec::new();
    for v in values {
        match atoms.last_mut() {
            Some(a) if a.value == v => a.mass += Rational64::new(1, subsets),
            _ => atoms.push(Atom { value: v, mass: Rational64::new(1, subsets) }),
        }
    }
    let permutations = (1..=n as u64).product();
    Ok(ExactPermutationLaw { t, atoms, permutations })
}

/// All `n!` permutations in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation { idx: cur.clone() });
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Variance of `eps_0` and covariance of `(eps_0, eps_1)` over every
/// permutation of `n` distinct values, in exact rationals.
pub fn enumerated_epsilon_moments(n: usize, t: f64) -> Result<EpsilonMoments> {
    let r = Realization::new((0..n).map(|i| i as f64).collect())?;
    let perms = all_permutations(n);
    let count = perms.len() as i64;
    let (mut s0, mut s00, mut s01, mut s1) = (0i64, 0i64, 0i64, 0i64);
    for perm in &perms {
        let e = epsilon_indicators(&r, perm, t)?.eps;
        let (a, b) = (e[0] as i64, e[1] as i64);
        s0 += a;
        s1 += b;
        s00 += a * a;
        s01 += a * b;
    }
    let mean0 = Rational64::new(s0, count);
    let mean1 = Rational64::new(s1, count);
    Ok(EpsilonMoments {
        variance: Rational64::new(s00, count) - mean0 * mean0,
        covariance: Rational64::new(s01, count) - mean0 * mean1,
    })
}

/// Whether the enumerated moments equal the closed form for every pair of
/// ranks, not just the first two.
pub fn epsilon_moments_match_all_pairs(n: usize, t: f64) -> Result<bool> {
    let expected = epsilon_moments(n, t)?;
    let r = Realization::new((0..n).map(|i| i as f64).collect())?;
    let perms = all_permutations(n);
    let count = perms.len() as i64;
    let mut first = vec![0i64; n];
    let mut second = vec![vec![0i64; n]; n];
    for perm in &perms {
        let e = epsilon_indicators(&r, perm, t)?.eps;
        for j in 0..n {
            first[j] += e[j] as i64;
            for k in 0..n {
                second[j][k] += (e[j] * e[k]) as i64;
            }
        }
    }
    for j in 0..n {
        for k in 0..n {
            let cov = Rational64::new(second[j][k], count)
                - Rational64::new(first[j], count) * Rational64::new(first[k], count);
            let want = if j == k { expected.variance } else { expected.covariance };
            if cov != want {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Exact identity check helper: `true` when both sides agree.
pub fn rewriting_identity_holds(r: &Realization, perm: &Permutation, t: f64) -> Result<bool> {
    let (lhs, rhs) = rewriting_identity_sides(r, perm, t)?;
    Ok(lhs == rhs)
}

/// Total mass of an exact law; one by construction.
pub fn total_mass(law: &ExactPermutationLaw) -> Rational64 {
    law.atoms.iter().fold(Rational64::zero(), |acc, a| acc + a.mass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cusum::{cusum_an_permuted, tie_break, TimeGrid};
    use crate::rng::RngStream;
    use crate::stable::{sample_domain_of_attraction, TailParams};
    use approx::assert_abs_diff_eq;
    use num_traits::One;
    use proptest::prelude::*;
    use std::collections::HashMap;

    fn real(x: &[f64]) -> Realization {
        Realization::new(x.to_vec()).unwrap()
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_one_based(&[0, 1]).is_err());
        assert_eq!(Permutation::from_one_based(&[2, 3, 1]).unwrap().indices(), &[1, 2, 0]);
    }

    #[test]
    fn random_permutation_small_cases() {
        let mut rng = RngStream::new(1, 0).rng();
        assert!(random_permutation(0, &mut rng).is_err());
        assert_eq!(random_permutation(1, &mut rng).unwrap(), Permutation::identity(1));
        let a = random_permutation(50, &mut RngStream::new(9, 3).rng()).unwrap();
        let b = random_permutation(50, &mut RngStream::new(9, 3).rng()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn random_permutation_is_uniform_on_three() {
        let mut rng = RngStream::new(2, 0).rng();
        let draws = 60_000;
        let mut freq: HashMap<Vec<usize>, usize> = HashMap::new();
        for _ in 0..draws {
            *freq.entry(random_permutation(3, &mut rng).unwrap().indices().to_vec()).or_default() += 1;
        }
        assert_eq!(freq.len(), 6);
        for count in freq.values() {
            assert!((*count as f64 / draws as f64 - 1.0 / 6.0).abs() < 0.01);
        }
    }

    #[test]
    fn all_permutations_counts() {
        assert_eq!(all_permutations(1).len(), 1);
        assert_eq!(all_permutations(5).len(), 120);
        let mut p = all_permutations(4);
        p.dedup();
        assert_eq!(p.len(), 24);
    }

    #[test]
    fn epsilon_examples() {
        let r = real(&[5.0, 1.0, 3.0]);
        let perm = Permutation::from_one_based(&[2, 3, 1]).unwrap();
        assert_eq!(epsilon_indicators(&r, &perm, 1.0 / 3.0).unwrap().eps, vec![1, 0, 0]);
        assert_eq!(epsilon_indicators(&r, &perm, 2.0 / 3.0).unwrap().eps, vec![1, 1, 0]);
        assert_eq!(epsilon_indicators(&r, &perm, 1.0).unwrap().eps, vec![1, 1, 1]);
        assert!(matches!(
            epsilon_indicators(&real(&[1.0, 1.0, 2.0]), &perm, 0.5),
            Err(Error::TiesPresent)
        ));
    }

    #[test]
    fn epsilon_moment_examples() {
        let m = epsilon_moments(4, 0.5).unwrap();
        assert_eq!(m.variance, Rational64::new(1, 4));
        assert_eq!(m.covariance, Rational64::new(-1, 12));
        for t in [0.0, 1.0] {
            let m = epsilon_moments(5, t).unwrap();
            assert_eq!(m.variance, Rational64::zero());
            assert_eq!(m.covariance, Rational64::zero());
        }
        assert_eq!(enumerated_epsilon_moments(4, 0.5).unwrap(), epsilon_moments(4, 0.5).unwrap());
    }

    #[test]
    fn epsilon_moments_match_enumeration() {
        for n in 2..=7 {
            for t in [0.25, 0.5, 0.75] {
                assert_eq!(enumerated_epsilon_moments(n, t).unwrap(), epsilon_moments(n, t).unwrap(), "n={n} t={t}");
                assert!(epsilon_moments_match_all_pairs(n, t).unwrap());
            }
        }
    }

    #[test]
    fn exact_law_example() {
        let law = enumerate_permutation_distribution(&real(&[1.0, 2.0, 4.0]), 0.5).unwrap();
        let values: Vec<f64> = law.atoms.iter().map(|a| a.value).collect();
        assert_eq!(values.len(), 3);
        assert_abs_diff_eq!(values[0], -1.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(values[1], -1.0 / 12.0, epsilon = 1e-15);
        assert_abs_diff_eq!(values[2], 5.0 / 12.0, epsilon = 1e-15);
        assert!(law.atoms.iter().all(|a| a.mass == Rational64::new(1, 3)));
        assert_eq!(law.cdf(0.0), Rational64::new(2, 3));
        let full = enumerate_permutation_distribution(&real(&[1.0, 2.0, 4.0]), 1.0).unwrap();
        assert_eq!(full.atoms, vec![Atom { value: 0.0, mass: Rational64::one() }]);
        assert!(enumerate_permutation_distribution(&real(&[0.0; 9].map(|_| 1.0)), 0.5).is_err());
    }

    #[test]
    fn subset_enumeration_matches_brute_force() {
        let r = real(&[0.7, -1.9, 3.3, 0.2, 5.1]);
        for t in [0.2, 0.4, 0.5, 0.8] {
            let law = enumerate_permutation_distribution(&r, t).unwrap();
            assert_eq!(total_mass(&law), Rational64::one());
            let grid = TimeGrid::times(&[t]).unwrap();
            let mut brute: Vec<f64> = all_permutations(5)
                .iter()
                .map(|p| cusum_an_permuted(&r, p, &grid).unwrap().values[0])
                .collect();
            brute.sort_by(f64::total_cmp);
            for x in brute.iter().copied() {
                let exact = law.cdf(x + 1e-12);
                let below = brute.iter().filter(|&&v| v <= x + 1e-12).count() as i64;
                assert_eq!(exact, Rational64::new(below, 120));
            }
        }
    }

    #[test]
    fn estimate_examples() {
        let r = real(&[1.0, 2.0, 4.0]);
        let mut rng = RngStream::new(3, 0).rng();
        let est = conditional_cdf_estimate(&r, 0.5, &[0.0, 1e10], 10_000, &mut rng).unwrap();
        assert!(!est.exact);
        let se = (2.0 / 9.0 / 10_000.0f64).sqrt();
        assert!((est.probs[0] - 2.0 / 3.0).abs() < 2.0 * se);
        assert_eq!(est.probs[1], 1.0);
        assert!(conditional_cdf_estimate(&r, 0.5, &[0.0], 0, &mut rng).is_err());
    }

    #[test]
    fn estimate_agrees_with_exact_law() {
        let r = real(&[0.3, -2.5, 1.1, 7.4, -0.6, 2.2]);
        let num_perms = 20_000;
        let xs: Vec<f64> = (-40..=40).map(|i| i as f64 / 40.0).collect();
        for t in [1.0 / 3.0, 0.5] {
            let law = enumerate_permutation_distribution(&r, t).unwrap();
            let exact = law.cdf_estimate(&xs);
            assert!(exact.exact);
            let est = conditional_cdf_estimate(&r, t, &xs, num_perms, &mut RngStream::new(4, 1).rng()).unwrap();
            let gap = est.probs.iter().zip(&exact.probs).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            assert!(gap < 3.0 * (2f64.ln() / 2.0 / num_perms as f64).sqrt(), "gap {gap}");
            assert!(est.probs.windows(2).all(|w| w[1] >= w[0]));
        }
    }

    #[test]
    fn rewriting_identity_on_heavy_tailed_data() {
        let tp = TailParams::new(1.2, 0.7).unwrap();
        for rep in 0..50u64 {
            let stream = RngStream::new(5, rep);
            let mut rng = stream.rng();
            let r = tie_break(&Realization::new(sample_domain_of_attraction(&tp, 7, &mut rng)).unwrap(), 1.2);
            let perm = random_permutation(7, &mut rng).unwrap();
            for t in [1.0 / 7.0, 0.5, 6.0 / 7.0, 1.0] {
                assert!(rewriting_identity_holds(&r, &perm, t).unwrap());
                let (a, b) = epsilon_route_values(&r, &perm, t).unwrap();
                assert_eq!(a.to_bits(), b.to_bits());
                let path = cusum_an_permuted(&r, &perm, &TimeGrid::times(&[t]).unwrap()).unwrap();
                assert_abs_diff_eq!(path.values[0], a, epsilon = 1e-12);
            }
        }
    }

    proptest! {
        #[test]
        fn indicators_sum_to_floor_nt(x in prop::collection::vec(-1e3f64..1e3, 2..40), seed in any::<u64>(), t in 0f64..=1.0) {
            let r = tie_break(&Realization::new(x).unwrap(), 1.0);
            let perm = random_permutation(r.len(), &mut RngStream::new(seed, 0).rng()).unwrap();
            let ind = epsilon_indicators(&r, &perm, t).unwrap();
            prop_assert_eq!(ind.eps.iter().map(|&e| e as usize).sum::<usize>(), floor_nt(r.len(), t));
            let centered_total = ind.centered().into_iter().fold(Rational64::zero(), |a, b| a + b);
            prop_assert_eq!(centered_total, Rational64::zero());
        }
    }
}
