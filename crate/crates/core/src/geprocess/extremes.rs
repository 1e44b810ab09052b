//! Running extremes and the first-passage time above a level.
//!
//! A run of `n` observations touches `n + 1` innovations: the two end ones
//! enter a single maximum (with shapes α₁ and α₀) while each of the `n - 1`
//! shared ones must clear both shapes at once, contributing the exponent
//! `α* = max(α₀, α₁)`. Both the running-maximum law and the stopping-time
//! PMF are built on that count.

use rand::distr::Open01;
use rand::Rng;

use super::ProcessParams;
use crate::error::{Error, Result};
use crate::gedist::{ge_cdf, log1mexp, quantile_of_log};
use crate::rng;

/// `P(max(X_1..X_n) <= x) = s(x)^{α₀+α₁+(n-1)α*}`.
pub fn running_max_cdf(x: f64, n: usize, p: &ProcessParams) -> f64 {
    if n == 0 {
        return 1.0;
    }
    if x <= 0.0 {
        return 0.0;
    }
    let exponent = p.alpha0() + p.alpha1() + (n - 1) as f64 * p.alpha_star();
    (exponent * log1mexp(p.lambda() * x)).exp()
}

/// `P(min(X_1..X_n) >= x)` by the one-step factorization
/// `P(X_2 >= x | X_1 >= x)^{n-1} · P(X_1 >= x)`.
///
/// Exact for `n <= 2`. The process is 1-dependent rather than Markov, so for
/// longer runs this is an approximation; [`running_min_monte_carlo`] reports
/// how far off it is.
pub fn running_min_survival(x: f64, n: usize, p: &ProcessParams) -> f64 {
    if n == 0 || x <= 0.0 {
        return 1.0;
    }
    let f = ge_cdf(x, &p.marginal());
    let survive = 1.0 - f;
    if survive <= 0.0 {
        return 0.0;
    }
    let s_star = (p.alpha_star() * log1mexp(p.lambda() * x)).exp();
    let stay = 1.0 - f * (1.0 - s_star) / survive;
    stay.powi((n - 1) as i32) * survive
}

/// Closed form against a simulation estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonteCarloComparison {
    pub formula: f64,
    pub estimate: f64,
    /// Binomial standard error of `estimate`.
    pub std_error: f64,
    pub paths: usize,
}

impl MonteCarloComparison {
    fn from_hits(formula: f64, hits: usize, paths: usize) -> Self {
        let est = hits as f64 / paths as f64;
        MonteCarloComparison {
            formula,
            estimate: est,
            std_error: (est * (1.0 - est) / paths as f64).sqrt(),
            paths,
        }
    }

    pub fn deviation(&self) -> f64 {
        (self.formula - self.estimate).abs()
    }

    /// Deviation in units of the binomial standard error evaluated at the
    /// closed-form probability.
    pub fn sigmas(&self) -> f64 {
        let se = (self.formula * (1.0 - self.formula) / self.paths as f64).sqrt();
        if se == 0.0 {
            if self.deviation() == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            self.deviation() / se
        }
    }
}

fn path_extremes<R: Rng + ?Sized>(rng: &mut R, n: usize, p: &ProcessParams) -> (f64, f64) {
    let mut prev: f64 = rng.sample(Open01);
    let (mut hi, mut lo) = (f64::NEG_INFINITY, f64::INFINITY);
    for _ in 0..n {
        let u: f64 = rng.sample(Open01);
        let x = quantile_of_log(u.ln(), p.alpha0(), p.lambda())
            .max(quantile_of_log(prev.ln(), p.alpha1(), p.lambda()));
        hi = hi.max(x);
        lo = lo.min(x);
        prev = u;
    }
    (hi, lo)
}

pub fn running_max_monte_carlo(
    x: f64,
    n: usize,
    p: &ProcessParams,
    paths: usize,
    seed: u64,
) -> MonteCarloComparison {
    let mut rng = rng::seeded(seed);
    let hits = (0..paths)
        .filter(|_| path_extremes(&mut rng, n, p).0 <= x)
        .count();
    MonteCarloComparison::from_hits(running_max_cdf(x, n, p), hits, paths)
}

pub fn running_min_monte_carlo(
    x: f64,
    n: usize,
    p: &ProcessParams,
    paths: usize,
    seed: u64,
) -> MonteCarloComparison {
    let mut rng = rng::seeded(seed);
    let hits = (0..paths)
        .filter(|_| path_extremes(&mut rng, n, p).1 >= x)
        .count();
    MonteCarloComparison::from_hits(running_min_survival(x, n, p), hits, paths)
}

/// Law of `N = min{k : X_k > L}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StoppingLaw {
    level: f64,
    /// `1 - e^{-λL}`
    p: f64,
    alpha_sum: f64,
    alpha_star: f64,
}

impl StoppingLaw {
    pub fn new(level: f64, params: &ProcessParams) -> Result<Self> {
        if !(level > 0.0 && level.is_finite()) {
            return Err(Error::param("level", format!("must be > 0, got {level}")));
        }
        Ok(StoppingLaw {
            level,
            p: -(-params.lambda() * level).exp_m1(),
            alpha_sum: params.alpha0() + params.alpha1(),
            alpha_star: params.alpha_star(),
        })
    }

    pub fn level(&self) -> f64 {
        self.level
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn alpha_star(&self) -> f64 {
        self.alpha_star
    }

    /// `P(N <= k-1 fails)`: probability the first `k` values stay below `L`.
    fn stay(&self, k: usize) -> f64 {
        if k == 0 {
            1.0
        } else {
            self.p
                .powf(self.alpha_sum + (k - 1) as f64 * self.alpha_star)
        }
    }

    /// `P(N = k)`; zero for `k = 0`.
    pub fn pmf(&self, k: usize) -> f64 {
        match k {
            0 => 0.0,
            1 => 1.0 - self.stay(1),
            _ => self.stay(k - 1) * (1.0 - self.p.powf(self.alpha_star)),
        }
    }

    /// Radius of convergence `p^{-α*}` of the generating function.
    pub fn pgf_radius(&self) -> f64 {
        self.p.powf(-self.alpha_star)
    }

    /// `G(s) = s(1 - p^a) + s²(p^a - p^{a+α*}) / (1 - p^{α*} s)` with `a = α₀+α₁`.
    pub fn pgf(&self, s: f64) -> Result<f64> {
        self.check_s(s)?;
        let q = self.p.powf(self.alpha_star);
        let pa = self.stay(1);
        Ok(s * (1.0 - pa) + s * s * pa * (1.0 - q) / (1.0 - q * s))
    }

    /// `G'(s)`.
    pub fn pgf_derivative(&self, s: f64) -> Result<f64> {
        self.check_s(s)?;
        let q = self.p.powf(self.alpha_star);
        let pa = self.stay(1);
        let d = 1.0 - q * s;
        Ok((1.0 - pa) + pa * (1.0 - q) * (2.0 * s * d + q * s * s) / (d * d))
    }

    /// `E[N] = G'(1)`.
    pub fn mean(&self) -> f64 {
        self.pgf_derivative(1.0).expect("1 lies inside the radius")
    }

    fn check_s(&self, s: f64) -> Result<()> {
        if s.abs() < self.pgf_radius() {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "|s| = {} outside radius {}",
                s.abs(),
                self.pgf_radius()
            )))
        }
    }

    /// Total-variation distance between this law and empirical counts, where
    /// `counts[k - 1]` is the number of paths that stopped at `k`.
    pub fn total_variation(&self, counts: &[u64]) -> f64 {
        let total: u64 = counts.iter().sum();
        let mut tv = 0.0;
        let mut covered = 0.0;
        for (i, &c) in counts.iter().enumerate() {
            let pk = self.pmf(i + 1);
            covered += pk;
            tv += (c as f64 / total as f64 - pk).abs();
        }
        // mass of the PMF beyond the longest observed path
        tv += (1.0 - covered).max(0.0);
        0.5 * tv
    }
}

/// Simulates `paths` first-passage times above `level`; `counts[k - 1]`
/// holds how many stopped at step `k`.
pub fn stopping_monte_carlo(level: f64, p: &ProcessParams, paths: usize, seed: u64) -> Vec<u64> {
    let mut rng = rng::seeded(seed);
    let mut counts: Vec<u64> = Vec::new();
    for _ in 0..paths {
        let mut prev: f64 = rng.sample(Open01);
        let mut k = 0usize;
        loop {
            k += 1;
            let u: f64 = rng.sample(Open01);
            let x = quantile_of_log(u.ln(), p.alpha0(), p.lambda())
                .max(quantile_of_log(prev.ln(), p.alpha1(), p.lambda()));
            prev = u;
            if x > level {
                break;
            }
        }
        if counts.len() < k {
            counts.resize(k, 0);
        }
        counts[k - 1] += 1;
    }
    counts
}
