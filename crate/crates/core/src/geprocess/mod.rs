//! The stationary GE process
//!
//! `X_k = max{Q₀(U_k), Q₁(U_{k-1})}` where the `U_k` are i.i.d. uniform and
//! `Q_i(u) = -ln(1 - u^{1/α_i}) / λ`. Each innovation feeds two consecutive
//! observations, so the sequence is 1-dependent with GE(α₀+α₁, λ) marginals
//! and a pair law that puts positive mass on the curve `y = γ(x)`.

mod copula;
mod extremes;
pub(crate) mod joint;
mod prh;

pub use copula::{copula, empirical_kendall_tau, empirical_spearman_rho, kendall_tau, spearman_rho};
pub use extremes::{
    running_max_cdf, running_max_monte_carlo, running_min_monte_carlo, running_min_survival,
    stopping_monte_carlo, MonteCarloComparison, StoppingLaw,
};
pub use joint::{
    classify_pair, curve_gamma, curve_gamma_inverse, curve_gamma_slope, joint_cdf_lag,
    pair_density, pair_log_density, PairRegion, SingularDecomposition, DEFAULT_TIE_TOL,
};
pub use prh::{prh_simulate, prh_simulate_with, BaseQuantile, ExponentialBase};

use rand::distr::Open01;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gedist::{check_positive, quantile_of_log, GEParams};
use crate::rng;
use crate::series::Series;

/// Shape pair and common scale of a GE process.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawProcess")]
pub struct ProcessParams {
    alpha0: f64,
    alpha1: f64,
    lambda: f64,
}

#[derive(Deserialize)]
struct RawProcess {
    alpha0: f64,
    alpha1: f64,
    lambda: f64,
}

impl TryFrom<RawProcess> for ProcessParams {
    type Error = Error;
    fn try_from(r: RawProcess) -> Result<Self> {
        ProcessParams::new(r.alpha0, r.alpha1, r.lambda)
    }
}

impl ProcessParams {
    pub fn new(alpha0: f64, alpha1: f64, lambda: f64) -> Result<Self> {
        check_positive("alpha0", alpha0)?;
        check_positive("alpha1", alpha1)?;
        check_positive("lambda", lambda)?;
        Ok(ProcessParams {
            alpha0,
            alpha1,
            lambda,
        })
    }

    /// The equal-shape process α₀ = α₁ = α.
    pub fn equal(alpha: f64, lambda: f64) -> Result<Self> {
        Self::new(alpha, alpha, lambda)
    }

    /// Builds from γ = α₀/α₁, α₁ and λ.
    pub fn from_gamma(gamma: f64, alpha1: f64, lambda: f64) -> Result<Self> {
        check_positive("gamma", gamma)?;
        Self::new(gamma * alpha1, alpha1, lambda)
    }

    pub fn alpha0(&self) -> f64 {
        self.alpha0
    }

    pub fn alpha1(&self) -> f64 {
        self.alpha1
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// δ = α₀/(α₀+α₁), the copula parameter.
    pub fn delta(&self) -> f64 {
        self.alpha0 / (self.alpha0 + self.alpha1)
    }

    /// γ = α₀/α₁.
    pub fn gamma(&self) -> f64 {
        self.alpha0 / self.alpha1
    }

    /// max(α₀, α₁): the exponent carried by each shared innovation in
    /// running-maximum and stopping-time laws.
    pub fn alpha_star(&self) -> f64 {
        self.alpha0.max(self.alpha1)
    }

    /// The GE(α₀+α₁, λ) marginal.
    pub fn marginal(&self) -> GEParams {
        GEParams::new(self.alpha0 + self.alpha1, self.lambda)
            .expect("sum of positive shapes is positive")
    }
}

/// A simulated path together with which innovation attained each maximum.
#[derive(Debug, Clone, PartialEq)]
pub struct TracedPath {
    pub series: Series,
    /// `current[k]` is true when `X_k` came from its own innovation `U_k`
    /// (shape α₀) rather than from the lagged `U_{k-1}` (shape α₁).
    pub current: Vec<bool>,
}

impl TracedPath {
    /// Indices `k` (0-based) where the pair `(X_k, X_{k+1})` lies on the
    /// singular curve: `X_k` took `U_k` and `X_{k+1}` took `U_k` as well.
    pub fn singular_pairs(&self) -> Vec<usize> {
        (0..self.current.len().saturating_sub(1))
            .filter(|&k| self.current[k] && !self.current[k + 1])
            .collect()
    }
}

/// Simulates `X_1..X_n` from innovations `U_0..U_n`.
pub fn simulate(n: usize, p: &ProcessParams, seed: u64) -> Series {
    let mut rng = rng::seeded(seed);
    simulate_with(&mut rng, n, p)
}

pub fn simulate_with<R: Rng + ?Sized>(rng: &mut R, n: usize, p: &ProcessParams) -> Series {
    prh_simulate_with(rng, n, p.alpha0, p.alpha1, &ExponentialBase::new(p.lambda))
}

/// Like [`simulate`] but also records which innovation won each maximum.
pub fn simulate_traced(n: usize, p: &ProcessParams, seed: u64) -> TracedPath {
    let mut rng = rng::seeded(seed);
    let mut values = Vec::with_capacity(n);
    let mut current = Vec::with_capacity(n);
    let mut prev: f64 = rng.sample(Open01);
    for _ in 0..n {
        let u: f64 = rng.sample(Open01);
        let own = quantile_of_log(u.ln(), p.alpha0, p.lambda);
        let lagged = quantile_of_log(prev.ln(), p.alpha1, p.lambda);
        current.push(own >= lagged);
        values.push(own.max(lagged));
        prev = u;
    }
    TracedPath {
        series: Series::new(values),
        current,
    }
}
