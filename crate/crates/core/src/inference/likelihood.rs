//! Chain (pairwise) log-likelihood and its closed-form profile in the shape.
//!
//! For fixed `(γ, λ)` with `γ = α₀/α₁` the chain log-likelihood is
//! `c·ln α₁ + α₁·H(γ, λ) + R(γ, λ)`, where `c = n₁ + n₂ + 1` counts
//! two-dimensional pairs minus interior marginals. The shape therefore
//! profiles out as `α̂₁ = -c / H`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gedist::{ge_log_pdf, log1mexp};
use crate::geprocess::joint::{pair_log_density, region_from_logs};
use crate::geprocess::{PairRegion, ProcessParams};

pub(crate) fn validate(data: &[f64], min_len: usize) -> Result<()> {
    if data.len() < min_len {
        return Err(Error::Domain(format!(
            "need at least {min_len} observations, got {}",
            data.len()
        )));
    }
    if let Some((i, x)) = data
        .iter()
        .enumerate()
        .find(|(_, &x)| !(x > 0.0 && x.is_finite()))
    {
        return Err(Error::Domain(format!(
            "observation {} is {x}; all values must be positive",
            i + 1
        )));
    }
    Ok(())
}

/// `Σ ln f(x_i, x_{i+1}) - Σ_{i=2}^{n-1} ln f(x_i)` with the pair density
/// taken on its singular branch for pairs on the curve (within `tol`).
pub fn chain_loglik(data: &[f64], p: &ProcessParams, tol: f64) -> Result<f64> {
    validate(data, 2)?;
    let marginal = p.marginal();
    let pairs: f64 = data
        .windows(2)
        .map(|w| pair_log_density(w[0], w[1], p, tol).1)
        .sum();
    let interior: f64 = data[1..data.len() - 1]
        .iter()
        .map(|&x| ge_log_pdf(x, &marginal))
        .sum();
    Ok(pairs - interior)
}

/// Partition of the consecutive pairs into `A₁` (below the curve in the
/// `S₁` sense), `A₂` and the tie set `A₀`. Indices are 0-based pair starts.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TieSets {
    pub a0: Vec<usize>,
    pub a1: Vec<usize>,
    pub a2: Vec<usize>,
}

impl TieSets {
    /// Membership compares `γ ln s(x_i)` with `ln s(x_{i+1})`, the same rule
    /// [`crate::geprocess::classify_pair`] applies.
    pub fn classify(data: &[f64], gamma: f64, lambda: f64, tol: f64) -> Self {
        let mut sets = TieSets::default();
        for (i, w) in data.windows(2).enumerate() {
            let a = gamma * log1mexp(lambda * w[0]);
            let b = log1mexp(lambda * w[1]);
            match region_from_logs(a, b, tol) {
                PairRegion::C => sets.a0.push(i),
                PairRegion::S1 => sets.a1.push(i),
                PairRegion::S2 => sets.a2.push(i),
            }
        }
        sets
    }

    pub fn for_params(data: &[f64], p: &ProcessParams, tol: f64) -> Self {
        Self::classify(data, p.gamma(), p.lambda(), tol)
    }

    pub fn n0(&self) -> usize {
        self.a0.len()
    }

    pub fn n1(&self) -> usize {
        self.a1.len()
    }

    pub fn n2(&self) -> usize {
        self.a2.len()
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct ProfileTerms {
    pub count: f64,
    pub slope: f64,
    pub rest: f64,
}

impl ProfileTerms {
    pub fn alpha1(&self) -> Option<f64> {
        if self.slope < 0.0 && self.slope.is_finite() {
            Some(-self.count / self.slope)
        } else {
            None
        }
    }

    pub fn value(&self) -> f64 {
        match self.alpha1() {
            Some(a) => self.count * a.ln() - self.count + self.rest,
            None => f64::NEG_INFINITY,
        }
    }

    #[cfg(test)]
    pub fn at(&self, alpha1: f64) -> f64 {
        self.count * alpha1.ln() + alpha1 * self.slope + self.rest
    }
}

/// Reusable evaluator; caches `ln s(λ x_i)` for the most recent `λ`.
pub(crate) struct Profiler<'a> {
    data: &'a [f64],
    tol: f64,
    lambda: f64,
    log_s: Vec<f64>,
}

impl<'a> Profiler<'a> {
    pub fn new(data: &'a [f64], tol: f64) -> Self {
        Profiler {
            data,
            tol,
            lambda: f64::NAN,
            log_s: vec![0.0; data.len()],
        }
    }

    fn fill(&mut self, lambda: f64) {
        if lambda != self.lambda {
            for (l, &x) in self.log_s.iter_mut().zip(self.data) {
                *l = log1mexp(lambda * x);
            }
            self.lambda = lambda;
        }
    }

    pub fn terms(&mut self, gamma: f64, lambda: f64) -> ProfileTerms {
        self.fill(lambda);
        let x = self.data;
        let ls = &self.log_s;
        let n = x.len();
        let ln_lam = lambda.ln();
        let ln_g = gamma.ln();
        let ln_1g = gamma.ln_1p();
        let (mut count, mut slope, mut rest) = (0.0, 0.0, 0.0);
        for i in 0..n - 1 {
            let (lx, ly) = (ls[i], ls[i + 1]);
            match region_from_logs(gamma * lx, ly, self.tol) {
                PairRegion::S1 => {
                    count += 2.0;
                    slope += (1.0 + gamma) * lx + gamma * ly;
                    rest += ln_g + ln_1g + 2.0 * ln_lam - lambda * (x[i] + x[i + 1]) - lx - ly;
                }
                PairRegion::S2 => {
                    count += 2.0;
                    slope += lx + (1.0 + gamma) * ly;
                    rest += ln_1g + 2.0 * ln_lam - lambda * (x[i] + x[i + 1]) - lx - ly;
                }
                PairRegion::C => {
                    count += 1.0;
                    slope += (1.0 + gamma + gamma * gamma) * lx;
                    rest += ln_lam - gamma * lx + (-(gamma * lx).exp_m1()).ln();
                }
            }
        }
        for i in 1..n.saturating_sub(1) {
            count -= 1.0;
            slope -= (1.0 + gamma) * ls[i];
            rest -= ln_1g + ln_lam - lambda * x[i] - ls[i];
        }
        ProfileTerms { count, slope, rest }
    }

    pub fn value(&mut self, gamma: f64, lambda: f64) -> f64 {
        if !(gamma > 0.0 && lambda > 0.0 && gamma.is_finite() && lambda.is_finite()) {
            return f64::NEG_INFINITY;
        }
        self.terms(gamma, lambda).value()
    }
}

fn checked_terms(gamma: f64, lambda: f64, data: &[f64], tol: f64) -> Result<ProfileTerms> {
    validate(data, 2)?;
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::param("lambda", format!("must be > 0, got {lambda}")));
    }
    if !(gamma > 0.0 && gamma.is_finite()) {
        return Err(Error::param("gamma", format!("must be > 0, got {gamma}")));
    }
    let terms = Profiler::new(data, tol).terms(gamma, lambda);
    if terms.alpha1().is_none() {
        return Err(Error::Degenerate(
            "shape has no finite maximizer at this (gamma, lambda)".into(),
        ));
    }
    Ok(terms)
}

fn profile_alpha(gamma: f64, lambda: f64, data: &[f64], tol: f64) -> Result<f64> {
    Ok(checked_terms(gamma, lambda, data, tol)?
        .alpha1()
        .expect("checked above"))
}

/// α̂(λ) for the equal-shape model.
pub fn profile_alpha_case1(lambda: f64, data: &[f64], tol: f64) -> Result<f64> {
    profile_alpha(1.0, lambda, data, tol)
}

/// α̂₁(γ, λ) for the unequal-shape model.
pub fn profile_alpha1_case2(gamma: f64, lambda: f64, data: &[f64], tol: f64) -> Result<f64> {
    profile_alpha(gamma, lambda, data, tol)
}

/// `h(λ)`: the equal-shape log-likelihood at `(α̂(λ), λ)`.
pub fn profile_loglik_case1(lambda: f64, data: &[f64], tol: f64) -> Result<f64> {
    profile_loglik_case2(1.0, lambda, data, tol)
}

/// The unequal-shape log-likelihood at `(γ, α̂₁(γ, λ), λ)`.
pub fn profile_loglik_case2(gamma: f64, lambda: f64, data: &[f64], tol: f64) -> Result<f64> {
    Ok(checked_terms(gamma, lambda, data, tol)?.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geprocess::{simulate, DEFAULT_TIE_TOL};

    #[test]
    fn terms_reproduce_chain_loglik() {
        for (params, seed) in [
            (ProcessParams::equal(2.0, 1.0).unwrap(), 1),
            (ProcessParams::new(2.0, 3.0, 0.7).unwrap(), 2),
            (ProcessParams::new(0.6, 1.4, 2.0).unwrap(), 3),
        ] {
            let x = simulate(60, &params, seed);
            let mut prof = Profiler::new(x.values(), DEFAULT_TIE_TOL);
            for &(g, l) in &[(1.0, 1.0), (0.7, 0.8), (params.gamma(), params.lambda())] {
                let t = prof.terms(g, l);
                for &a1 in &[0.5, 1.0, 2.5] {
                    let direct = chain_loglik(
                        x.values(),
                        &ProcessParams::from_gamma(g, a1, l).unwrap(),
                        DEFAULT_TIE_TOL,
                    )
                    .unwrap();
                    assert!((t.at(a1) - direct).abs() < 1e-9 * direct.abs().max(1.0));
                }
            }
        }
    }

    #[test]
    fn rejects_nonpositive() {
        let p = ProcessParams::equal(1.0, 1.0).unwrap();
        assert!(chain_loglik(&[1.0, 0.0, 2.0], &p, DEFAULT_TIE_TOL).is_err());
        assert!(chain_loglik(&[1.0], &p, DEFAULT_TIE_TOL).is_err());
    }
}
