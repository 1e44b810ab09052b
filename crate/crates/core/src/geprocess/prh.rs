//! Proportional-reversed-hazard generalization: any baseline `F₀` raised to
//! the shapes α₀ and α₁ in place of the exponential.

use rand::distr::Open01;
use rand::Rng;

use crate::gedist::{check_positive, quantile_of_log};
use crate::error::Result;
use crate::rng;
use crate::series::Series;

/// Inverse of a baseline distribution function `F₀`.
///
/// Any strictly increasing `Fn(f64) -> f64` on `(0, 1)` qualifies.
pub trait BaseQuantile {
    fn quantile(&self, w: f64) -> f64;

    /// `F₀⁻¹(u^{1/shape})`. Override when a more accurate route exists.
    fn quantile_of_power(&self, u: f64, shape: f64) -> f64 {
        self.quantile(u.powf(1.0 / shape))
    }
}

impl<F: Fn(f64) -> f64> BaseQuantile for F {
    fn quantile(&self, w: f64) -> f64 {
        self(w)
    }
}

/// Exponential baseline `F₀(t) = 1 - e^{-λt}`; recovers the GE process.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentialBase {
    lambda: f64,
}

impl ExponentialBase {
    pub fn new(lambda: f64) -> Self {
        ExponentialBase { lambda }
    }
}

impl BaseQuantile for ExponentialBase {
    fn quantile(&self, w: f64) -> f64 {
        -(-w).ln_1p() / self.lambda
    }

    fn quantile_of_power(&self, u: f64, shape: f64) -> f64 {
        quantile_of_log(u.ln(), shape, self.lambda)
    }
}

/// `X_k = max{F₀⁻¹(U_k^{1/α₀}), F₀⁻¹(U_{k-1}^{1/α₁})}`, k = 1..n.
pub fn prh_simulate<B: BaseQuantile + ?Sized>(
    n: usize,
    alpha0: f64,
    alpha1: f64,
    base: &B,
    seed: u64,
) -> Result<Series> {
    check_positive("alpha0", alpha0)?;
    check_positive("alpha1", alpha1)?;
    let mut rng = rng::seeded(seed);
    Ok(prh_simulate_with(&mut rng, n, alpha0, alpha1, base))
}

pub fn prh_simulate_with<R, B>(rng: &mut R, n: usize, alpha0: f64, alpha1: f64, base: &B) -> Series
where
    R: Rng + ?Sized,
    B: BaseQuantile + ?Sized,
{
    let mut values = Vec::with_capacity(n);
    let mut prev: f64 = rng.sample(Open01);
    for _ in 0..n {
        let u: f64 = rng.sample(Open01);
        let own = base.quantile_of_power(u, alpha0);
        let lagged = base.quantile_of_power(prev, alpha1);
        values.push(own.max(lagged));
        prev = u;
    }
    Series::new(values)
}
