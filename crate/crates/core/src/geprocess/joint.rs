//! Bivariate laws of `(X_n, X_{n+m})`.
//!
//! Throughout, `s(t) = 1 - e^{-λt}` and every quantity is assembled from
//! `ln s(t)` so that large shapes cannot underflow intermediate powers.

use serde::{Deserialize, Serialize};

use super::ProcessParams;
use crate::gedist::{ge_cdf, log1mexp};

/// Relative tolerance used to decide that a pair sits on the curve `C`.
pub const DEFAULT_TIE_TOL: f64 = 1e-9;

/// Which piece of the pair support a point belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairRegion {
    /// `s(x)^{α₀} < s(y)^{α₁}`
    S1,
    /// `s(x)^{α₀} > s(y)^{α₁}`
    S2,
    /// `s(x)^{α₀} = s(y)^{α₁}`, the singular curve `y = γ(x)`.
    C,
}

#[inline]
pub(crate) fn region_from_logs(a: f64, b: f64, tol: f64) -> PairRegion {
    if a == b || (a - b).abs() <= tol * a.abs().max(b.abs()) {
        PairRegion::C
    } else if a < b {
        PairRegion::S1
    } else {
        PairRegion::S2
    }
}

#[inline]
fn log_s(t: f64, lambda: f64) -> f64 {
    if t > 0.0 {
        log1mexp(lambda * t)
    } else {
        f64::NEG_INFINITY
    }
}

/// Classifies `(x, y)` by comparing `α₀ ln s(x)` with `α₁ ln s(y)`.
///
/// `tol` is relative; `0.0` demands bit equality.
pub fn classify_pair(x: f64, y: f64, p: &ProcessParams, tol: f64) -> PairRegion {
    let a = p.alpha0() * log_s(x, p.lambda());
    let b = p.alpha1() * log_s(y, p.lambda());
    region_from_logs(a, b, tol)
}

/// `P(X_n <= x, X_{n+m} <= y)`.
///
/// Lags of two or more factor into the marginals; lag one is
/// `s(x)^{α₁} s(y)^{α₀} min{s(x)^{α₀}, s(y)^{α₁}}`. Lag zero returns the
/// diagonal law `F(min(x, y))`.
pub fn joint_cdf_lag(x: f64, y: f64, m: usize, p: &ProcessParams) -> f64 {
    if x <= 0.0 || y <= 0.0 {
        return 0.0;
    }
    let marginal = p.marginal();
    match m {
        0 => ge_cdf(x.min(y), &marginal),
        1 => {
            let lx = log_s(x, p.lambda());
            let ly = log_s(y, p.lambda());
            let g = (p.alpha0() * lx).min(p.alpha1() * ly);
            (p.alpha1() * lx + p.alpha0() * ly + g).exp()
        }
        _ => ge_cdf(x, &marginal) * ge_cdf(y, &marginal),
    }
}

/// The curve `C`: `γ(t) = -ln(1 - s(t)^{α₀/α₁}) / λ`.
pub fn curve_gamma(t: f64, p: &ProcessParams) -> f64 {
    let l = p.gamma() * log_s(t, p.lambda());
    -(-l.exp_m1()).ln() / p.lambda()
}

/// Inverse of [`curve_gamma`]: the `x` with `γ(x) = y`.
pub fn curve_gamma_inverse(y: f64, p: &ProcessParams) -> f64 {
    let l = log_s(y, p.lambda()) / p.gamma();
    -(-l.exp_m1()).ln() / p.lambda()
}

/// `γ'(t)`, positive everywhere.
pub fn curve_gamma_slope(t: f64, p: &ProcessParams) -> f64 {
    let lam = p.lambda();
    let ls = log_s(t, lam);
    let g = p.gamma();
    // γ' = g · s^{g-1} · e^{-λt} / (1 - s^g)
    let log_num = g.ln() + (g - 1.0) * ls - lam * t;
    let log_den = (-(g * ls).exp_m1()).ln();
    (log_num - log_den).exp()
}

/// Log of the pair density of `(X_n, X_{n+1})` against the mixed dominating
/// measure: 2-D Lebesgue off the curve, and on the curve the density `f₀(x)`
/// whose integral against `γ'(x) dx` gives the singular mass.
pub fn pair_log_density(x: f64, y: f64, p: &ProcessParams, tol: f64) -> (PairRegion, f64) {
    let (a0, a1, lam) = (p.alpha0(), p.alpha1(), p.lambda());
    let lx = log_s(x, lam);
    let ly = log_s(y, lam);
    let region = region_from_logs(a0 * lx, a1 * ly, tol);
    if x <= 0.0 || y <= 0.0 {
        return (region, f64::NEG_INFINITY);
    }
    let a = a0 + a1;
    let value = match region {
        PairRegion::S1 => {
            a0.ln() + a.ln() + 2.0 * lam.ln() - lam * (x + y)
                + (a - 1.0) * lx
                + (a0 - 1.0) * ly
        }
        PairRegion::S2 => {
            a1.ln() + a.ln() + 2.0 * lam.ln() - lam * (x + y)
                + (a1 - 1.0) * lx
                + (a - 1.0) * ly
        }
        PairRegion::C => singular_log_density(x, p),
    };
    (region, value)
}

/// `ln f₀(x) = ln α₁ + ln λ + ((K - α₀)/α₁) ln s(x) + ln(1 - s(x)^{α₀/α₁})`,
/// `K = α₀² + α₁² + α₀α₁`.
pub(crate) fn singular_log_density(x: f64, p: &ProcessParams) -> f64 {
    let (a0, a1, lam) = (p.alpha0(), p.alpha1(), p.lambda());
    let k = a0 * a0 + a1 * a1 + a0 * a1;
    let lx = log_s(x, lam);
    a1.ln() + lam.ln() + ((k - a0) / a1) * lx + (-(p.gamma() * lx).exp_m1()).ln()
}

pub fn pair_density(x: f64, y: f64, p: &ProcessParams, tol: f64) -> (PairRegion, f64) {
    let (r, l) = pair_log_density(x, y, p, tol);
    (r, l.exp())
}

/// Split of the lag-one joint CDF into absolutely continuous and singular
/// parts, `F = p·F_a + (1 - p)·F_s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingularDecomposition {
    params: ProcessParams,
    p: f64,
}

impl SingularDecomposition {
    pub fn new(params: &ProcessParams) -> Self {
        let (a0, a1) = (params.alpha0(), params.alpha1());
        let sq = a0 * a0 + a1 * a1;
        SingularDecomposition {
            params: *params,
            p: sq / (sq + a0 * a1),
        }
    }

    /// Mass of the absolutely continuous part.
    pub fn p(&self) -> f64 {
        self.p
    }

    fn pieces(&self, x: f64, y: f64) -> Option<(f64, f64)> {
        if x <= 0.0 || y <= 0.0 {
            return None;
        }
        let (a0, a1, lam) = (self.params.alpha0(), self.params.alpha1(), self.params.lambda());
        let lx = log_s(x, lam);
        let ly = log_s(y, lam);
        let log_g = (a0 * lx).min(a1 * ly);
        let log_joint = a1 * lx + a0 * ly + log_g;
        let k = a0 * a0 + a1 * a1 + a0 * a1;
        Some((log_joint, log_g * k / (a0 * a1)))
    }

    /// `F_s(x, y) = g(x, y)^{K/(α₀α₁)}`.
    pub fn singular_cdf(&self, x: f64, y: f64) -> f64 {
        self.pieces(x, y).map_or(0.0, |(_, ls)| ls.exp())
    }

    /// `F_a(x, y) = (K/(α₀²+α₁²))·s(x)^{α₁}s(y)^{α₀}g - (α₀α₁/(α₀²+α₁²))·g^{K/(α₀α₁)}`.
    pub fn absolutely_continuous_cdf(&self, x: f64, y: f64) -> f64 {
        let Some((lj, ls)) = self.pieces(x, y) else {
            return 0.0;
        };
        let (a0, a1) = (self.params.alpha0(), self.params.alpha1());
        let sq = a0 * a0 + a1 * a1;
        let k = sq + a0 * a1;
        (k / sq) * lj.exp() - (a0 * a1 / sq) * ls.exp()
    }

    /// `p·F_a + (1 - p)·F_s`.
    pub fn mixture_cdf(&self, x: f64, y: f64) -> f64 {
        self.p * self.absolutely_continuous_cdf(x, y)
            + (1.0 - self.p) * self.singular_cdf(x, y)
    }
}
