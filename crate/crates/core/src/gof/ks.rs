use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gedist::{ge_cdf, GEParams};

/// How the KS p-value is read off the limiting Kolmogorov law.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KsPValue {
    /// `P(K > √n·D)`.
    Asymptotic,
    /// `P(K > (√n + 0.12 + 0.11/√n)·D)`, Stephens' small-sample correction.
    EffectiveN,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KsResult {
    pub distance: f64,
    pub p_value: f64,
    pub n: usize,
    pub method: KsPValue,
}

/// `sup |F̂ₙ - F|`, evaluated exactly at the order statistics.
pub fn ks_statistic<F: Fn(f64) -> f64>(data: &[f64], cdf: F) -> f64 {
    let mut x = data.to_vec();
    x.sort_by(f64::total_cmp);
    let n = x.len() as f64;
    x.iter()
        .enumerate()
        .map(|(i, &v)| {
            let f = cdf(v);
            ((i + 1) as f64 / n - f).max(f - i as f64 / n)
        })
        .fold(0.0, f64::max)
}

/// Survival function of the Kolmogorov distribution, `P(K > t)`.
pub fn kolmogorov_survival(t: f64) -> f64 {
    if t <= 0.0 {
        return 1.0;
    }
    if t < 1.18 {
        // Jacobi theta form converges fast for small t
        let c = std::f64::consts::PI * std::f64::consts::PI / (8.0 * t * t);
        let sum: f64 = (1..=20)
            .map(|k| {
                let m = (2 * k - 1) as f64;
                (-m * m * c).exp()
            })
            .sum();
        let cdf = (2.0 * std::f64::consts::PI).sqrt() / t * sum;
        (1.0 - cdf).clamp(0.0, 1.0)
    } else {
        let mut sum = 0.0;
        for k in 1..=100 {
            let kf = k as f64;
            let term = (-2.0 * kf * kf * t * t).exp();
            sum += if k % 2 == 1 { term } else { -term };
            if term < 1e-18 {
                break;
            }
        }
        (2.0 * sum).clamp(0.0, 1.0)
    }
}

/// One-sample KS test of `data` against GE(`p`).
///
/// The p-value treats `p` as known; when `p` was estimated from the same
/// data it is conservative.
pub fn ks_test_ge(data: &[f64], p: &GEParams, method: KsPValue) -> Result<KsResult> {
    if data.len() < 5 {
        return Err(Error::Domain(format!(
            "KS test needs at least 5 observations, got {}",
            data.len()
        )));
    }
    let distance = ks_statistic(data, |t| ge_cdf(t, p));
    let n = data.len();
    Ok(KsResult {
        distance,
        p_value: ks_p_value(distance, n, method),
        n,
        method,
    })
}

pub fn ks_p_value(distance: f64, n: usize, method: KsPValue) -> f64 {
    let rn = (n as f64).sqrt();
    let scale = match method {
        KsPValue::Asymptotic => rn,
        KsPValue::EffectiveN => rn + 0.12 + 0.11 / rn,
    };
    kolmogorov_survival(scale * distance)
}
