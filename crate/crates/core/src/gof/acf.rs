use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geprocess::{simulate_with, ProcessParams};
use crate::inference::percentile;
use crate::rng;

/// Mean-centred sample autocorrelation
/// `Σ (x_t - x̄)(x_{t+k} - x̄) / Σ (x_t - x̄)²`.
pub fn acf(series: &[f64], lag: usize) -> Result<f64> {
    let n = series.len();
    if lag == 0 || lag >= n {
        return Err(Error::Domain(format!("lag {lag} invalid for length {n}")));
    }
    let mean = series.iter().sum::<f64>() / n as f64;
    let denom: f64 = series.iter().map(|x| (x - mean) * (x - mean)).sum();
    if denom == 0.0 {
        return Err(Error::Degenerate("constant series has no autocorrelation".into()));
    }
    let num: f64 = series
        .windows(lag + 1)
        .map(|w| (w[0] - mean) * (w[lag] - mean))
        .sum();
    Ok(num / denom)
}

/// Upper `quantile` points of the sample autocorrelations at `lags` under the
/// GE process `p`, from `sims` simulated paths of length `n`. Path `i` uses
/// [`rng::replicate`]`(seed, i)`. Output is ordered like `lags`.
pub fn acf_null_band(
    p: &ProcessParams,
    n: usize,
    lags: &[usize],
    quantile: f64,
    sims: usize,
    seed: u64,
) -> Result<Vec<f64>> {
    if sims < 1000 {
        return Err(Error::param("sims", format!("need at least 1000, got {sims}")));
    }
    if !(quantile > 0.0 && quantile < 1.0) {
        return Err(Error::param("quantile", format!("must lie in (0, 1), got {quantile}")));
    }
    if let Some(&bad) = lags.iter().find(|&&l| l == 0 || l >= n) {
        return Err(Error::Domain(format!("lag {bad} invalid for length {n}")));
    }
    let draws: Vec<Vec<f64>> = (0..sims)
        .into_par_iter()
        .map(|i| {
            let mut r = rng::replicate(seed, i as u64);
            let path = simulate_with(&mut r, n, p);
            lags.iter()
                .map(|&l| acf(path.values(), l).unwrap_or(0.0))
                .collect()
        })
        .collect();
    Ok((0..lags.len())
        .map(|j| {
            let mut col: Vec<f64> = draws.iter().map(|d| d[j]).collect();
            col.sort_by(f64::total_cmp);
            percentile(&col, quantile)
        })
        .collect())
}
