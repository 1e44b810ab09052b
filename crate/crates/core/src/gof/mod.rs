//! Model checking for a fitted GE process.
//!
//! A 1-dependent sequence splits into two i.i.d. subsequences (odd and even
//! positions). Each is tested for independence (runs test) and for a GE
//! marginal (KS against its own fit). Serial dependence of the full series is
//! compared with autocorrelation bands simulated from the fitted process.

mod acf;
mod ks;
mod runs;

pub use acf::{acf, acf_null_band};
pub use ks::{kolmogorov_survival, ks_p_value, ks_statistic, ks_test_ge, KsPValue, KsResult};
pub use runs::{runs_test, RunsResult};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gedist::{ge_fit_iid, IidFit};
use crate::geprocess::ProcessParams;
use crate::series::Series;

/// Elements at odd and even 1-based positions, in order.
pub fn split_subsequences(s: &Series) -> Result<(Series, Series)> {
    if s.len() < 4 {
        return Err(Error::Domain(format!(
            "need at least 4 observations to split, got {}",
            s.len()
        )));
    }
    let v = s.values();
    let odd = v.iter().step_by(2).copied().collect();
    let even = v.iter().skip(1).step_by(2).copied().collect();
    Ok((
        Series::with_transform(odd, s.transform()),
        Series::with_transform(even, s.transform()),
    ))
}

#[derive(Debug, Clone, PartialEq)]
pub struct GofOptions {
    pub significance: f64,
    pub lags: Vec<usize>,
    /// Upper quantile of the simulated autocorrelation band.
    pub band_quantile: f64,
    pub band_sims: usize,
    pub ks_method: KsPValue,
    pub seed: u64,
}

impl Default for GofOptions {
    fn default() -> Self {
        GofOptions {
            significance: 0.05,
            lags: vec![1, 2],
            band_quantile: 0.9,
            band_sims: 5000,
            ks_method: KsPValue::EffectiveN,
            seed: 0,
        }
    }
}

/// Tests applied to one subsequence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SubsequenceCheck {
    pub n: usize,
    pub fit: IidFit,
    pub ks: KsResult,
    pub runs: RunsResult,
}

impl SubsequenceCheck {
    fn run(data: &[f64], method: KsPValue) -> Result<Self> {
        let fit = ge_fit_iid(data, None)?;
        Ok(SubsequenceCheck {
            n: data.len(),
            ks: ks_test_ge(data, &fit.params, method)?,
            runs: runs_test(data)?,
            fit,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LagCheck {
    pub lag: usize,
    pub acf: f64,
    /// Simulated upper percentile point under the fitted process.
    pub upper: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    /// Neither KS nor runs test rejects on the odd subsequence.
    pub odd_iid_ge: bool,
    pub even_iid_ge: bool,
    /// Every lag m ≥ 2 autocorrelation lies below its band.
    pub higher_lags_in_band: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GofReport {
    pub odd: SubsequenceCheck,
    pub even: SubsequenceCheck,
    pub lags: Vec<LagCheck>,
    pub process: ProcessParams,
    pub band_quantile: f64,
    pub band_sims: usize,
    pub significance: f64,
    pub seed: u64,
    /// KS p-values treat the subsequence fits as known parameters and are
    /// therefore conservative.
    pub ks_parameters_estimated: bool,
    pub verdict: Verdict,
}

impl GofReport {
    pub fn lag(&self, lag: usize) -> Option<&LagCheck> {
        self.lags.iter().find(|l| l.lag == lag)
    }
}

/// Runs the subsequence tests on `series` and the autocorrelation band under
/// `process` (normally the fit to the same series).
pub fn goodness_of_fit(series: &Series, process: &ProcessParams, opts: &GofOptions) -> Result<GofReport> {
    if !(opts.significance > 0.0 && opts.significance < 1.0) {
        return Err(Error::param("significance", "must lie in (0, 1)"));
    }
    let (odd, even) = split_subsequences(series)?;
    let odd = SubsequenceCheck::run(odd.values(), opts.ks_method)?;
    let even = SubsequenceCheck::run(even.values(), opts.ks_method)?;

    let mut lags = opts.lags.clone();
    lags.sort_unstable();
    lags.dedup();
    let n = series.len();
    let bands = acf_null_band(process, n, &lags, opts.band_quantile, opts.band_sims, opts.seed)?;
    let lags: Vec<LagCheck> = lags
        .iter()
        .zip(bands)
        .map(|(&lag, upper)| {
            Ok(LagCheck {
                lag,
                acf: acf(series.values(), lag)?,
                upper,
            })
        })
        .collect::<Result<_>>()?;

    let passes = |c: &SubsequenceCheck| {
        c.ks.p_value > opts.significance && c.runs.p_value > opts.significance
    };
    let verdict = Verdict {
        odd_iid_ge: passes(&odd),
        even_iid_ge: passes(&even),
        higher_lags_in_band: lags.iter().filter(|l| l.lag >= 2).all(|l| l.acf <= l.upper),
    };
    Ok(GofReport {
        odd,
        even,
        lags,
        process: *process,
        band_quantile: opts.band_quantile,
        band_sims: opts.band_sims,
        significance: opts.significance,
        seed: opts.seed,
        ks_parameters_estimated: true,
        verdict,
    })
}
