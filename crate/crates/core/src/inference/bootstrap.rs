use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{fit, FitOptions, FitReport, Interval};
use crate::error::{Error, Result};
use crate::geprocess::{simulate_with, ProcessParams};
use crate::rng;

/// Type-7 (linear interpolation) sample quantile of sorted data.
pub fn percentile(sorted: &[f64], q: f64) -> f64 {
    let n = sorted.len();
    if n == 1 {
        return sorted[0];
    }
    let h = q.clamp(0.0, 1.0) * (n - 1) as f64;
    let lo = h.floor() as usize;
    let hi = (lo + 1).min(n - 1);
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

/// Parametric bootstrap percentile intervals.
///
/// Simulates `replicates` paths of the data's length from `fitted`'s
/// estimates, refits each with the same model and options, and returns a
/// copy of `fitted` carrying the intervals. Replicate `i` draws from
/// [`rng::replicate`]`(seed, i)`, so the result does not depend on thread
/// count. Failed refits are dropped and counted; more than 10% failing is an
/// error. An interval that misses its point estimate is stretched to reach
/// it.
pub fn bootstrap_ci(
    data: &[f64],
    fitted: &FitReport,
    replicates: usize,
    level: f64,
    seed: u64,
    opts: &FitOptions,
) -> Result<FitReport> {
    if replicates < 100 {
        return Err(Error::param("B", format!("need at least 100 replicates, got {replicates}")));
    }
    if !(level > 0.0 && level < 1.0) {
        return Err(Error::param("level", format!("must lie in (0, 1), got {level}")));
    }
    let n = data.len();
    let refit = FitOptions {
        keep_grid: false,
        init: None,
        ..opts.clone()
    };
    let params = fitted.estimates;
    let model = fitted.model;
    let results: Vec<Option<ProcessParams>> = (0..replicates)
        .into_par_iter()
        .map(|i| {
            let mut r = rng::replicate(seed, i as u64);
            let path = simulate_with(&mut r, n, &params);
            fit(path.values(), model, &refit).ok().map(|f| f.estimates)
        })
        .collect();
    let ok: Vec<ProcessParams> = results.into_iter().flatten().collect();
    let failed = replicates - ok.len();
    if failed * 10 > replicates {
        return Err(Error::BootstrapFailures {
            failed,
            total: replicates,
        });
    }

    let (qlo, qhi) = ((1.0 - level) / 2.0, (1.0 + level) / 2.0);
    let interval = |get: fn(&ProcessParams) -> f64, point: f64| {
        let mut v: Vec<f64> = ok.iter().map(get).collect();
        v.sort_by(f64::total_cmp);
        Interval {
            lower: percentile(&v, qlo).min(point),
            upper: percentile(&v, qhi).max(point),
        }
    };
    let mut ci = BTreeMap::new();
    ci.insert("alpha0".to_string(), interval(ProcessParams::alpha0, params.alpha0()));
    ci.insert("alpha1".to_string(), interval(ProcessParams::alpha1, params.alpha1()));
    ci.insert("lambda".to_string(), interval(ProcessParams::lambda, params.lambda()));

    let mut out = fitted.clone();
    out.ci = Some(ci);
    out.replicates = Some(replicates);
    out.level = Some(level);
    out.seed = Some(seed);
    out.failed_replicates = Some(failed);
    Ok(out)
}
