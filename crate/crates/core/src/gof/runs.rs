use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RunsResult {
    pub runs: usize,
    pub above: usize,
    pub below: usize,
    /// Continuity-corrected standardized run count (signed).
    pub z: f64,
    pub p_value: f64,
}

/// Wald-Wolfowitz runs test about the sample median.
///
/// Values equal to the median are dropped; the remaining above/below
/// sequence is scored with the normal approximation and a 0.5 continuity
/// correction. Two-sided.
pub fn runs_test(data: &[f64]) -> Result<RunsResult> {
    if data.len() < 10 {
        return Err(Error::Domain(format!(
            "runs test needs at least 10 observations, got {}",
            data.len()
        )));
    }
    let mut sorted = data.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len();
    let median = if n % 2 == 1 {
        sorted[n / 2]
    } else {
        0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
    };
    let signs: Vec<bool> = data
        .iter()
        .filter(|&&x| x != median)
        .map(|&x| x > median)
        .collect();
    let above = signs.iter().filter(|&&s| s).count();
    let below = signs.len() - above;
    if above == 0 || below == 0 {
        return Err(Error::Degenerate(
            "no observations on one side of the median".into(),
        ));
    }
    let runs = 1 + signs.windows(2).filter(|w| w[0] != w[1]).count();

    let (n1, n2) = (above as f64, below as f64);
    let total = n1 + n2;
    let mean = 2.0 * n1 * n2 / total + 1.0;
    let var = 2.0 * n1 * n2 * (2.0 * n1 * n2 - total) / (total * total * (total - 1.0));
    let diff = runs as f64 - mean;
    let z = if var > 0.0 {
        diff.signum() * (diff.abs() - 0.5).max(0.0) / var.sqrt()
    } else {
        0.0
    };
    let p_value = libm::erfc(z.abs() / std::f64::consts::SQRT_2).min(1.0);
    Ok(RunsResult {
        runs,
        above,
        below,
        z,
        p_value,
    })
}
