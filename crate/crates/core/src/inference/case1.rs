use super::likelihood::{chain_loglik, validate, Profiler};
use super::{argmax, lambda_grid, FitOptions, FitReport, Model, OptimizerTrace, ProfileCurve};
use crate::error::{Error, Result};
use crate::geprocess::ProcessParams;
use crate::optim::golden_section_max;

pub(crate) struct LambdaSearch {
    pub lambda: f64,
    pub trace: OptimizerTrace,
    pub curve: ProfileCurve,
}

/// Maximizes the profile in λ at fixed γ: grid scan for the bracket, then
/// golden section in `ln λ`. A maximum on the grid edge widens the range by
/// two decades on that side once; a second edge hit is an error.
pub(crate) fn search_lambda(
    prof: &mut Profiler<'_>,
    gamma: f64,
    mean: f64,
    opts: &FitOptions,
) -> Result<LambdaSearch> {
    let (mut lo, mut hi) = (0.01 / mean, 100.0 / mean);
    let mut widened = false;
    loop {
        let grid = lambda_grid(lo, hi, opts.lambda_points_per_decade);
        let values: Vec<f64> = grid.iter().map(|&l| prof.value(gamma, l)).collect();
        let k = argmax(&values)
            .ok_or_else(|| Error::Degenerate("profile likelihood is nowhere finite".into()))?;
        let last = grid.len() - 1;
        if k == 0 || k == last {
            if widened {
                return Err(Error::Boundary { at: grid[k] });
            }
            widened = true;
            if k == 0 {
                lo /= 100.0;
            } else {
                hi *= 100.0;
            }
            continue;
        }
        let g = golden_section_max(
            |t| prof.value(gamma, t.exp()),
            grid[k - 1].ln(),
            grid[k + 1].ln(),
            1e-9,
        );
        let lambda = g.x.exp();
        let trace = OptimizerTrace {
            evaluations: grid.len() + g.evaluations,
            bracket: Some((g.bracket.0.exp(), g.bracket.1.exp())),
            widened,
            ..Default::default()
        };
        return Ok(LambdaSearch {
            lambda,
            trace,
            curve: ProfileCurve {
                lambda: grid,
                loglik: values,
            },
        });
    }
}

/// Equal-shape fit: maximizes `h(λ)` and reads off `α̂ = α̂(λ̂)`.
pub fn fit_case1(data: &[f64], opts: &FitOptions) -> Result<FitReport> {
    validate(data, 3)?;
    let mean = data.iter().sum::<f64>() / data.len() as f64;
    let mut prof = Profiler::new(data, opts.tie_tol);
    let found = search_lambda(&mut prof, 1.0, mean, opts)?;
    let alpha = prof
        .terms(1.0, found.lambda)
        .alpha1()
        .ok_or_else(|| Error::Degenerate("no finite shape estimate".into()))?;
    let estimates = ProcessParams::equal(alpha, found.lambda)?;
    let loglik = chain_loglik(data, &estimates, opts.tie_tol)?;
    let mut report = FitReport::new(Model::Equal, estimates, loglik, found.trace);
    if opts.keep_grid {
        report.profile = Some(found.curve);
    }
    Ok(report)
}
