use super::case1::{fit_case1, search_lambda};
use super::anchor::tie_anchor;
use super::likelihood::{chain_loglik, validate, Profiler, TieSets};
use super::{lambda_grid, log_grid, ContourGrid, FitOptions, FitReport, Model, OptimizerTrace};
use crate::error::{Error, Result};
use crate::geprocess::ProcessParams;
use crate::optim::{nelder_mead_max, SimplexOptions, SimplexResult};

/// Fewest on-curve pairs an anchor must explain.
const MIN_ANCHOR_TIES: usize = 3;

struct Candidate {
    estimates: ProcessParams,
    loglik: f64,
    ties: usize,
    start: Option<(f64, f64)>,
    simplex: Option<Vec<(f64, f64)>>,
    anchored: bool,
}

fn candidate(data: &[f64], gamma: f64, lambda: f64, prof: &mut Profiler<'_>, tol: f64) -> Option<Candidate> {
    let alpha1 = prof.terms(gamma, lambda).alpha1()?;
    let estimates = ProcessParams::from_gamma(gamma, alpha1, lambda).ok()?;
    let loglik = chain_loglik(data, &estimates, tol).ok()?;
    Some(Candidate {
        estimates,
        loglik,
        ties: TieSets::for_params(data, &estimates, tol).n0(),
        start: None,
        simplex: None,
        anchored: false,
    })
}

/// Unequal-shape fit.
///
/// The profile `l(γ, α̂₁(γ, λ), λ)` is tabulated on the `(γ, λ)` grid (or
/// `opts.init` is used instead) and a simplex search in `(ln γ, ln λ)` starts
/// from there; a second run starts from the equal-shape optimum. The
/// objective jumps wherever a pair changes tie set, which is why the search
/// is derivative-free.
///
/// Pairs lying exactly on the singular curve pin `(γ, λ)` down to a point the
/// grid cannot see, so the `(γ, λ)` shared by the observed ties is added as a
/// further candidate (see [`anchor`](super::anchor)). Explaining a tie is an
/// event of positive probability against one of probability zero, so among
/// candidates whose log-likelihood is at least the equal-shape optimum the
/// one with the most on-curve pairs wins, then the highest log-likelihood.
/// The equal-shape optimum is itself a candidate, so the attained
/// log-likelihood never falls below the nested model's.
pub fn fit_case2(data: &[f64], opts: &FitOptions) -> Result<FitReport> {
    validate(data, 4)?;
    let mean = data.iter().sum::<f64>() / data.len() as f64;
    let mut prof = Profiler::new(data, opts.tie_tol);

    let lambdas = lambda_grid(0.01 / mean, 100.0 / mean, opts.lambda_points_per_decade);
    let gammas = log_grid(opts.gamma_range.0, opts.gamma_range.1, opts.gamma_points);
    let step = vec![
        2.0 * (gammas[1] / gammas[0]).ln(),
        2.0 * (lambdas[1] / lambdas[0]).ln(),
    ];

    let mut starts: Vec<(f64, f64)> = Vec::new();
    let mut contour = None;
    let mut evaluations = 0;
    match opts.init {
        Some(init) => {
            if !(init.0 > 0.0 && init.1 > 0.0) {
                return Err(Error::param("init", "gamma and lambda must be positive"));
            }
            starts.push(init);
        }
        None => {
            let mut values = vec![f64::NEG_INFINITY; gammas.len() * lambdas.len()];
            for (j, &l) in lambdas.iter().enumerate() {
                for (i, &g) in gammas.iter().enumerate() {
                    values[i * lambdas.len() + j] = prof.value(g, l);
                }
            }
            evaluations += values.len();
            let grid = ContourGrid {
                gamma: gammas.clone(),
                lambda: lambdas.clone(),
                values,
            };
            if let Some((gi, li)) = grid.argmax() {
                starts.push((gammas[gi], lambdas[li]));
            }
            if opts.keep_grid {
                contour = Some(grid);
            }
        }
    }

    let mut candidates: Vec<Candidate> = Vec::new();
    let inner = FitOptions {
        keep_grid: false,
        ..opts.clone()
    };
    let nested = fit_case1(data, &inner).ok();
    if let Some(eq) = &nested {
        starts.push((1.0, eq.estimates.lambda()));
        evaluations += eq.trace.evaluations;
        candidates.push(Candidate {
            estimates: eq.estimates,
            loglik: eq.loglik,
            ties: TieSets::for_params(data, &eq.estimates, opts.tie_tol).n0(),
            start: Some((1.0, eq.estimates.lambda())),
            simplex: None,
            anchored: false,
        });
    }
    if let Some(a) = tie_anchor(data, opts.tie_tol, MIN_ANCHOR_TIES) {
        if let Some(mut c) = candidate(data, a.gamma, a.lambda, &mut prof, opts.tie_tol) {
            c.start = Some((a.gamma, a.lambda));
            c.anchored = true;
            candidates.push(c);
        }
    }

    let simplex_opts = SimplexOptions {
        initial_step: step,
        max_evaluations: opts.max_evaluations,
        ..Default::default()
    };
    let mut stalled: Option<SimplexResult> = None;
    for &start in &starts {
        let r = nelder_mead_max(
            |v: &[f64]| prof.value(v[0].exp(), v[1].exp()),
            &[start.0.ln(), start.1.ln()],
            &simplex_opts,
        );
        evaluations += r.evaluations;
        if !r.converged || !r.value.is_finite() {
            if stalled.as_ref().is_none_or(|s| r.value > s.value) {
                stalled = Some(r);
            }
            continue;
        }
        if let Some(mut c) = candidate(data, r.x[0].exp(), r.x[1].exp(), &mut prof, opts.tie_tol) {
            c.start = Some(start);
            c.simplex = Some(r.simplex.iter().map(|v| (v[0].exp(), v[1].exp())).collect());
            candidates.push(c);
        }
    }

    let floor = nested.as_ref().map_or(f64::NEG_INFINITY, |eq| eq.loglik);
    let best = candidates
        .into_iter()
        .filter(|c| c.loglik >= floor)
        .max_by(|a, b| a.ties.cmp(&b.ties).then(a.loglik.total_cmp(&b.loglik)));
    let Some(best) = best else {
        let r = stalled.ok_or_else(|| Error::Degenerate("profile likelihood is nowhere finite".into()))?;
        return Err(Error::Convergence {
            evaluations,
            best: vec![r.x[0].exp(), r.x[1].exp()],
            value: r.value,
        });
    };
    let trace = OptimizerTrace {
        evaluations,
        simplex: best.simplex,
        start: best.start,
        anchored: best.anchored,
        singular_pairs: Some(best.ties),
        ..Default::default()
    };
    let mut report = FitReport::new(Model::Unequal, best.estimates, best.loglik, trace);
    report.contour = contour;
    Ok(report)
}

/// Unequal-shape model with γ held fixed; maximizes over λ only. At `γ = 1`
/// this is the equal-shape fit.
pub fn fit_case2_fixed_gamma(data: &[f64], gamma: f64, opts: &FitOptions) -> Result<FitReport> {
    validate(data, 3)?;
    if !(gamma > 0.0 && gamma.is_finite()) {
        return Err(Error::param("gamma", format!("must be > 0, got {gamma}")));
    }
    let mean = data.iter().sum::<f64>() / data.len() as f64;
    let mut prof = Profiler::new(data, opts.tie_tol);
    let found = search_lambda(&mut prof, gamma, mean, opts)?;
    let alpha1 = prof
        .terms(gamma, found.lambda)
        .alpha1()
        .ok_or_else(|| Error::Degenerate("no finite shape estimate".into()))?;
    let estimates = ProcessParams::from_gamma(gamma, alpha1, found.lambda)?;
    let loglik = chain_loglik(data, &estimates, opts.tie_tol)?;
    let mut report = FitReport::new(Model::Unequal, estimates, loglik, found.trace);
    if opts.keep_grid {
        report.profile = Some(found.curve);
    }
    Ok(report)
}
