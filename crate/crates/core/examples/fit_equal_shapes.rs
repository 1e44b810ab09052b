//! Chain-likelihood fit with α₀ = α₁: the shape is profiled out and λ is
//! found on a log grid refined by golden section.

use stationary_ge::inference::{fit_case1, profile_loglik_case1, TieSets};
use stationary_ge::{simulate, FitOptions, ProcessParams};

fn main() -> stationary_ge::Result<()> {
    let truth = ProcessParams::equal(2.0, 1.0)?;
    let x = simulate(200, &truth, 21);
    let opts = FitOptions::default();

    let f = fit_case1(x.values(), &opts)?;
    let est = f.estimates;
    println!("α̂ = {:.4}, λ̂ = {:.4}, loglik = {:.4}", est.alpha0(), est.lambda(), f.loglik);
    println!("evaluations: {}, golden bracket: {:?}", f.trace.evaluations, f.trace.bracket);

    let sets = TieSets::for_params(x.values(), &est, opts.tie_tol);
    println!("pairs: {} ties, {} rises, {} falls", sets.n0(), sets.n1(), sets.n2());

    // A coarse look at the profile around the optimum.
    for k in [0.5, 0.8, 1.0, 1.25, 2.0] {
        let l = k * est.lambda();
        println!("  h({l:.4}) = {:.4}", profile_loglik_case1(l, x.values(), opts.tie_tol)?);
    }
    if let Some(profile) = &f.profile {
        println!("profile curve kept with {} grid points", profile.lambda.len());
    }
    println!("{}", serde_json::to_string_pretty(&f).expect("report serializes"));
    Ok(())
}
