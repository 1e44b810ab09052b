//! Parametric bootstrap percentile intervals. Replicates run in parallel and
//! are reproducible from the seed.

use std::time::Instant;

use stationary_ge::{bootstrap_ci, fit, simulate, FitOptions, Model, ProcessParams};

fn main() -> stationary_ge::Result<()> {
    let x = simulate(100, &ProcessParams::equal(2.0, 1.0)?, 8);
    let opts = FitOptions::default();

    for model in [Model::Equal, Model::Unequal] {
        let f = fit(x.values(), model, &opts)?;
        let t = Instant::now();
        let b = bootstrap_ci(x.values(), &f, 500, 0.95, 42, &opts)?;
        println!("{model:?} model, B = 500, {:.2} s", t.elapsed().as_secs_f64());
        for (name, ci) in b.ci.iter().flatten() {
            println!("  {name:>6}: [{:.4}, {:.4}]  width {:.4}", ci.lower, ci.upper, ci.width());
        }
        if let Some(failed) = b.failed_replicates {
            println!("  failed refits: {failed}");
        }
    }
    Ok(())
}
