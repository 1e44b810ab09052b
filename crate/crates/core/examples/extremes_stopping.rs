//! Running maxima and the first time the process exceeds a level.

use stationary_ge::geprocess::{
    running_max_cdf, running_max_monte_carlo, running_min_monte_carlo, stopping_monte_carlo, StoppingLaw,
};
use stationary_ge::ProcessParams;

fn main() -> stationary_ge::Result<()> {
    let p = ProcessParams::new(2.0, 3.0, 1.0)?;

    println!("P(max(X_1..X_n) <= x)");
    for n in [1, 2, 5, 20] {
        let c = running_max_monte_carlo(2.0, n, &p, 200_000, n as u64);
        println!(
            "  n={n:>2} x=2: formula {:.5}, simulated {:.5} ({:+.2} σ)",
            running_max_cdf(2.0, n, &p),
            c.estimate,
            c.deviation() / c.std_error
        );
    }

    // The product formula for the running minimum is only exact for n <= 2.
    let c = running_min_monte_carlo(0.8, 4, &p, 400_000, 3);
    println!(
        "P(min(X_1..X_4) > 0.8): product formula {:.5}, simulated {:.5} ± {:.5}",
        c.formula, c.estimate, c.std_error
    );

    let law = StoppingLaw::new(1.0, &p)?;
    println!("\nfirst exceedance of L = 1: p = {:.5}, α* = {}", law.p(), law.alpha_star());
    let counts = stopping_monte_carlo(1.0, &p, 200_000, 5);
    for k in 1..=5 {
        println!(
            "  P(N = {k}) = {:.5}  (simulated {:.5})",
            law.pmf(k),
            counts.get(k - 1).copied().unwrap_or(0) as f64 / 200_000.0
        );
    }
    println!("  E[N] = {:.5}, G(1) = {}, G(0.5) = {:.5}", law.mean(), law.pgf(1.0)?, law.pgf(0.5)?);
    println!("  total variation vs simulation: {:.5}", law.total_variation(&counts));
    Ok(())
}
