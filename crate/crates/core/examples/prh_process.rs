//! Moving maxima with a proportional-reversed-hazard marginal: any baseline
//! quantile function can replace the exponential.

use stationary_ge::geprocess::{prh_simulate, ExponentialBase};
use stationary_ge::{simulate, ProcessParams};

fn main() -> stationary_ge::Result<()> {
    let (a0, a1) = (1.5, 2.5);

    // Exponential baseline reproduces the GE process draw for draw.
    let ge = simulate(5, &ProcessParams::new(a0, a1, 2.0)?, 1);
    let prh = prh_simulate(5, a0, a1, &ExponentialBase::new(2.0), 1)?;
    println!("GE : {:?}", ge.values());
    println!("PRH: {:?}", prh.values());

    // Weibull baseline with shape 2: F0(t) = 1 - exp(-t^2).
    let weibull = |w: f64| (-(-w).ln_1p()).sqrt();
    let x = prh_simulate(50_000, a0, a1, &weibull, 2)?;
    // The marginal is F0^{α0+α1}.
    let a = a0 + a1;
    for t in [0.8, 1.2, 1.6] {
        let emp = x.values().iter().filter(|&&v| v <= t).count() as f64 / x.len() as f64;
        let exact = (1.0 - (-t * t).exp()).powf(a);
        println!("P(X <= {t}): empirical {emp:.4}, exact {exact:.4}");
    }
    Ok(())
}
