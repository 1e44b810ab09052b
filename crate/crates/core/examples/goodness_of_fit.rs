//! Goodness of fit: odd and even subsequences should be i.i.d. GE, and
//! autocorrelations beyond lag 1 should sit inside a simulated null band.

use stationary_ge::gof::KsPValue;
use stationary_ge::{fit, goodness_of_fit, simulate, FitOptions, GofOptions, Model, ProcessParams};

fn main() -> stationary_ge::Result<()> {
    let x = simulate(200, &ProcessParams::equal(2.0, 1.0)?, 12);
    let f = fit(x.values(), Model::Equal, &FitOptions::default())?;

    let opts = GofOptions {
        lags: vec![1, 2, 3],
        ks_method: KsPValue::Asymptotic,
        seed: 3,
        ..GofOptions::default()
    };
    let r = goodness_of_fit(&x, &f.estimates, &opts)?;
    for (name, s) in [("odd", &r.odd), ("even", &r.even)] {
        println!(
            "{name:>4}: n={} GE({:.3}, {:.3})  KS D={:.4} p={:.3}  runs={} z={:+.2} p={:.3}",
            s.n,
            s.fit.params.shape(),
            s.fit.params.scale(),
            s.ks.distance,
            s.ks.p_value,
            s.runs.runs,
            s.runs.z,
            s.runs.p_value
        );
    }
    for l in &r.lags {
        println!("lag {}: acf {:+.4}, upper {:.0}% point {:.4}", l.lag, l.acf, 100.0 * r.band_quantile, l.upper);
    }
    println!("verdict: {:?}", r.verdict);
    Ok(())
}
