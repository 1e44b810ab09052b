//! End-to-end analysis of a price series: ingest with an affine transform,
//! fit both models with bootstrap intervals, compare them and run the
//! goodness-of-fit checks. Mirrors `stationary-ge analyze`.

use stationary_ge::cli::{cmd_analyze, write_series, Flags, IngestOptions};
use stationary_ge::{simulate, ProcessParams, Transform};

fn main() -> stationary_ge::Result<()> {
    let dir = std::env::temp_dir().join("stationary-ge-analyze-example");
    std::fs::create_dir_all(&dir)?;
    let prices = dir.join("prices.txt");

    // Daily prices quoted to the cent, reconstructed from a GE path.
    let x = simulate(35, &ProcessParams::equal(1.6, 1.2)?, 2024);
    let quoted: Vec<f64> = x.values().iter().map(|v| ((4200.0 + 100.0 * v) * 100.0).round() / 100.0).collect();
    write_series(std::fs::File::create(&prices)?, &quoted)?;

    let flags = Flags {
        ingest: IngestOptions {
            transform: Transform::new(4200.0, 100.0)?,
            ..IngestOptions::default()
        },
        seed: 1,
        boot: Some(500),
        band_sims: 2000,
        grid_out: Some(dir.join("contour.tsv")),
        report_out: Some(dir.join("report.json")),
        ..Flags::default()
    };
    let r = cmd_analyze(&prices, &flags)?;

    println!("n = {}, transform (x - {}) / {}", r.n, r.transform.shift, r.transform.divisor);
    for (name, f) in [("equal", &r.equal), ("unequal", &r.unequal)] {
        let e = f.estimates;
        println!(
            "{name:>8}: α₀ {:.3} α₁ {:.3} λ {:.3} loglik {:.3}",
            e.alpha0(),
            e.alpha1(),
            e.lambda(),
            f.loglik
        );
        for (k, ci) in f.ci.iter().flatten() {
            println!("          {k} 95% CI [{:.3}, {:.3}]", ci.lower, ci.upper);
        }
    }
    println!("loglik difference (unequal - equal): {:.4}", r.comparison.difference);
    println!("gof under {:?}: {:?}", r.gof_model, r.gof.verdict);
    println!("report and contour table written to {}", dir.display());
    Ok(())
}
