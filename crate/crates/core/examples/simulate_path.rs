//! Simulate a GE moving-maximum path and compare its sample moments with the
//! marginal GE law.
//!
//! `cargo run --example simulate_path -- [n] [seed]`

use stationary_ge::gedist::ge_cdf;
use stationary_ge::{simulate_traced, ProcessParams};

fn main() -> stationary_ge::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(10_000);
    let seed: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(7);

    let p = ProcessParams::new(2.0, 3.0, 1.0)?;
    let path = simulate_traced(n, &p, seed);
    let x = path.series.values();

    println!("first values: {:?}", &x[..5.min(x.len())]);
    let m = p.marginal();
    println!("marginal: GE(shape {}, scale {})", m.shape(), m.scale());
    for q in [0.5, 1.0, 2.0] {
        let emp = x.iter().filter(|&&v| v <= q).count() as f64 / n as f64;
        println!("  P(X <= {q}): empirical {emp:.4}, exact {:.4}", ge_cdf(q, &m));
    }

    let on_curve = path.singular_pairs().len();
    println!(
        "pairs on the singular curve: {on_curve} of {} ({:.4})",
        n - 1,
        on_curve as f64 / (n - 1) as f64
    );
    Ok(())
}
