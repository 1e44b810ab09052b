//! Lag-1 joint law: the singular curve, the absolutely continuous part and
//! the mixture identity.

use stationary_ge::geprocess::{
    classify_pair, curve_gamma, joint_cdf_lag, pair_density, SingularDecomposition, DEFAULT_TIE_TOL,
};
use stationary_ge::ProcessParams;

fn main() -> stationary_ge::Result<()> {
    let p = ProcessParams::new(2.0, 3.0, 1.0)?;
    let d = SingularDecomposition::new(&p);
    println!("singular mass p = {:.6}", d.p());

    // The curve carries probability p; points on it get a line density.
    for x in [0.5, 1.0, 2.0] {
        let y = curve_gamma(x, &p);
        let (region, dens) = pair_density(x, y, &p, DEFAULT_TIE_TOL);
        println!("curve point ({x:.2}, {y:.4}): {region:?}, line density {dens:.5}");
    }
    for (x, y) in [(0.5, 2.0), (2.0, 0.5)] {
        let (region, dens) = pair_density(x, y, &p, DEFAULT_TIE_TOL);
        println!("({x}, {y}): {region:?}, density {dens:.5}");
        assert_eq!(region, classify_pair(x, y, &p, DEFAULT_TIE_TOL));
    }

    println!("{:>6} {:>6} {:>12} {:>12} {:>12}", "x", "y", "F", "F_sing", "F_ac");
    for (x, y) in [(0.5, 0.5), (1.0, 1.5), (2.0, 1.0)] {
        println!(
            "{x:>6} {y:>6} {:>12.8} {:>12.8} {:>12.8}",
            joint_cdf_lag(x, y, 1, &p),
            d.singular_cdf(x, y),
            d.absolutely_continuous_cdf(x, y)
        );
    }
    // Beyond lag 1 the pair is independent.
    let m = p.marginal();
    let f = stationary_ge::ge_cdf;
    println!(
        "lag 2 at (1, 1): {:.8} = {:.8}",
        joint_cdf_lag(1.0, 1.0, 2, &p),
        f(1.0, &m) * f(1.0, &m)
    );
    Ok(())
}
