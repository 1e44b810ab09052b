mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stationary_ge::gedist::{ge_cdf, GEParams};
use stationary_ge::geprocess::*;
use stationary_ge::Error;

use common::{ks_p, ks_two_sample, lagged_correlation, pair_masses};

fn pp(a0: f64, a1: f64, l: f64) -> ProcessParams {
    ProcessParams::new(a0, a1, l).unwrap()
}

#[test]
fn marginal_is_ge_with_summed_shape() {
    let p = pp(2.0, 3.0, 1.0);
    let x = simulate(100_000, &p, 21);
    let m = p.marginal();
    let (d, _) = ks_p(x.values(), |t| ge_cdf(t, &m));
    assert!(d < 0.006, "{d}");
}

#[test]
fn equal_shapes_tie_a_third_of_the_time() {
    let p = ProcessParams::equal(2.0, 1.0).unwrap();
    let x = simulate(100_000, &p, 3);
    let ties = x.values().windows(2).filter(|w| w[0] == w[1]).count();
    let frac = ties as f64 / (x.len() - 1) as f64;
    assert!((frac - 1.0 / 3.0).abs() < 0.01, "{frac}");
}

#[test]
fn unequal_shapes_put_six_nineteenths_on_the_curve() {
    let p = pp(2.0, 3.0, 1.0);
    let path = simulate_traced(100_000, &p, 8);
    let v = path.series.values();
    let on_curve: Vec<usize> = (0..v.len() - 1)
        .filter(|&k| classify_pair(v[k], v[k + 1], &p, DEFAULT_TIE_TOL) == PairRegion::C)
        .collect();
    assert_eq!(on_curve, path.singular_pairs());
    let frac = on_curve.len() as f64 / (v.len() - 1) as f64;
    assert!((frac - 6.0 / 19.0).abs() < 0.01, "{frac}");
}

#[test]
fn halves_of_a_path_share_a_marginal() {
    let x = simulate(100_000, &pp(1.5, 0.7, 2.0), 4);
    let (a, b) = x.values().split_at(50_000);
    assert!(ks_two_sample(a, b) > 0.01);
}

#[test]
fn lags_beyond_one_are_uncorrelated() {
    let x = simulate(100_000, &pp(2.0, 3.0, 1.0), 5);
    let bound = 3.0 / (100_000f64).sqrt();
    for m in [2, 3] {
        let r = lagged_correlation(x.values(), m);
        assert!(r.abs() < bound, "lag {m}: {r}");
    }
    assert!(lagged_correlation(x.values(), 1) > 0.1);
}

#[test]
fn lag_two_joint_is_product() {
    let p = pp(2.0, 3.0, 0.5);
    let m = p.marginal();
    for &(x, y) in &[(0.3, 2.0), (1.0, 1.0), (5.0, 0.7)] {
        for lag in [2, 3, 10] {
            let v = joint_cdf_lag(x, y, lag, &p);
            assert!((v - ge_cdf(x, &m) * ge_cdf(y, &m)).abs() < 1e-15);
        }
    }
}

#[test]
fn lag_one_joint_is_pqd_on_a_grid() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..5 {
        let p = pp(rng.random_range(0.2..6.0), rng.random_range(0.2..6.0), rng.random_range(0.2..3.0));
        let m = p.marginal();
        for i in 1..=50 {
            for j in 1..=50 {
                let (x, y) = (i as f64 * 0.1, j as f64 * 0.1);
                let diff = joint_cdf_lag(x, y, 1, &p) - ge_cdf(x, &m) * ge_cdf(y, &m);
                assert!(diff >= -1e-15, "{p:?} at ({x}, {y}): {diff}");
            }
        }
    }
}

#[test]
fn joint_is_copula_of_marginals() {
    for p in [pp(2.0, 3.0, 1.0), pp(0.4, 1.7, 2.5), pp(3.0, 3.0, 0.3)] {
        let m = p.marginal();
        for i in 1..=20 {
            for j in 1..=20 {
                let (x, y) = (i as f64 * 0.25, j as f64 * 0.25);
                let c = copula(ge_cdf(x, &m), ge_cdf(y, &m), p.delta());
                assert!((joint_cdf_lag(x, y, 1, &p) - c).abs() < 1e-10);
            }
        }
    }
}

#[test]
fn copula_is_tp2_on_a_grid() {
    let grid: Vec<f64> = (1..=25).map(|i| i as f64 / 26.0).collect();
    for &d in &[0.2, 0.5, 0.8] {
        for (a, &u1) in grid.iter().enumerate() {
            for &u2 in &grid[a..] {
                for (b, &v1) in grid.iter().enumerate() {
                    for &v2 in &grid[b..] {
                        let lhs = copula(u1, v1, d) * copula(u2, v2, d);
                        let rhs = copula(u1, v2, d) * copula(u2, v1, d);
                        assert!(lhs >= rhs * (1.0 - 1e-12), "δ={d}");
                    }
                }
            }
        }
    }
}

#[test]
fn copula_margins_and_rectangles() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10_000 {
        let d: f64 = rng.random_range(0.01..0.99);
        let (mut u1, mut u2): (f64, f64) = (rng.random(), rng.random());
        let (mut v1, mut v2): (f64, f64) = (rng.random(), rng.random());
        if u1 > u2 {
            std::mem::swap(&mut u1, &mut u2);
        }
        if v1 > v2 {
            std::mem::swap(&mut v1, &mut v2);
        }
        let vol = copula(u2, v2, d) - copula(u2, v1, d) - copula(u1, v2, d) + copula(u1, v1, d);
        assert!(vol >= -1e-14, "{vol}");
        assert!((copula(u1, 1.0, d) - u1).abs() < 1e-15);
        assert!((copula(1.0, v1, d) - v1).abs() < 1e-15);
        assert_eq!(copula(u1, 0.0, d), 0.0);
    }
    assert!((copula(0.25, 0.25, 0.5) - 0.125).abs() < 1e-15);
}

#[test]
fn dependence_measures_vanish_at_the_edges() {
    assert!(kendall_tau(1e-9).unwrap() < 1e-8);
    assert!(spearman_rho(1e-9).unwrap() < 1e-8);
    assert!(kendall_tau(1.0 - 1e-9).unwrap() < 1e-8);
    for d in [0.0, 1.0, -0.5] {
        assert!(matches!(kendall_tau(d), Err(Error::Domain(_))));
        assert!(matches!(spearman_rho(d), Err(Error::Domain(_))));
    }
}

#[test]
fn empirical_dependence_matches_formulas_at_equal_shapes() {
    let p = ProcessParams::equal(1.5, 1.0).unwrap();
    let x = simulate(100_000, &p, 12);
    let (a, b): (Vec<f64>, Vec<f64>) = x.values().chunks_exact(2).map(|c| (c[0], c[1])).unzip();
    let tau = empirical_kendall_tau(&a, &b).unwrap();
    let rho = empirical_spearman_rho(&a, &b).unwrap();
    assert!((tau - 1.0 / 3.0).abs() < 0.02, "{tau}");
    assert!((rho - 3.0 / 7.0).abs() < 0.02, "{rho}");
}

#[test]
fn classify_and_curve_examples() {
    let p = pp(2.0, 3.0, 1.0);
    assert_eq!(classify_pair(1.0, 0.1, &p, DEFAULT_TIE_TOL), PairRegion::S2);
    let e = ProcessParams::equal(1.3, 0.8).unwrap();
    assert_eq!(classify_pair(0.5, 0.9, &e, DEFAULT_TIE_TOL), PairRegion::S1);
    assert_eq!(classify_pair(0.9, 0.5, &e, DEFAULT_TIE_TOL), PairRegion::S2);
    let q = pp(2.0, 1.0, 1.0);
    let ln2 = std::f64::consts::LN_2;
    assert!((curve_gamma(ln2, &q) - (4.0f64 / 3.0).ln()).abs() < 1e-15);
    for &t in &[0.01, 0.3, 2.0, 9.0] {
        let y = curve_gamma(t, &p);
        assert_eq!(classify_pair(t, y, &p, DEFAULT_TIE_TOL), PairRegion::C);
        let back = curve_gamma(y, &pp(3.0, 2.0, 1.0));
        assert!((back - t).abs() < 1e-10 * t.max(1.0), "{t} -> {back}");
        assert!((curve_gamma_inverse(y, &p) - t).abs() < 1e-10 * t.max(1.0));
    }
}

#[test]
fn pair_law_masses_split_into_p_and_one_minus_p() {
    for p in [pp(2.0, 3.0, 1.0), pp(1.0, 1.0, 0.5), pp(0.7, 2.2, 3.0)] {
        let want = SingularDecomposition::new(&p).p();
        let (ac, sing) = pair_masses(&p, 1e-9);
        assert!((ac - want).abs() < 1e-6, "{p:?}: {ac} vs {want}");
        assert!((sing - (1.0 - want)).abs() < 1e-6, "{p:?}: {sing}");
    }
}

#[test]
fn decomposition_reconstructs_joint() {
    for p in [pp(2.0, 3.0, 1.0), pp(0.5, 4.0, 2.0), pp(1.0, 1.0, 1.0)] {
        let d = SingularDecomposition::new(&p);
        for i in 1..=30 {
            for j in 1..=30 {
                let (x, y) = (i as f64 * 0.15, j as f64 * 0.15);
                assert!((d.mixture_cdf(x, y) - joint_cdf_lag(x, y, 1, &p)).abs() < 1e-10);
            }
        }
    }
}

#[test]
fn running_max_matches_simulation() {
    let p = pp(2.0, 3.0, 1.0);
    for &x in &[0.5, 1.0, 2.0] {
        let c = running_max_monte_carlo(x, 5, &p, 1_000_000, 31);
        assert!(c.sigmas() < 3.0, "x={x}: {c:?}");
    }
}

#[test]
fn running_min_formula_is_reported_against_simulation() {
    let p = pp(2.0, 3.0, 1.0);
    let two = running_min_monte_carlo(0.8, 2, &p, 1_000_000, 41);
    assert!(two.sigmas() < 3.0, "{two:?}");
    let four = running_min_monte_carlo(0.8, 4, &p, 1_000_000, 42);
    assert!(four.formula.is_finite() && four.estimate.is_finite());
    eprintln!(
        "running min n=4 at x=0.8: formula {:.6}, simulation {:.6}, {:.1} sigma",
        four.formula,
        four.estimate,
        four.sigmas()
    );
}

#[test]
fn stopping_time_matches_simulation() {
    let p = pp(2.0, 3.0, 1.0);
    let law = StoppingLaw::new(1.0, &p).unwrap();
    let counts = stopping_monte_carlo(1.0, &p, 1_000_000, 51);
    assert!(law.total_variation(&counts) < 0.005);
    assert!((law.pgf(1.0).unwrap() - 1.0).abs() < 1e-14);
    let series: f64 = (1..2000).map(|k| k as f64 * law.pmf(k)).sum();
    assert!((law.mean() - series).abs() < 1e-8);
    assert!(law.pgf(law.pgf_radius() * 1.01).is_err());
}

#[test]
fn prh_with_exponential_base_is_the_ge_process() {
    let p = pp(1.2, 2.5, 0.7);
    let a = simulate(500, &p, 9);
    let b = prh_simulate(500, 1.2, 2.5, &ExponentialBase::new(0.7), 9).unwrap();
    assert_eq!(a.values(), b.values());
    let c = prh_simulate(500, 1.2, 2.5, &|w: f64| -(-w).ln_1p() / 0.7, 9).unwrap();
    for (x, y) in a.values().iter().zip(c.values()) {
        assert!((x - y).abs() <= 1e-12 * x.max(1.0));
    }
}

#[test]
fn prh_uniform_and_weibull_baselines() {
    let x = prh_simulate(100_000, 2.0, 3.0, &|w: f64| w, 10).unwrap();
    let (d, _) = ks_p(x.values(), |t| t.clamp(0.0, 1.0).powf(5.0));
    assert!(d < 0.006, "uniform base: {d}");
    let k = 1.7;
    let weib = move |w: f64| (-(-w).ln_1p()).powf(1.0 / k);
    let y = prh_simulate(100_000, 0.8, 1.5, &weib, 11).unwrap();
    let (d, _) = ks_p(y.values(), |t| (-(-(t.powf(k))).exp_m1()).powf(2.3));
    assert!(d < 0.006, "weibull base: {d}");
    assert!(prh_simulate(10, -1.0, 1.0, &|w: f64| w, 0).is_err());
}

#[test]
fn marginal_accessor() {
    let p = pp(2.0, 3.0, 1.5);
    assert_eq!(p.marginal(), GEParams::new(5.0, 1.5).unwrap());
    assert!((p.delta() - 0.4).abs() < 1e-15);
    assert!((p.gamma() - 2.0 / 3.0).abs() < 1e-15);
    assert_eq!(p.alpha_star(), 3.0);
}

proptest! {
    #[test]
    fn pair_densities_are_nonnegative(a0 in 0.1f64..10.0, a1 in 0.1f64..10.0, l in 0.1f64..5.0,
                                      x in 1e-3f64..10.0, y in 1e-3f64..10.0) {
        let p = pp(a0, a1, l);
        let (_, f) = pair_density(x, y, &p, DEFAULT_TIE_TOL);
        prop_assert!(f >= 0.0);
    }

    #[test]
    fn curve_is_increasing_and_on_c(a0 in 0.1f64..10.0, a1 in 0.1f64..10.0, l in 0.1f64..5.0, t in 1e-3f64..10.0) {
        let p = pp(a0, a1, l);
        let y = curve_gamma(t, &p);
        prop_assert!(curve_gamma(t * 1.01, &p) > y);
        prop_assert_eq!(classify_pair(t, y, &p, DEFAULT_TIE_TOL), PairRegion::C);
    }

    #[test]
    fn dependence_measures_are_symmetric(d in 0.001f64..0.999) {
        prop_assert!((kendall_tau(d).unwrap() - kendall_tau(1.0 - d).unwrap()).abs() < 1e-14);
        prop_assert!((spearman_rho(d).unwrap() - spearman_rho(1.0 - d).unwrap()).abs() < 1e-14);
    }

    #[test]
    fn stopping_pmf_sums_to_one(a0 in 0.1f64..8.0, a1 in 0.1f64..8.0, l in 0.1f64..3.0, level in 0.05f64..4.0) {
        let law = StoppingLaw::new(level, &pp(a0, a1, l)).unwrap();
        let q = law.p().powf(law.alpha_star());
        prop_assume!(q < 0.999);
        let terms = ((40.0 / -q.ln()).ceil() as usize).max(10);
        let total: f64 = (1..=terms).map(|k| law.pmf(k)).sum();
        prop_assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn simulation_is_reproducible(seed in any::<u64>()) {
        let p = pp(1.0, 2.0, 1.0);
        prop_assert_eq!(simulate(50, &p, seed), simulate(50, &p, seed));
    }
}
