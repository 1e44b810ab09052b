mod common;

use proptest::prelude::*;
use stationary_ge::gedist::{
    ge_cdf, ge_fit_iid, ge_log_pdf, ge_pdf, ge_quantile, ge_sample, log1mexp, GEParams,
};
use stationary_ge::Error;

use common::{derivative, integrate, integrate_to_infinity, ks_p};

fn ge(a: f64, l: f64) -> GEParams {
    GEParams::new(a, l).unwrap()
}

/// Profile log-likelihood of the i.i.d. fit as a function of the scale.
fn iid_profile(data: &[f64], scale: f64) -> f64 {
    let n = data.len() as f64;
    let s: f64 = data.iter().map(|&x| log1mexp(scale * x)).sum();
    let shape = -n / s;
    data.iter().map(|&x| ge_log_pdf(x, &ge(shape, scale))).sum()
}

#[test]
fn quadrature_oracle_is_sound() {
    assert!((integrate(f64::sin, 0.0, std::f64::consts::PI, 1e-12) - 2.0).abs() < 1e-12);
    assert!((integrate(f64::sqrt, 0.0, 1.0, 1e-12) - 2.0 / 3.0).abs() < 1e-10);
    assert!((integrate_to_infinity(|x| (-x).exp(), 0.0, 1e-12) - 1.0).abs() < 1e-10);
    assert!((derivative(f64::exp, 0.3, 1e-3) - 0.3f64.exp()).abs() < 1e-11);
}

#[test]
fn pdf_integrates_to_one() {
    for &a in &[0.5, 1.0, 2.0, 5.0] {
        for &l in &[0.5, 1.0, 3.0] {
            let p = ge(a, l);
            // t = w² removes the t^{α-1} singularity at the origin
            let total = integrate_to_infinity(|w| 2.0 * w * ge_pdf(w * w, &p), 0.0, 1e-12);
            assert!((total - 1.0).abs() < 1e-8, "α={a} λ={l}: {total}");
        }
    }
}

#[test]
fn cdf_is_integral_of_pdf() {
    let p = ge(2.5, 0.8);
    for &t in &[0.1, 1.0, 4.0] {
        let v = integrate(|s| ge_pdf(s, &p), 0.0, t, 1e-13);
        assert!((v - ge_cdf(t, &p)).abs() < 1e-11);
    }
}

#[test]
fn extreme_quantiles_stay_finite() {
    let p = ge(3.0, 2.0);
    let hi = ge_quantile(1.0 - 1e-15, &p).unwrap();
    assert!(hi.is_finite() && hi > 0.0);
    // 1 - u^{1/3} ≈ 1e-15/3 so the quantile is about ln(3e15)/2
    assert!((hi - (3e15f64).ln() / 2.0).abs() < 1e-3);
    let u = 0.99f64.powi(99 * 99);
    let lo = ge_quantile(u, &p).unwrap();
    assert!(lo.is_finite() && lo > 0.0);
    assert!((ge_cdf(lo, &p) / u - 1.0).abs() < 1e-12);
    let tiny = ge_quantile(1e-300, &p).unwrap();
    assert!(tiny > 0.0 && (ge_cdf(tiny, &p) / 1e-300 - 1.0).abs() < 1e-12);
}

#[test]
fn quantile_rejects_outside_unit_interval() {
    let p = ge(1.0, 1.0);
    for u in [0.0, 1.0, -0.1, 1.5, f64::NAN] {
        assert!(matches!(ge_quantile(u, &p), Err(Error::Domain(_))), "{u}");
    }
}

#[test]
fn sample_matches_cdf() {
    let p = ge(2.0, 1.0);
    let x = ge_sample(100_000, &p, 1);
    let (d, _) = ks_p(&x, |t| ge_cdf(t, &p));
    assert!(d < 0.006, "{d}");
    let e = ge_sample(100_000, &ge(1.0, 1.0), 2);
    let mean = e.iter().sum::<f64>() / e.len() as f64;
    assert!((mean - 1.0).abs() < 3.0 / 100_000f64.sqrt());
    assert_eq!(ge_sample(1, &p, 9), ge_sample(1, &p, 9));
}

#[test]
fn iid_fit_is_consistent() {
    let x = ge_sample(5000, &ge(7.0, 2.5), 3);
    let f = ge_fit_iid(&x, None).unwrap();
    assert!((f.params.shape() / 7.0 - 1.0).abs() < 0.15, "{:?}", f.params);
    assert!((f.params.scale() / 2.5 - 1.0).abs() < 0.10, "{:?}", f.params);
    assert!(!f.boundary);
    let direct: f64 = x.iter().map(|&t| ge_log_pdf(t, &f.params)).sum();
    assert!((f.loglik - direct).abs() < 1e-9 * direct.abs());
}

#[test]
fn iid_fit_is_stationary_in_scale() {
    for seed in 0..5 {
        let x = ge_sample(200, &ge(1.7, 0.6), 100 + seed);
        let f = ge_fit_iid(&x, None).unwrap();
        let th = f.params.scale();
        let slope = derivative(|t| iid_profile(&x, t), th, 1e-4 * th);
        let scale = iid_profile(&x, th).abs() / th;
        assert!(slope.abs() <= 1e-6 * scale, "seed {seed}: slope {slope}");
    }
}

#[test]
fn iid_fit_is_scale_equivariant() {
    let x = ge_sample(300, &ge(2.0, 1.0), 5);
    let y: Vec<f64> = x.iter().map(|t| 4.0 * t).collect();
    let fx = ge_fit_iid(&x, None).unwrap();
    let fy = ge_fit_iid(&y, None).unwrap();
    assert!((fy.params.scale() * 4.0 / fx.params.scale() - 1.0).abs() < 1e-6);
    assert!((fy.params.shape() / fx.params.shape() - 1.0).abs() < 1e-6);
}

#[test]
fn iid_fit_errors() {
    assert!(matches!(ge_fit_iid(&[2.0; 10], None), Err(Error::Degenerate(_))));
    assert!(matches!(ge_fit_iid(&[1.0, -1.0, 2.0], None), Err(Error::Domain(_))));
    assert!(ge_fit_iid(&[1.0, 2.0], None).is_err());
}

#[test]
fn params_round_trip_through_json() {
    let p = ge(2.0, 0.5);
    let s = serde_json::to_string(&p).unwrap();
    assert_eq!(serde_json::from_str::<GEParams>(&s).unwrap(), p);
    assert!(serde_json::from_str::<GEParams>(r#"{"shape":-1.0,"scale":1.0}"#).is_err());
}

proptest! {
    #[test]
    fn cdf_is_monotone(a in 0.05f64..50.0, l in 0.05f64..20.0, mut ts in prop::collection::vec(0.0f64..30.0, 2..40)) {
        let p = ge(a, l);
        ts.sort_by(f64::total_cmp);
        let v: Vec<f64> = ts.iter().map(|&t| ge_cdf(t, &p)).collect();
        prop_assert!(v.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(v.iter().all(|&c| (0.0..=1.0).contains(&c)));
    }

    #[test]
    fn quantile_inverts_cdf(a in 0.1f64..50.0, l in 0.05f64..20.0, u in 1e-6f64..0.9999) {
        let p = ge(a, l);
        let t = ge_quantile(u, &p).unwrap();
        prop_assert!((ge_quantile(ge_cdf(t, &p), &p).unwrap() / t - 1.0).abs() < 1e-10);
        prop_assert!((ge_cdf(t, &p) / u - 1.0).abs() < 1e-12);
    }

    #[test]
    fn shape_one_is_exponential(l in 0.01f64..50.0, t in 0.0f64..10.0) {
        let p = ge(1.0, l);
        let e = -(-l * t).exp_m1();
        prop_assert!((ge_cdf(t, &p) - e).abs() <= 2.0 * f64::EPSILON * e.max(1e-300));
    }

    #[test]
    fn log_pdf_is_finite_for_large_shapes(a in 1.0f64..60.0, l in 0.1f64..5.0, t in 1e-3f64..20.0) {
        let v = ge_log_pdf(t, &ge(a, l));
        prop_assert!(v.is_finite());
    }
}
