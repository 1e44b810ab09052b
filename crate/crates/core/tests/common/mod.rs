//! Numerical oracles shared by the integration tests.
#![allow(dead_code, clippy::excessive_precision)]

use stationary_ge::gof::{kolmogorov_survival, ks_statistic};

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// 15-point Kronrod estimate and its difference from the embedded 7-point
/// Gauss rule.
fn gk15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for j in 0..7 {
        let d = h * XGK[j];
        let s = f(c - d) + f(c + d);
        k += WGK[j] * s;
        if j % 2 == 1 {
            g += WG[j / 2] * s;
        }
    }
    (k * h, (k - g).abs() * h)
}

/// Adaptive Gauss–Kronrod quadrature on a finite interval with absolute
/// tolerance `tol`.
pub fn integrate<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, tol: f64) -> f64 {
    fn rec<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
        let (v, e) = gk15(f, a, b);
        if e <= tol || depth == 0 || (b - a).abs() < 1e-15 * (1.0 + a.abs()) {
            return v;
        }
        let m = 0.5 * (a + b);
        rec(f, a, m, 0.5 * tol, depth - 1) + rec(f, m, b, 0.5 * tol, depth - 1)
    }
    if a == b {
        return 0.0;
    }
    rec(&mut f, a, b, tol, 50)
}

/// `∫_a^∞ f` through `t = a + u/(1-u)`.
pub fn integrate_to_infinity<F: FnMut(f64) -> f64>(mut f: F, a: f64, tol: f64) -> f64 {
    integrate(
        |u| {
            if u >= 1.0 {
                return 0.0;
            }
            let w = 1.0 - u;
            let v = f(a + u / w) / (w * w);
            if v.is_finite() {
                v
            } else {
                0.0
            }
        },
        0.0,
        1.0,
        tol,
    )
}

/// Five-point central difference.
pub fn derivative<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2.0 * h)) / (12.0 * h)
}

/// Asymptotic one-sample KS p-value.
pub fn ks_p<F: Fn(f64) -> f64>(data: &[f64], cdf: F) -> (f64, f64) {
    let d = ks_statistic(data, cdf);
    (d, kolmogorov_survival((data.len() as f64).sqrt() * d))
}

/// Asymptotic two-sample KS p-value.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> f64 {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    x.sort_by(f64::total_cmp);
    y.sort_by(f64::total_cmp);
    let (n, m) = (x.len() as f64, y.len() as f64);
    let (mut i, mut j, mut d) = (0, 0, 0.0f64);
    while i < x.len() && j < y.len() {
        let t = x[i].min(y[j]);
        while i < x.len() && x[i] <= t {
            i += 1;
        }
        while j < y.len() && y[j] <= t {
            j += 1;
        }
        d = d.max((i as f64 / n - j as f64 / m).abs());
    }
    kolmogorov_survival((n * m / (n + m)).sqrt() * d)
}

/// Pearson correlation of `x_k` and `x_{k+lag}`.
pub fn lagged_correlation(x: &[f64], lag: usize) -> f64 {
    let a = &x[..x.len() - lag];
    let b = &x[lag..];
    let n = a.len() as f64;
    let (ma, mb) = (a.iter().sum::<f64>() / n, b.iter().sum::<f64>() / n);
    let (mut sab, mut saa, mut sbb) = (0.0, 0.0, 0.0);
    for (u, v) in a.iter().zip(b) {
        sab += (u - ma) * (v - mb);
        saa += (u - ma) * (u - ma);
        sbb += (v - mb) * (v - mb);
    }
    sab / (saa * sbb).sqrt()
}

pub fn median(v: &[f64]) -> f64 {
    let mut s = v.to_vec();
    s.sort_by(f64::total_cmp);
    let n = s.len();
    if n % 2 == 1 {
        s[n / 2]
    } else {
        0.5 * (s[n / 2 - 1] + s[n / 2])
    }
}

/// Masses of the absolutely continuous part (`∬ f₁ + f₂` over S1 ∪ S2) and
/// of the singular part (`∫ f₀ γ'`) of the lag-one pair law, by quadrature
/// in the uniform coordinates `u = 1 - e^{-λx}`, where the curve is
/// `v = u^{α₀/α₁}`.
pub fn pair_masses(p: &stationary_ge::ProcessParams, tol: f64) -> (f64, f64) {
    use stationary_ge::geprocess::{curve_gamma, curve_gamma_slope, pair_density, PairRegion};
    let lam = p.lambda();
    let to_x = |u: f64| -(-u).ln_1p() / lam;
    let jac = |u: f64| 1.0 / (lam * (1.0 - u));
    let g = p.gamma();
    let plane = |u: f64, v: f64, want: PairRegion| {
        let (r, f) = pair_density(to_x(u), to_x(v), p, 0.0);
        if r == want && f.is_finite() {
            f * jac(u) * jac(v)
        } else {
            0.0
        }
    };
    let ac = integrate(
        |u| {
            let c = u.powf(g);
            integrate(|v| plane(u, v, PairRegion::S2), 0.0, c, tol * 0.1)
                + integrate(|v| plane(u, v, PairRegion::S1), c, 1.0, tol * 0.1)
        },
        0.0,
        1.0,
        tol,
    );
    let singular = integrate(
        |u| {
            let x = to_x(u);
            let (_, f) = pair_density(x, curve_gamma(x, p), p, 1e-9);
            let v = f * curve_gamma_slope(x, p) * jac(u);
            if v.is_finite() {
                v
            } else {
                0.0
            }
        },
        0.0,
        1.0,
        tol,
    );
    (ac, singular)
}
