//! The two-parameter generalized exponential distribution GE(α, λ) with
//! CDF `(1 - e^{-λt})^α` on `t > 0`.

use rand::distr::Open01;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::optim::golden_section_max;
use crate::rng;

/// `ln(1 - e^{-x})` for `x > 0`, accurate at both ends of the range.
#[inline]
pub fn log1mexp(x: f64) -> f64 {
    if x <= std::f64::consts::LN_2 {
        (-(-x).exp_m1()).ln()
    } else {
        (-(-x).exp()).ln_1p()
    }
}

/// Shape and scale of a GE law.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawGe")]
pub struct GEParams {
    shape: f64,
    scale: f64,
}

#[derive(Deserialize)]
struct RawGe {
    shape: f64,
    scale: f64,
}

impl TryFrom<RawGe> for GEParams {
    type Error = Error;
    fn try_from(r: RawGe) -> Result<Self> {
        GEParams::new(r.shape, r.scale)
    }
}

pub(crate) fn check_positive(name: &'static str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::param(name, format!("must be finite and > 0, got {v}")))
    }
}

impl GEParams {
    pub fn new(shape: f64, scale: f64) -> Result<Self> {
        check_positive("shape", shape)?;
        check_positive("scale", scale)?;
        Ok(GEParams { shape, scale })
    }

    pub fn shape(&self) -> f64 {
        self.shape
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }
}

pub fn ge_cdf(t: f64, p: &GEParams) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    (p.shape * log1mexp(p.scale * t)).exp()
}

pub fn ge_log_pdf(t: f64, p: &GEParams) -> f64 {
    if t <= 0.0 {
        return f64::NEG_INFINITY;
    }
    let lt = p.scale * t;
    p.shape.ln() + p.scale.ln() - lt + (p.shape - 1.0) * log1mexp(lt)
}

pub fn ge_pdf(t: f64, p: &GEParams) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    ge_log_pdf(t, p).exp()
}

/// Inverse CDF. Fails for `u` outside the open unit interval.
pub fn ge_quantile(u: f64, p: &GEParams) -> Result<f64> {
    if !(u > 0.0 && u < 1.0) {
        return Err(Error::Domain(format!("quantile level {u} not in (0, 1)")));
    }
    Ok(quantile_of_log(u.ln(), p.shape, p.scale))
}

/// `-ln(1 - e^{log_u / shape}) / scale`, i.e. the quantile at `u` computed
/// from `ln u` without forming `u^{1/shape}` explicitly.
#[inline]
pub(crate) fn quantile_of_log(log_u: f64, shape: f64, scale: f64) -> f64 {
    -log1mexp(-log_u / shape) / scale
}

/// `n` i.i.d. draws by inversion, reproducible from `seed`.
pub fn ge_sample(n: usize, p: &GEParams, seed: u64) -> Vec<f64> {
    let mut rng = rng::seeded(seed);
    ge_sample_with(&mut rng, n, p)
}

pub fn ge_sample_with<R: Rng + ?Sized>(rng: &mut R, n: usize, p: &GEParams) -> Vec<f64> {
    (0..n)
        .map(|_| {
            let u: f64 = rng.sample(Open01);
            quantile_of_log(u.ln(), p.shape, p.scale)
        })
        .collect()
}

/// Maximum-likelihood fit of an i.i.d. GE sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IidFit {
    pub params: GEParams,
    pub loglik: f64,
    /// The maximizer sits at an edge of the scale bracket.
    pub boundary: bool,
}

/// Default scale bracket `[0.01/mean, 100/mean]`.
pub fn default_scale_bracket(data: &[f64]) -> (f64, f64) {
    let mean = data.iter().sum::<f64>() / data.len() as f64;
    (0.01 / mean, 100.0 / mean)
}

struct IidProfile<'a> {
    data: &'a [f64],
    sum: f64,
}

impl IidProfile<'_> {
    fn log_sum(&self, scale: f64) -> f64 {
        self.data.iter().map(|&x| log1mexp(scale * x)).sum()
    }

    fn shape_at(&self, scale: f64) -> f64 {
        -(self.data.len() as f64) / self.log_sum(scale)
    }

    fn value(&self, scale: f64) -> f64 {
        let n = self.data.len() as f64;
        let s = self.log_sum(scale);
        let shape = -n / s;
        n * shape.ln() + n * scale.ln() - scale * self.sum - n - s
    }

    /// d/dθ of the profile; by the envelope argument this is the partial
    /// derivative of the log-likelihood at the profiled shape.
    fn slope(&self, scale: f64) -> f64 {
        let n = self.data.len() as f64;
        let shape = self.shape_at(scale);
        let tail: f64 = self
            .data
            .iter()
            .map(|&x| x / (scale * x).exp_m1())
            .sum();
        n / scale - self.sum + (shape - 1.0) * tail
    }
}

/// Profile maximum likelihood for GE(β, θ).
///
/// For fixed θ the shape has the closed form `β̂(θ) = -n / Σ ln(1 - e^{-θx})`.
/// The profile is maximized by golden section in `ln θ` over `bracket`
/// (default [`default_scale_bracket`]), and the result is then polished by
/// bisection on the profile slope inside the final golden bracket.
pub fn ge_fit_iid(data: &[f64], bracket: Option<(f64, f64)>) -> Result<IidFit> {
    if data.len() < 3 {
        return Err(Error::Domain(format!(
            "need at least 3 observations, got {}",
            data.len()
        )));
    }
    if let Some(bad) = data.iter().find(|&&x| !(x > 0.0 && x.is_finite())) {
        return Err(Error::Domain(format!("observation {bad} is not positive")));
    }
    let first = data[0];
    if data.iter().all(|&x| x == first) {
        return Err(Error::Degenerate("all observations are identical".into()));
    }
    let (lo, hi) = bracket.unwrap_or_else(|| default_scale_bracket(data));
    check_positive("bracket lower end", lo)?;
    check_positive("bracket upper end", hi)?;
    if lo >= hi {
        return Err(Error::param("bracket", format!("empty interval [{lo}, {hi}]")));
    }

    let prof = IidProfile {
        data,
        sum: data.iter().sum(),
    };
    let (llo, lhi) = (lo.ln(), hi.ln());
    let g = golden_section_max(|t| prof.value(t.exp()), llo, lhi, 1e-9);
    let edge = 1e-6 * (lhi - llo).max(1.0);
    let boundary = g.x - llo < edge || lhi - g.x < edge;

    let mut scale = g.x.exp();
    if !boundary {
        let (mut a, mut b) = ((g.bracket.0 - 1e-7).exp(), (g.bracket.1 + 1e-7).exp());
        let (sa, sb) = (prof.slope(a), prof.slope(b));
        if sa > 0.0 && sb < 0.0 {
            for _ in 0..80 {
                let m = 0.5 * (a + b);
                if prof.slope(m) > 0.0 {
                    a = m;
                } else {
                    b = m;
                }
            }
            let polished = 0.5 * (a + b);
            if prof.value(polished) >= prof.value(scale) - 1e-9 {
                scale = polished;
            }
        }
    }
    let shape = prof.shape_at(scale);
    let params = GEParams::new(shape, scale)?;
    let loglik = data.iter().map(|&x| ge_log_pdf(x, &params)).sum();
    Ok(IidFit {
        params,
        loglik,
        boundary,
    })
}
