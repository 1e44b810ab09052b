//! Maximum-likelihood fitting of the GE process.
//!
//! Two models are supported: equal shapes (`α₀ = α₁`, one-dimensional
//! profile in λ) and unequal shapes (two-dimensional profile in `(γ, λ)`).
//! Both profile the shape out in closed form, see [`likelihood`].

mod anchor;
mod bootstrap;
mod case1;
mod case2;
pub mod likelihood;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub use bootstrap::{bootstrap_ci, percentile};
pub use case1::fit_case1;
pub use case2::{fit_case2, fit_case2_fixed_gamma};
pub use likelihood::{
    chain_loglik, profile_alpha1_case2, profile_alpha_case1, profile_loglik_case1,
    profile_loglik_case2, TieSets,
};

use crate::error::Result;
use crate::geprocess::{ProcessParams, DEFAULT_TIE_TOL};

/// Which shape constraint a fit imposes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    /// α₀ = α₁
    Equal,
    /// α₀ and α₁ free
    Unequal,
}

impl std::str::FromStr for Model {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "equal" => Ok(Model::Equal),
            "unequal" => Ok(Model::Unequal),
            _ => Err(format!("unknown model `{s}` (expected equal or unequal)")),
        }
    }
}

/// Knobs shared by both fits and their bootstrap refits.
#[derive(Debug, Clone, PartialEq)]
pub struct FitOptions {
    pub tie_tol: f64,
    /// Log-spaced λ grid density over `[0.01/mean, 100/mean]`.
    pub lambda_points_per_decade: usize,
    /// Number of log-spaced γ values over `gamma_range`.
    pub gamma_points: usize,
    pub gamma_range: (f64, f64),
    /// Start `(γ, λ)` for the unequal-shape simplex in place of the grid scan.
    pub init: Option<(f64, f64)>,
    pub max_evaluations: usize,
    /// Keep the profile curve / contour grid in the report.
    pub keep_grid: bool,
}

impl Default for FitOptions {
    fn default() -> Self {
        FitOptions {
            tie_tol: DEFAULT_TIE_TOL,
            lambda_points_per_decade: 64,
            gamma_points: 64,
            gamma_range: (1.0 / 20.0, 20.0),
            init: None,
            max_evaluations: 4000,
            keep_grid: true,
        }
    }
}

pub(crate) fn log_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    if points < 2 {
        return vec![(0.5 * (a + b)).exp()];
    }
    (0..points)
        .map(|i| (a + (b - a) * i as f64 / (points - 1) as f64).exp())
        .collect()
}

pub(crate) fn lambda_grid(lo: f64, hi: f64, per_decade: usize) -> Vec<f64> {
    let decades = (hi / lo).log10();
    let points = (decades * per_decade as f64).round() as usize + 1;
    log_grid(lo, hi, points.max(3))
}

/// Percentile interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lower: f64,
    pub upper: f64,
}

impl Interval {
    pub fn contains(&self, v: f64) -> bool {
        self.lower <= v && v <= self.upper
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}

/// What the optimizer did.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct OptimizerTrace {
    pub evaluations: usize,
    /// Final golden-section bracket in λ (equal shapes or fixed γ).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bracket: Option<(f64, f64)>,
    /// Final simplex vertices as `(γ, λ)` (unequal shapes).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simplex: Option<Vec<(f64, f64)>>,
    /// Starting point of the simplex run that won.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub start: Option<(f64, f64)>,
    /// The λ grid had to be widened because the maximum sat on its edge.
    pub widened: bool,
    /// The winning point came from the on-curve pairs rather than a search.
    #[serde(default)]
    pub anchored: bool,
    /// Pairs on the singular curve at the estimate (unequal shapes).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub singular_pairs: Option<usize>,
}

/// `h(λ)` on the scan grid.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct ProfileCurve {
    pub lambda: Vec<f64>,
    pub loglik: Vec<f64>,
}

impl ProfileCurve {
    pub fn argmax(&self) -> Option<usize> {
        argmax(&self.loglik)
    }

    /// Comma-separated table with header `lambda,profile_loglik`.
    pub fn to_table(&self) -> String {
        let mut out = String::from("lambda,profile_loglik\n");
        for (l, h) in self.lambda.iter().zip(&self.loglik) {
            let _ = writeln!(out, "{l},{h}");
        }
        out
    }
}

/// Profile log-likelihood over the `(γ, λ)` grid, `values[i * lambda.len() + j]`
/// at `(gamma[i], lambda[j])`.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct ContourGrid {
    pub gamma: Vec<f64>,
    pub lambda: Vec<f64>,
    pub values: Vec<f64>,
}

impl ContourGrid {
    pub fn value(&self, gi: usize, li: usize) -> f64 {
        self.values[gi * self.lambda.len() + li]
    }

    pub fn argmax(&self) -> Option<(usize, usize)> {
        argmax(&self.values).map(|k| (k / self.lambda.len(), k % self.lambda.len()))
    }

    /// Long-format table with header `gamma,lambda,profile_loglik`.
    pub fn to_table(&self) -> String {
        let mut out = String::from("gamma,lambda,profile_loglik\n");
        for (i, g) in self.gamma.iter().enumerate() {
            for (j, l) in self.lambda.iter().enumerate() {
                let _ = writeln!(out, "{g},{l},{}", self.value(i, j));
            }
        }
        out
    }
}

pub(crate) fn argmax(v: &[f64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| x.is_finite())
        .max_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
}

/// Result of a fit, optionally carrying bootstrap intervals.
///
/// Serializes with the fixed field names `model`, `alpha0`, `alpha1`,
/// `lambda`, `loglik`, `ci`, `B`, `level`, `seed`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitReport {
    pub model: Model,
    #[serde(flatten)]
    pub estimates: ProcessParams,
    pub loglik: f64,
    /// Keyed by `alpha0`, `alpha1`, `lambda`.
    pub ci: Option<BTreeMap<String, Interval>>,
    #[serde(rename = "B")]
    pub replicates: Option<usize>,
    pub level: Option<f64>,
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub failed_replicates: Option<usize>,
    pub trace: OptimizerTrace,
    #[serde(skip)]
    pub profile: Option<ProfileCurve>,
    #[serde(skip)]
    pub contour: Option<ContourGrid>,
}

impl FitReport {
    pub(crate) fn new(model: Model, estimates: ProcessParams, loglik: f64, trace: OptimizerTrace) -> Self {
        FitReport {
            model,
            estimates,
            loglik,
            ci: None,
            replicates: None,
            level: None,
            seed: None,
            failed_replicates: None,
            trace,
            profile: None,
            contour: None,
        }
    }

    pub fn interval(&self, name: &str) -> Option<Interval> {
        self.ci.as_ref().and_then(|c| c.get(name).copied())
    }

    /// Plot table: the λ profile (equal shapes) or the `(γ, λ)` grid.
    pub fn grid_table(&self) -> Option<String> {
        self.contour
            .as_ref()
            .map(ContourGrid::to_table)
            .or_else(|| self.profile.as_ref().map(ProfileCurve::to_table))
    }
}

/// Fits `model` with `opts`.
pub fn fit(data: &[f64], model: Model, opts: &FitOptions) -> Result<FitReport> {
    match model {
        Model::Equal => fit_case1(data, opts),
        Model::Unequal => fit_case2(data, opts),
    }
}
