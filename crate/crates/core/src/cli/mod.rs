//! Batch workflows behind the `stationary-ge` binary.
//!
//! Each `cmd_*` function returns its report so it can be driven from code as
//! well as from the command line; the binary only parses flags and prints.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geprocess::{simulate, ProcessParams, DEFAULT_TIE_TOL};
use crate::gof::{goodness_of_fit, GofOptions, GofReport};
use crate::inference::{bootstrap_ci, fit, FitOptions, FitReport, Model};
pub use crate::series::Transform;
use crate::series::Series;

/// How to read a delimited numeric file.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IngestOptions {
    /// 1-based column index.
    pub column: usize,
    pub transform: Transform,
    pub skip_header: bool,
}

impl Default for IngestOptions {
    fn default() -> Self {
        IngestOptions {
            column: 1,
            transform: Transform::IDENTITY,
            skip_header: false,
        }
    }
}

/// Reads one column of a comma- or whitespace-delimited file and applies the
/// transform. Blank lines and lines starting with `#` are skipped.
pub fn ingest(path: &Path, opts: &IngestOptions) -> Result<Series> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_records(&text, opts)
}

/// [`ingest`] on in-memory text.
pub fn parse_records(text: &str, opts: &IngestOptions) -> Result<Series> {
    if opts.column == 0 {
        return Err(Error::param("column", "columns are numbered from 1"));
    }
    let mut values = Vec::new();
    let mut header_pending = opts.skip_header;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if header_pending {
            header_pending = false;
            continue;
        }
        let field = if trimmed.contains(',') {
            trimmed.split(',').map(str::trim).nth(opts.column - 1)
        } else {
            trimmed.split_whitespace().nth(opts.column - 1)
        };
        let field = field.ok_or_else(|| Error::Parse {
            line,
            reason: format!("no column {}", opts.column),
        })?;
        let x: f64 = field.parse().map_err(|_| Error::Parse {
            line,
            reason: format!("`{field}` is not a number"),
        })?;
        let y = opts.transform.apply(x);
        if !(y.is_finite() && y > 0.0) {
            return Err(Error::Parse {
                line,
                reason: format!("value {x} transforms to {y}, which is not positive"),
            });
        }
        values.push(y);
    }
    if values.is_empty() {
        return Err(Error::Parse {
            line: 0,
            reason: "no data records".into(),
        });
    }
    Ok(Series::with_transform(values, opts.transform))
}

/// Writes values one per line in shortest round-trip form.
pub fn write_series<W: Write>(mut out: W, values: &[f64]) -> Result<()> {
    for v in values {
        writeln!(out, "{v}")?;
    }
    Ok(())
}

/// Simulates `n` observations and writes them to `out` (or returns them).
pub fn cmd_simulate(n: usize, params: &ProcessParams, seed: u64, out: Option<&Path>) -> Result<Series> {
    if n == 0 {
        return Err(Error::param("n", "must be at least 1"));
    }
    let s = simulate(n, params, seed);
    if let Some(path) = out {
        let file = fs::File::create(path)?;
        write_series(std::io::BufWriter::new(file), s.values())?;
    }
    Ok(s)
}

/// Flags shared by `fit`, `gof` and `analyze`.
#[derive(Debug, Clone, PartialEq)]
pub struct Flags {
    pub ingest: IngestOptions,
    pub model: Model,
    pub seed: u64,
    /// Bootstrap replicates; `None` skips the bootstrap (`analyze` defaults to 1000).
    pub boot: Option<usize>,
    pub level: f64,
    pub tie_tol: f64,
    pub band_sims: usize,
    pub grid_out: Option<PathBuf>,
    pub report_out: Option<PathBuf>,
}

impl Default for Flags {
    fn default() -> Self {
        Flags {
            ingest: IngestOptions::default(),
            model: Model::Equal,
            seed: 0,
            boot: None,
            level: 0.95,
            tie_tol: DEFAULT_TIE_TOL,
            band_sims: 5000,
            grid_out: None,
            report_out: None,
        }
    }
}

impl Flags {
    fn fit_options(&self) -> FitOptions {
        FitOptions {
            tie_tol: self.tie_tol,
            ..FitOptions::default()
        }
    }

    fn gof_options(&self) -> GofOptions {
        GofOptions {
            band_sims: self.band_sims,
            seed: self.seed,
            ..GofOptions::default()
        }
    }
}

fn fit_with_boot(data: &[f64], model: Model, flags: &Flags, boot: Option<usize>) -> Result<FitReport> {
    let opts = flags.fit_options();
    let report = fit(data, model, &opts)?;
    match boot {
        Some(b) => bootstrap_ci(data, &report, b, flags.level, flags.seed, &opts),
        None => Ok(report),
    }
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Io(e.to_string()))?;
    fs::write(path, text + "\n")?;
    Ok(())
}

/// Fits `model`, optionally bootstraps, and writes the grid table and report
/// if requested.
pub fn cmd_fit(path: &Path, model: Model, flags: &Flags) -> Result<FitReport> {
    let series = ingest(path, &flags.ingest)?;
    let report = fit_with_boot(series.values(), model, flags, flags.boot)?;
    if let Some(out) = &flags.grid_out {
        if let Some(table) = report.grid_table() {
            fs::write(out, table)?;
        }
    }
    if let Some(out) = &flags.report_out {
        write_json(out, &report)?;
    }
    Ok(report)
}

/// Report of the `gof` subcommand: the fit the checks were run under, and
/// the checks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GofCommandReport {
    pub fit: FitReport,
    pub gof: GofReport,
}

/// Fits `flags.model` and runs the goodness-of-fit checks under it.
pub fn cmd_gof(path: &Path, flags: &Flags) -> Result<GofCommandReport> {
    let series = ingest(path, &flags.ingest)?;
    let fit = fit_with_boot(series.values(), flags.model, flags, None)?;
    let gof = goodness_of_fit(&series, &fit.estimates, &flags.gof_options())?;
    let report = GofCommandReport { fit, gof };
    if let Some(out) = &flags.report_out {
        write_json(out, &report)?;
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelComparison {
    pub equal_loglik: f64,
    pub unequal_loglik: f64,
    /// `unequal_loglik - equal_loglik`; never negative.
    pub difference: f64,
}

/// Consolidated report of the `analyze` pipeline.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub transform: Transform,
    pub n: usize,
    pub equal: FitReport,
    pub unequal: FitReport,
    pub comparison: ModelComparison,
    /// Model the goodness-of-fit checks were run under.
    pub gof_model: Model,
    pub gof: GofReport,
}

/// Ingest, fit both models with bootstrap intervals, compare likelihoods and
/// check the `flags.model` fit.
pub fn cmd_analyze(path: &Path, flags: &Flags) -> Result<AnalysisReport> {
    let series = ingest(path, &flags.ingest)?;
    let boot = Some(flags.boot.unwrap_or(1000));
    let equal = fit_with_boot(series.values(), Model::Equal, flags, boot)?;
    let unequal = fit_with_boot(series.values(), Model::Unequal, flags, boot)?;
    let chosen = match flags.model {
        Model::Equal => &equal,
        Model::Unequal => &unequal,
    };
    let gof = goodness_of_fit(&series, &chosen.estimates, &flags.gof_options())?;
    if let Some(out) = &flags.grid_out {
        if let Some(table) = unequal.grid_table() {
            fs::write(out, table)?;
        }
    }
    let report = AnalysisReport {
        transform: series.transform(),
        n: series.len(),
        comparison: ModelComparison {
            equal_loglik: equal.loglik,
            unequal_loglik: unequal.loglik,
            difference: unequal.loglik - equal.loglik,
        },
        gof_model: flags.model,
        equal,
        unequal,
        gof,
    };
    if let Some(out) = &flags.report_out {
        write_json(out, &report)?;
    }
    Ok(report)
}
