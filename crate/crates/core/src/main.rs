use std::io::{ErrorKind, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use stationary_ge::cli::{self, Flags, IngestOptions};
use stationary_ge::geprocess::DEFAULT_TIE_TOL;
use stationary_ge::{Error, Model, ProcessParams, Transform};

#[derive(Parser)]
#[command(name = "stationary-ge", version, about = "Stationary GE process toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Simulate a path and print it one value per line
    Simulate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha0: f64,
        #[arg(long)]
        alpha1: f64,
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fit one model, optionally with bootstrap intervals
    Fit(DataArgs),
    /// Subsequence tests and autocorrelation bands under a fitted model
    Gof(DataArgs),
    /// Fit both models, compare, bootstrap and check
    Analyze(DataArgs),
}

#[derive(Args)]
struct DataArgs {
    path: PathBuf,
    #[arg(long, default_value = "equal")]
    model: Model,
    #[arg(long, default_value_t = 0.0)]
    shift: f64,
    #[arg(long, default_value_t = 1.0)]
    divisor: f64,
    /// 1-based column to read
    #[arg(long, default_value_t = 1)]
    column: usize,
    #[arg(long)]
    skip_header: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Bootstrap replicates
    #[arg(long)]
    boot: Option<usize>,
    #[arg(long, default_value_t = 0.95)]
    level: f64,
    #[arg(long, default_value_t = DEFAULT_TIE_TOL)]
    tie_tol: f64,
    /// Simulations behind each autocorrelation band
    #[arg(long, default_value_t = 5000)]
    band_sims: usize,
    /// Profile curve or contour grid table
    #[arg(long)]
    grid_out: Option<PathBuf>,
    /// JSON report (printed to stdout when absent)
    #[arg(long)]
    report_out: Option<PathBuf>,
}

impl DataArgs {
    fn flags(&self) -> Result<Flags, Error> {
        Ok(Flags {
            ingest: IngestOptions {
                column: self.column,
                transform: Transform::new(self.shift, self.divisor)?,
                skip_header: self.skip_header,
            },
            model: self.model,
            seed: self.seed,
            boot: self.boot,
            level: self.level,
            tie_tol: self.tie_tol,
            band_sims: self.band_sims,
            grid_out: self.grid_out.clone(),
            report_out: self.report_out.clone(),
        })
    }
}

// A closed pipe (e.g. `| head`) is not an error worth reporting.
fn to_stdout(bytes: &[u8]) -> Result<(), Error> {
    match std::io::stdout().lock().write_all(bytes) {
        Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn emit<T: serde::Serialize>(args: &DataArgs, report: &T) -> Result<(), Error> {
    if args.report_out.is_some() {
        return Ok(());
    }
    let text = serde_json::to_string_pretty(report).expect("report serializes");
    to_stdout((text + "\n").as_bytes())
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Simulate { n, alpha0, alpha1, lambda, seed, out } => {
            let params = ProcessParams::new(alpha0, alpha1, lambda)?;
            let s = cli::cmd_simulate(n, &params, seed, out.as_deref())?;
            if out.is_none() {
                let mut buf = Vec::new();
                cli::write_series(&mut buf, s.values())?;
                to_stdout(&buf)?;
            }
        }
        Command::Fit(args) => {
            let report = cli::cmd_fit(&args.path, args.model, &args.flags()?)?;
            emit(&args, &report)?;
        }
        Command::Gof(args) => {
            let report = cli::cmd_gof(&args.path, &args.flags()?)?;
            emit(&args, &report)?;
        }
        Command::Analyze(args) => {
            let report = cli::cmd_analyze(&args.path, &args.flags()?)?;
            emit(&args, &report)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
