use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("degenerate data: {0}")]
    Degenerate(String),

    #[error("maximum lies on the search boundary at {at}")]
    Boundary { at: f64 },

    #[error("optimizer did not converge after {evaluations} evaluations (best point {best:?}, value {value})")]
    Convergence {
        evaluations: usize,
        best: Vec<f64>,
        value: f64,
    },

    #[error("{failed} of {total} bootstrap replicates failed to refit")]
    BootstrapFailures { failed: usize, total: usize },

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    /// Process exit code for the command-line front-end.
    ///
    /// Usage errors are reported by the argument parser with code 2.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Boundary { .. } | Error::Convergence { .. } | Error::BootstrapFailures { .. } => 4,
            Error::InvalidParameter { .. } => 2,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
