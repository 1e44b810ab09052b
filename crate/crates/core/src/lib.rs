//! Stationary GE (generalized exponential) moving-maximum process.
//!
//! `X_k = max{Q₀(U_k), Q₁(U_{k-1})}` with i.i.d. uniform innovations is a
//! stationary, 1-dependent sequence with GE(α₀+α₁, λ) marginals. The crate
//! covers simulation ([`geprocess`]), the singular pair law and its copula,
//! running extremes and stopping times, profile maximum likelihood with a
//! parametric bootstrap ([`inference`]), a goodness-of-fit workflow
//! ([`gof`]) and the batch commands behind the binary ([`cli`]).

pub mod cli;
pub mod error;
pub mod gedist;
pub mod geprocess;
pub mod gof;
pub mod inference;
pub mod optim;
pub mod rng;
pub mod series;

pub use error::{Error, Result};
pub use gedist::{ge_cdf, ge_fit_iid, ge_log_pdf, ge_pdf, ge_quantile, ge_sample, GEParams, IidFit};
pub use geprocess::{simulate, simulate_traced, ProcessParams};
pub use gof::{goodness_of_fit, GofOptions, GofReport};
pub use inference::{bootstrap_ci, fit, FitOptions, FitReport, Model};
pub use series::{Series, Transform};
