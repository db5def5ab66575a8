//! Crate-wide error type and exit-code mapping for the CLI.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite input to {what}: {value}")]
    NonFiniteInput { what: &'static str, value: f64 },

    #[error("invalid data: {0}")]
    InvalidData(String),

    #[error("{path}: row {row}, column {column}: {reason}")]
    Parse {
        path: String,
        row: usize,
        column: String,
        reason: String,
    },

    #[error("degenerate kernel window at v = {v}: kernel mass {mass:.3e} below {threshold:.1e}")]
    DegenerateWindow { v: f64, mass: f64, threshold: f64 },

    #[error("degenerate data: {0}")]
    DegenerateData(String),

    #[error(
        "variance estimate degenerate: {dropped} of {contributing} contributing terms dropped \
         as ill-conditioned"
    )]
    VarianceDegenerate { dropped: usize, contributing: usize },

    #[error("variance for component {index} is not positive ({value:.6e})")]
    NonPositiveVariance { index: usize, value: f64 },

    #[error("restriction is rank-deficient: {0}")]
    RankDeficient(String),

    #[error("{failed} of {total} bootstrap replicates failed (limit {limit_percent}%)")]
    BootstrapFailures {
        failed: usize,
        total: usize,
        limit_percent: u32,
    },

    #[error("{failed} of {total} Monte Carlo replications failed (limit {limit_percent}%)")]
    ReplicationFailures {
        failed: usize,
        total: usize,
        limit_percent: u32,
    },

    #[error("invalid quantile input: {0}")]
    InvalidQuantile(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Process exit code, one per error class: 2 configuration/usage,
    /// 3 data validation and parsing, 4 estimation degeneracies,
    /// 5 inference and resampling failures, 6 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            Error::NonFiniteInput { .. } | Error::InvalidData(_) | Error::Parse { .. } => 3,
            Error::DegenerateWindow { .. }
            | Error::DegenerateData(_)
            | Error::VarianceDegenerate { .. }
            | Error::NonPositiveVariance { .. } => 4,
            Error::RankDeficient(_)
            | Error::BootstrapFailures { .. }
            | Error::ReplicationFailures { .. }
            | Error::InvalidQuantile(_) => 5,
            Error::Io(_) | Error::Csv(_) => 6,
        }
    }
}
