use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid order: {0}")]
    InvalidOrder(String),

    #[error("no convergence after {terms} terms (estimated error {est_abs_error:e})")]
    NonConvergence { terms: usize, est_abs_error: f64 },

    #[error("time mesh too short: {n_steps} steps, need at least {required}")]
    MeshTooShort { n_steps: usize, required: usize },

    #[error("power term exponent {0} is not integrable at the origin")]
    NonIntegrable(f64),

    #[error("invalid time {0}: must be strictly positive")]
    InvalidTime(f64),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("mesh mismatch: {0}")]
    MeshMismatch(String),

    #[error("data has nonzero mean {0:e}; no periodic antiderivative exists")]
    NonZeroMean(f64),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("history of {steps} steps exceeds cap {cap} and truncation is disabled")]
    HistoryOverflow { steps: usize, cap: usize },
}

impl Error {
    /// True for failures of a numerical procedure, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NonConvergence { .. } | Error::HistoryOverflow { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
