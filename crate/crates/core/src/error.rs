use thiserror::Error;

use crate::driver::RunRecord;

/// Error type shared by the simulation, cost, and compilation layers.
///
/// The variants mirror how callers are expected to react: `Config` means the
/// request itself is out of supported bounds, `Usage` means the arguments are
/// structurally inconsistent, and `Numerical` means a computation left its
/// valid domain (for example a density matrix that is no longer positive
/// semidefinite).
#[derive(Debug, Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("numerical error: {0}")]
    Numerical(String),

    /// Training hit a non-finite cost or gradient. The record of all fully
    /// completed steps is kept so callers can persist partial results.
    #[error("training aborted at step {step}, epoch {epoch}: {reason}")]
    TrainingAborted {
        step: usize,
        epoch: usize,
        reason: String,
        completed: Box<RunRecord>,
    },
}

impl Error {
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
