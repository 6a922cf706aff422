use thiserror::Error;

use crate::solvers::ThetaBracket;

#[derive(Clone, Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The interior-point iteration stopped before the certified gap reached
    /// the requested tolerance. `best` is the tightest bracket seen.
    #[error("solver failure: {message} (best bracket [{:.9}, {:.9}])", best.lower, best.upper)]
    SolverFailure {
        message: String,
        best: Box<ThetaBracket>,
    },

    #[error("resource limit exceeded: {what} (limit {limit})")]
    ResourceLimit { what: &'static str, limit: u64 },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
