//! Library side of the `excl` tool: input loading, report documents and the
//! reference suite. The binary in `main.rs` is a thin clap wrapper.

pub mod input;
pub mod report;
pub mod suite;

use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_CLAIM_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_SOLVER_FAILURE: u8 = 3;
pub const EXIT_RESOURCE_LIMIT: u8 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },

    #[error("{}: {source}", path.display())]
    Input {
        path: PathBuf,
        source: exclusivity::Error,
    },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] exclusivity::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Usage(_) => EXIT_USAGE,
            CliError::Input { source, .. } | CliError::Core(source) => core_exit_code(source),
        }
    }
}

pub fn core_exit_code(err: &exclusivity::Error) -> u8 {
    use exclusivity::Error::*;
    match err {
        InvalidParameter(_) | Parse { .. } => EXIT_USAGE,
        SolverFailure { .. } => EXIT_SOLVER_FAILURE,
        ResourceLimit { .. } => EXIT_RESOURCE_LIMIT,
    }
}
