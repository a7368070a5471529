use std::path::PathBuf;

use thiserror::Error;

/// Everything that ends a command early, grouped by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{line}: {message}")]
    Parse { path: String, line: usize, message: String },
    #[error("{0}")]
    Input(String),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{what} is capped at n <= {max}, got n = {n} (set GAMMA_MAX_N to raise the cap)")]
    Cap { what: &'static str, n: usize, max: usize },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Cap { .. } => exit::CAP,
            _ => exit::INPUT,
        }
    }
}

impl From<gamma_core::Error> for CliError {
    fn from(e: gamma_core::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

pub mod exit {
    pub const OK: u8 = 0;
    pub const VERIFICATION: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const CAP: u8 = 3;
}
