//! Command implementations behind the `zetaforge` binary. Each command
//! returns [`OutputRecord`]s so that it can be driven from tests as well.

pub mod commands;
pub mod record;

pub use commands::*;
pub use record::{format_number, OutputRecord, SCHEMA_VERSION};

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] zetaforge::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Process exit code: every error is an input or hypothesis problem.
    /// Exit code 1 is reserved for batches with failed rows.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
