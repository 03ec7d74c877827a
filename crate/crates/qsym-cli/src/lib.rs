//! Batch front end for the quantum-plane symmetry library.
//!
//! - `document` defines the TOML document model for symmetry instances and
//!   orbit queries, with exact scalar strings throughout.
//! - `commands` implements the subcommand logic behind the `qsym` binary;
//!   each command returns text, a JSON value, and a process exit code.
//! - Exit convention: `0` success, `1` verification failure or negative
//!   decision, `2` input validation error, `3` internal error.

pub mod commands;
pub mod document;

use thiserror::Error;

/// Errors surfaced to the command line, split by exit code.
#[derive(Error, Debug)]
pub enum CliError {
    /// Malformed or inconsistent input; exits with code 2.
    #[error("{0}")]
    Validation(String),
    /// Unexpected internal failure; exits with code 3.
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    /// The process exit code this error maps to.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}
