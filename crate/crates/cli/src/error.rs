//! CLI error classes and their exit codes.
//!
//! Diagnostics go to stderr; process exit codes are stable per class:
//! parse errors 2, configuration errors 3, empty results 4.

use std::error::Error;
use std::fmt;

#[derive(Debug)]
pub enum CliError {
    /// Malformed input data (corpus lines, eval records, embeddings, ...).
    Parse(String),
    /// Bad flag values, missing files, inconsistent options.
    Config(String),
    /// Structurally valid inputs that leave nothing to work on.
    Empty(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Config(_) => 3,
            CliError::Empty(_) => 4,
        }
    }

    pub fn parse(message: impl Into<String>) -> CliError {
        CliError::Parse(message.into())
    }

    pub fn config(message: impl Into<String>) -> CliError {
        CliError::Config(message.into())
    }

    pub fn empty(message: impl Into<String>) -> CliError {
        CliError::Empty(message.into())
    }

    /// Parse error pointing at a 1-based line of a named file.
    pub fn at_line(file: &str, line: usize, message: impl fmt::Display) -> CliError {
        CliError::Parse(format!("{file}:{line}: {message}"))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) | CliError::Config(m) | CliError::Empty(m) => f.write_str(m),
        }
    }
}

impl Error for CliError {}
