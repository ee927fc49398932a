//! Ideal files, subcommands and exit codes.

mod command;
mod parse;

pub use command::{
    oracle_compare, run_command, Command, OracleComparison, Outcome, OutputFormat, RunConfig, SliceMismatch, Status,
};
pub use parse::{parse_ideal, parse_ideal_file, IdealFile, ParseError, ParseErrorKind};

use std::fmt;

/// Exit status for success or a property that holds.
pub const EXIT_OK: i32 = 0;
/// Exit status for a property that fails.
pub const EXIT_PROPERTY_FALSE: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;
/// Trials exhausted, non-Artinian result, degree ceiling.
pub const EXIT_COMPUTATION_ERROR: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Input,
    Computation,
}

/// An error tagged with the module it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub kind: ErrorKind,
    pub module: &'static str,
    pub message: String,
}

impl CliError {
    pub fn new(kind: ErrorKind, module: &'static str, message: impl Into<String>) -> Self {
        Self { kind, module, message: message.into() }
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind {
            ErrorKind::Input => EXIT_INPUT_ERROR,
            ErrorKind::Computation => EXIT_COMPUTATION_ERROR,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.module, self.message)
    }
}

impl std::error::Error for CliError {}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::new(ErrorKind::Input, "io", e.to_string())
    }
}
