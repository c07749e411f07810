//! Error type carrying the process exit code.

use std::fmt;

use gamma2_core::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    /// A verification criterion failed.
    Verify = 1,
    /// Unreadable input, malformed JSON or an invalid parameter range.
    Input = 2,
    /// Input data violating the curvature-tensor symmetries.
    Symmetry = 3,
    /// An identity residual above tolerance under `--check`.
    Check = 4,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub code: ExitCode,
    pub message: String,
}

impl Failure {
    pub fn new(code: ExitCode, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }

    pub fn input(message: impl Into<String>) -> Self {
        Self::new(ExitCode::Input, message)
    }

    pub fn symmetry(message: impl Into<String>) -> Self {
        Self::new(ExitCode::Symmetry, message)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for Failure {}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotSymmetric { .. } | Error::NotCurvatureStructure(_) => ExitCode::Symmetry,
            _ => ExitCode::Input,
        };
        Self::new(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Self::input(e.to_string())
    }
}
