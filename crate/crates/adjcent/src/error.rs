use std::fmt;
use std::io;

use adjcent_core::Error as GraphError;

use crate::io::LoadError;
use crate::sweep::SpecError;

/// Process exit status for each class of failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitKind {
    Usage = 1,
    Data = 2,
    Numeric = 3,
}

#[derive(Debug)]
pub struct CliError {
    pub kind: ExitKind,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            kind: ExitKind::Usage,
            message: message.into(),
        }
    }

    pub fn data(message: impl Into<String>) -> Self {
        Self {
            kind: ExitKind::Data,
            message: message.into(),
        }
    }

    pub fn numeric(message: impl Into<String>) -> Self {
        Self {
            kind: ExitKind::Numeric,
            message: message.into(),
        }
    }

    pub fn code(&self) -> i32 {
        self.kind as i32
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

/// Exit class of a library error.
pub fn classify(err: &GraphError) -> ExitKind {
    match err {
        GraphError::Computability { .. }
        | GraphError::OutsideSafeInterval { .. }
        | GraphError::NonFiniteValue(_) => ExitKind::Numeric,
        GraphError::InvalidParameter(_) => ExitKind::Usage,
        _ => ExitKind::Data,
    }
}

impl From<GraphError> for CliError {
    fn from(err: GraphError) -> Self {
        Self {
            kind: classify(&err),
            message: err.to_string(),
        }
    }
}

impl From<LoadError> for CliError {
    fn from(err: LoadError) -> Self {
        Self::data(err.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(err: io::Error) -> Self {
        Self::data(err.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(err: csv::Error) -> Self {
        Self::data(err.to_string())
    }
}

impl From<SpecError> for CliError {
    fn from(err: SpecError) -> Self {
        Self::usage(err.to_string())
    }
}
