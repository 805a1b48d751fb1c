//! CLI-level errors with stable codes and exit classes.

use std::fmt;

use rpa_core::CoreError;

use crate::parser::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Parse(ParseError),
    Domain(CoreError),
    Name(String),
    DuplicateName(String),
    Type(String),
    UnknownSuite(String),
    BadIndex(u64),
}

impl CliError {
    /// Stable machine-readable code; domain errors reuse the library codes.
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "E_PARSE",
            CliError::Domain(e) => e.code(),
            CliError::Name(_) => "E_NAME",
            CliError::DuplicateName(_) => "E_DUP_NAME",
            CliError::Type(_) => "E_TYPE",
            CliError::UnknownSuite(_) => "E_UNKNOWN_SUITE",
            CliError::BadIndex(_) => "E_BAD_INDEX",
        }
    }

    /// Process exit code class: 2 for parse errors, 3 for domain errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            _ => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(e) => write!(f, "{e}"),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Name(n) => write!(f, "name `{n}` is not bound"),
            CliError::DuplicateName(n) => write!(f, "name `{n}` is already bound"),
            CliError::Type(msg) => write!(f, "{msg}"),
            CliError::UnknownSuite(n) => write!(f, "unknown fuzz suite `{n}`"),
            CliError::BadIndex(i) => write!(f, "evaluation index must be >= 1, got {i}"),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Domain(e)
    }
}
