use std::fmt;
use std::path::{Path, PathBuf};

use cartan_ds::Error;

/// Exit codes: 0 all certificates pass, 1 mathematical inconsistency,
/// 2 usage or input error, 3 resource cap exceeded.
pub const EXIT_INCONSISTENT: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CAP: u8 = 3;

#[derive(Debug)]
pub enum CliError {
    Core { context: String, source: Error },
    Io { path: PathBuf, source: std::io::Error },
    Document { path: PathBuf, line: usize, column: usize, message: String },
    Usage(String),
}

impl CliError {
    pub fn core(context: impl Into<String>, source: Error) -> Self {
        CliError::Core { context: context.into(), source }
    }

    pub fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io { path: path.to_path_buf(), source }
    }

    pub fn json(path: &Path, e: &serde_json::Error) -> Self {
        CliError::Document { path: path.to_path_buf(), line: e.line(), column: e.column(), message: e.to_string() }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core { source: Error::CapExceeded { .. } | Error::SearchExhausted(_), .. } => EXIT_CAP,
            _ => EXIT_USAGE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core { context, source } if context.is_empty() => write!(f, "{source}"),
            CliError::Core { context, source } => write!(f, "{context}: {source}"),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Document { path, line, column, message } => {
                write!(f, "{}:{line}:{column}: {message}", path.display())
            }
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

/// Attaches a context string to library errors.
pub trait Context<T> {
    fn context(self, what: impl FnOnce() -> String) -> Result<T, CliError>;
}

impl<T> Context<T> for Result<T, Error> {
    fn context(self, what: impl FnOnce() -> String) -> Result<T, CliError> {
        self.map_err(|e| CliError::core(what(), e))
    }
}
