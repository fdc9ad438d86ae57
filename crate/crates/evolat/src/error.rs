use std::path::PathBuf;

use evolat_core::Error as CoreError;
use thiserror::Error;

/// Everything the command line can fail with, grouped by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("invalid `{field}`: {message}")]
    Validation { field: String, message: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("golden mismatch in {file}:\n{diff}")]
    GoldenMismatch { file: String, diff: String },
}

impl CliError {
    pub fn validation(field: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Validation { field: field.into(), message: message.into() }
    }

    /// 1 usage, 2 bad input, 3 beyond the solvers' reach, 4 golden mismatch.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse { .. } | CliError::Validation { .. } | CliError::Io { .. } => 2,
            CliError::Core(e) => match e {
                CoreError::TooLarge(_)
                | CoreError::UnsupportedExtension(_)
                | CoreError::OutOfScope(_)
                | CoreError::CannotAdjoin => 3,
                _ => 2,
            },
            CliError::GoldenMismatch { .. } => 4,
        }
    }
}
