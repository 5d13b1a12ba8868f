//! Command implementations behind the `bcast` binary.
//!
//! Exit codes: 0 success (a hit time budget is reported in the output, not
//! as a failure), 1 other errors, 2 usage or parse errors, 3 disconnected
//! graph where α_b is required, 4 hypothesis violation, 5 verification
//! failure.

use std::io::Write;
use std::path::Path;

use bcast_core::Error;
use thiserror::Error as ThisError;

pub mod args;
pub mod commands;
pub mod sweep;

/// Version tag carried by every JSON document and CSV row.
pub const SCHEMA: u32 = 1;

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Core(#[from] Error),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    /// Output has already been written; only the exit code remains.
    #[error("{0}")]
    Verification(String),
}

impl CliError {
    pub fn io(path: &Path, e: std::io::Error) -> Self {
        CliError::Io { path: path.display().to_string(), message: e.to_string() }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io { .. } => 1,
            CliError::Verification(_) => 5,
            CliError::Core(e) => match e {
                Error::Parse { .. }
                | Error::VertexOutOfRange { .. }
                | Error::SelfLoop(_)
                | Error::DuplicateEdge(..)
                | Error::InvalidParameter(_)
                | Error::SizeMismatch { .. }
                | Error::EmptyGraph => 2,
                Error::Disconnected => 3,
                Error::Hypothesis(_) | Error::NotAPacking(..) => 4,
                Error::CapExceeded { .. } | Error::PathTooLong { .. } | Error::Degenerate(_) => 1,
            },
        }
    }
}

/// Writes `text` to `path`, or to stdout when `path` is `None`.
pub fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::io(p, e)),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| CliError::io(Path::new("<stdout>"), e))
        }
    }
}

pub fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output types serialize") + "\n"
}
