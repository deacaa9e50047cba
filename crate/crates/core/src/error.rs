use thiserror::Error;

/// Errors raised by the toolkit. Capacity errors are distinct so batteries can
/// report a capped computation as skipped rather than failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("capacity exceeded: {what} has size {size}, cap is {cap}")]
    Capacity {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("degenerate input: {0}")]
    Degenerate(String),
}

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
        if size > cap {
            Err(Error::Capacity { what, size, cap })
        } else {
            Ok(())
        }
    }

    /// Short machine-readable tag used in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::Validation(_) => "validation",
            Error::Capacity { .. } => "capacity",
            Error::Degenerate(_) => "degenerate",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
