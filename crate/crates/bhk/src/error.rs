use std::path::PathBuf;

/// Process exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExitStatus {
    Success = 0,
    /// Bad input, or a pair that is not adequate.
    Failure = 1,
    /// Two computations that must agree did not: a bug.
    CrossCheck = 2,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Semantic(bhk_core::Error),
    #[error("{0}")]
    Core(bhk_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn semantic(e: bhk_core::Error) -> Self {
        if e.is_internal() {
            CliError::Core(e)
        } else {
            CliError::Semantic(e)
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "parse",
            CliError::Semantic(_) => "semantic",
            CliError::Core(e) if e.is_internal() => "internal",
            CliError::Core(_) => "computation",
            CliError::Io { .. } => "io",
        }
    }

    pub fn exit_status(&self) -> ExitStatus {
        match self {
            CliError::Core(e) if e.is_internal() => ExitStatus::CrossCheck,
            _ => ExitStatus::Failure,
        }
    }
}

impl From<bhk_core::Error> for CliError {
    fn from(e: bhk_core::Error) -> Self {
        CliError::Core(e)
    }
}
