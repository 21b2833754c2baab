use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error("{0}")]
    Model(#[from] fsdist_core::Error),
    #[error("{0}")]
    Selection(#[from] crate::harness::SelectionError),
    #[error("{failed} of {total} laws failed")]
    LawsFailed { failed: usize, total: usize },
}

impl CliError {
    /// 2 for problems with the invocation or its inputs, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_)
            | CliError::Io { .. }
            | CliError::Format { .. }
            | CliError::Selection(_) => 2,
            CliError::Model(_) | CliError::LawsFailed { .. } => 1,
        }
    }
}
