use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum WorkbenchError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("malformed {what}: {msg}")]
    Parse { what: &'static str, msg: String },
    #[error("cannot access {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Domain(#[from] dade_core::Error),
}

impl WorkbenchError {
    pub fn parse(what: &'static str, msg: impl Into<String>) -> WorkbenchError {
        WorkbenchError::Parse { what, msg: msg.into() }
    }

    /// 1 for domain errors, including bound violations; 2 for usage and input errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            WorkbenchError::Domain(_) => 1,
            WorkbenchError::Usage(_) | WorkbenchError::Parse { .. } | WorkbenchError::Io { .. } => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, WorkbenchError>;
