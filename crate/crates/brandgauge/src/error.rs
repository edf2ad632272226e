use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] brandgauge_core::Error),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}:{line}: {message}")]
    Format { path: String, line: usize, message: String },
    #[error("invalid URL {url:?}: {reason}")]
    Url { url: String, reason: String },
    #[error("unknown company {0:?}")]
    UnknownCompany(String),
    #[error("invalid request: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    pub(crate) fn format(path: impl std::fmt::Display, line: usize, message: impl Into<String>) -> Self {
        Error::Format { path: path.to_string(), line, message: message.into() }
    }
}
