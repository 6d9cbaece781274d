use std::path::PathBuf;

/// Errors raised by the walk library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A closed-form or limit formula was asked for at an angle it excludes.
    #[error("formula domain: {0}")]
    Domain(String),

    #[error("resource limit: {0}")]
    Resource(String),

    /// Float cancellation produced a clearly negative probability.
    #[error("precision failure: {0}")]
    Precision(String),

    #[error("i/o error at {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
