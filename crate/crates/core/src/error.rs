use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} must be finite, got {value}")]
    NonFinite { what: &'static str, value: f64 },

    #[error("{what} = {value} is outside its domain ({expected})")]
    Domain {
        what: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("invalid geometry: {0}")]
    Geometry(String),

    #[error("steering vectors differ in length ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("leakage bound undefined: interferer projects onto the main user (delta = {delta:e})")]
    BoundUndefined { delta: f64 },

    #[error("at least one user is required")]
    NoUsers,

    #[error("user {user} shares the main user's azimuth; no antenna count separates them")]
    Unsatisfiable { user: usize },

    #[error("config error at `{key}`: {message}")]
    Config { key: String, message: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("N = {n}: {source}")]
    AtN {
        n: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn domain(what: &'static str, value: f64, expected: &'static str) -> Self {
        Error::Domain { what, value, expected }
    }

    pub(crate) fn config(key: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            key: key.into(),
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code: 3 for I/O failures, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self.root() {
            Error::Io { .. } => 3,
            _ => 2,
        }
    }

    /// Strips any `AtN` wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtN { source, .. } => source.root(),
            other => other,
        }
    }
}
