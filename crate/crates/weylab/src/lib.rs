//! File formats, bundled fixtures and the command-line front end for
//! `weylab-core`.

pub mod cli;
pub mod fixtures;
pub mod format;

pub use fixtures::{FixtureRow, Fixtures};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] weylab_core::Error),

    #[error("io: {0}")]
    Io(String),

    #[error("json: {0}")]
    Json(String),

    #[error("usage: {0}")]
    Usage(String),
}

impl Error {
    /// Short machine-readable tag for the error stream.
    pub fn kind(&self) -> &'static str {
        use weylab_core::Error as E;
        match self {
            Error::Core(E::Parse(_)) | Error::Core(E::InvalidType { .. }) | Error::Core(E::RankMismatch { .. }) => {
                "parse"
            }
            Error::Core(E::CapExceeded { .. }) => "cap-exceeded",
            Error::Core(E::UnknownAtP2(_)) => "unknown-at-p2",
            Error::Core(E::MissingFixture(_)) => "missing-fixture",
            Error::Core(_) => "library",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
            Error::Usage(_) => "usage",
        }
    }
}
