use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("root closure exceeded height bound {bound}; Cartan matrix is not of finite type")]
    NotFiniteType { bound: i64 },

    #[error("group order exceeds configured bound {bound}")]
    GroupTooLarge { bound: usize },

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("data rejected: {0}")]
    Rejected(String),

    #[error("missing data: {0}")]
    Missing(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
