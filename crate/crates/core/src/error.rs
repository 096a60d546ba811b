use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("singular matrix: {0}")]
    Singular(String),

    #[error("degree bound violated: {0}")]
    DegreeBound(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("structure error: {0}")]
    Structure(String),

    #[error("internal consistency error: {0}")]
    Consistency(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cache entry `{entry}` is invalid: {reason}")]
    Cache { entry: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors that a fresh sample point may avoid.
    pub fn is_singularity(&self) -> bool {
        matches!(self, Error::Singular(_))
    }
}
