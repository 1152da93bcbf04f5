use thiserror::Error;

/// Errors produced by model construction, solvers and the simulation engine.
#[derive(Debug, Error)]
pub enum Error {
    /// A constructor argument is outside its allowed range.
    #[error("invalid {name}: {reason}")]
    Parameter { name: &'static str, reason: String },

    /// An operation was called outside the domain where it is defined.
    #[error("{op}: {reason}")]
    Domain { op: &'static str, reason: String },

    /// Exact enumeration was requested for an instance that is too large.
    #[error("catalog of {size} items exceeds the exact-enumeration limit of {limit}")]
    TooLarge { size: usize, limit: usize },

    /// The virtual-size fit could not produce a trustworthy scale.
    #[error("virtual-size fit failed: {0}")]
    FitFailed(String),

    /// Structurally valid configuration with inconsistent contents.
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parameter(name: &'static str, reason: impl Into<String>) -> Self {
        Error::Parameter {
            name,
            reason: reason.into(),
        }
    }

    pub(crate) fn domain(op: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            op,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
