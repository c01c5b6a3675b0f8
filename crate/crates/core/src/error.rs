use thiserror::Error;

/// Errors raised while building models or running checks.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown state `{0}`")]
    UnknownState(String),

    #[error("unknown event `{0}`")]
    UnknownEvent(String),

    #[error("unknown transition `{0}`")]
    UnknownTransition(String),

    #[error("unknown place `{0}`")]
    UnknownPlace(String),

    #[error("event `{0}` is observable in one component and unobservable in another")]
    InconsistentObservability(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("transition `{0}` is not enabled")]
    NotEnabled(String),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("{location}: {source}")]
    At {
        location: String,
        #[source]
        source: Box<Error>,
    },

    #[error("resource limit exceeded: {what} (bound {bound})")]
    Resource { what: String, bound: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidModel(msg.into())
    }

    /// Attaches a location (file path, JSON pointer, ...) to the error.
    pub fn at(self, location: impl Into<String>) -> Self {
        Error::At {
            location: location.into(),
            source: Box::new(self),
        }
    }

    /// True for errors caused by exhausted resource caps rather than bad input.
    pub fn is_resource(&self) -> bool {
        match self {
            Error::Resource { .. } => true,
            Error::At { source, .. } => source.is_resource(),
            _ => false,
        }
    }

    pub fn is_io(&self) -> bool {
        match self {
            Error::Io { .. } => true,
            Error::At { source, .. } => source.is_io(),
            _ => false,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
