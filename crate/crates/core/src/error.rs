use thiserror::Error;

/// Errors shared across the library.
///
/// The variants split into three behavioural groups that callers may want to
/// distinguish: input that could not be parsed, input that parsed but names
/// something the engine cannot work on, and internal failures that indicate a
/// bug or a numerically hopeless configuration.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("surface not admissible: {0}")]
    NotAdmissible(String),

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("degenerate numeric configuration: {0}")]
    Degenerate(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by malformed textual input.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }

    /// True for errors caused by structurally valid input that the engine
    /// rejects (wrong surface kind, non-primitive word where a primitive one
    /// is required, and so on).
    pub fn is_admissibility(&self) -> bool {
        matches!(self, Error::NotAdmissible(_) | Error::Unsupported(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
