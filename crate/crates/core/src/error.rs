use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid partitioned forest: {0}")]
    InvalidStructure(String),

    #[error("vertex {vertex} out of range (tree has {count} vertices)")]
    InvalidVertex { vertex: usize, count: usize },

    #[error("series truncated at length {truncation} cannot give the coefficient of a word of length {needed}")]
    Truncation { truncation: usize, needed: usize },

    #[error("no image given for decoration {0}")]
    MissingImage(u32),

    #[error("internal inconsistency: {0}")]
    Fault(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
