use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An index, vertex or parameter lies outside its admissible range.
    #[error("range error: {0}")]
    Range(String),

    #[error("not a face: {0}")]
    NotAFace(String),

    /// The request exceeds a declared implementation capacity.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A precondition on the mathematical input does not hold.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("complex has vertices outside its support: {0}")]
    NotFullSupport(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
}

impl Error {
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
