//! Error type shared by every module.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown root system type `{0}`")]
    UnknownType(String),
    #[error("vectors live in incomparable lattices")]
    IncomparableLattices,
    #[error("procedure did not terminate within {0} steps")]
    NonTermination(usize),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("vertex is not a minimal coset representative for the chosen parabolic")]
    VertexNotInQuotient,
    #[error("subset of affine simple roots is not regular")]
    NotRegular,
    #[error("invalid datum: {0}")]
    InvalidDatum(String),
    #[error("element is not shrunken")]
    NotShrunken,
    #[error("coweight is not dominant")]
    NotDominant,
    #[error("chamber is not positive for the length functional")]
    InvalidPositivity,
    #[error("uniqueness violated: {0}")]
    UniquenessViolation(String),
    #[error("no unique maximum: {0}")]
    IncomparableMaximum(String),
    #[error("singular linear system")]
    SingularSystem,
    #[error("parse error at position {pos}: {msg}")]
    ParseError { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::ParseError { pos, msg: msg.into() }
    }
}
