use thiserror::Error;

use crate::axioms::Axiom;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrdError {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("index {index} out of range for carrier of size {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("matrix has size {found}, carrier has size {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("representative map is not canonical at index {0}")]
    BadRepresentative(usize),
    #[error("relation is not well defined: {0:?} related but {1:?} not")]
    IllDefined((usize, usize), (usize, usize)),
    #[error("not a partial order: {axiom} fails at {witness:?}")]
    NotPoset { axiom: &'static str, witness: Vec<usize> },
    #[error("precondition failed: {axiom} does not hold (witness {witness:?})")]
    Precondition { axiom: Axiom, witness: Vec<usize> },
    #[error("sequences are over different base structures")]
    MismatchedBase,
    #[error("carrier size {size} exceeds enumeration bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
}

pub type Result<T> = std::result::Result<T, OrdError>;
