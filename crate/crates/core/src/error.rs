//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("not invertible in the Laurent ring: {0}")]
    NotInvertible(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("unbound variables: {0:?}")]
    Unbound(Vec<String>),
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("not enough variables: {0}")]
    InsufficientVariables(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
