use thiserror::Error;

use crate::exactalg::Variable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in Q(sqrt 2)")]
    ZeroInverse,
    #[error("no value assigned to variable {0}")]
    MissingVariable(Variable),
    #[error("Pfaffian needs an even dimension, got {0}")]
    OddDimension(usize),
    #[error("matrix is not skew-symmetric at ({0}, {1})")]
    NotSkew(usize, usize),
    #[error("sample point has repeated coordinates")]
    VanishingVandermonde,
    #[error("expected a polynomial in t-variables only, found {0}")]
    UnexpectedVariable(Variable),
    #[error("{0} is not in I^{1}_{2}({3})")]
    NotInAddedSet(String, u32, u8, String),
    #[error("reference charge -{0} is too shallow for this state")]
    ChargeTooShallow(i64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
