use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole at evaluation point")]
    Pole,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("bound exceeded: {what} = {value} > {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("element is not central")]
    NotCentral,

    #[error("representation matrix is not scalar")]
    NotScalar,

    #[error("series constant term is not invertible")]
    NonInvertible,

    #[error("series constant term must be {expected}")]
    ConstantTerm { expected: &'static str },

    #[error("coefficient algebras do not match")]
    AlgebraMismatch,

    #[error("element is not homogeneous of degree {0}")]
    NotHomogeneous(usize),

    #[error("parse error at `{token}`: {message}")]
    Parse { token: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
