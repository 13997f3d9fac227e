use num_bigint::BigInt;
use thiserror::Error;

use crate::pencil::Form;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at offset {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent at offset {pos} is not a non-negative integer")]
    BadExponent { pos: usize },
    #[error("point has {got} coordinates, polynomial has {expected} variables")]
    LengthMismatch { expected: usize, got: usize },
    #[error("binding refers to variable {var} but only {nvars} are declared")]
    BindingOutOfRange { var: usize, nvars: usize },
    #[error("vector has no non-zero entry")]
    ZeroVector,
    #[error("entries have gcd {0}, expected 1")]
    GcdNotOne(BigInt),
    #[error("vector length {0} is too short for this construction")]
    TooShort(usize),
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix determinant is {0}, expected +1 or -1")]
    NotUnimodular(BigInt),
    #[error("variable {var} does not occur in the monomial")]
    EndVarMissing { var: usize },
    #[error("zero polynomial has no chain-form")]
    ZeroPolynomial,
    #[error("chain-form is empty")]
    EmptyChainForm,
    #[error("expected a pencil tagged {expected}, found {found}")]
    WrongForm { expected: Form, found: Form },
    #[error("cannot lift coefficient: {0}")]
    Lift(String),
    #[error("malformed document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
