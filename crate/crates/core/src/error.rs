use thiserror::Error;

use crate::algebra::EvalError;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("row lengths must be weakly decreasing, got {0:?}")]
    NotWeaklyDecreasing(Vec<usize>),
    #[error("a shape needs at least one row")]
    EmptyShape,
    #[error("half-perimeter {0} has no PASEP sites (need at least 2)")]
    NoSites(usize),
    #[error("invalid PASEP state `{0}`: use 0/1 or ./* characters")]
    BadState(String),
    #[error("filling does not match the shape: {0}")]
    DimensionMismatch(String),
    #[error("filling violates the permutation tableau conditions")]
    InvalidTableau,
    #[error("row {row} is not an eligible corner for a {kind} move")]
    IneligibleRow { kind: &'static str, row: usize },
    #[error("invalid permutation: {0}")]
    BadPermutation(String),
    #[error("label {0} is not in the ground set")]
    UnknownLabel(String),
    #[error("cannot collapse at fixed point {0}")]
    CollapseAtFixedPoint(String),
    #[error("parameters outside the valid box 0 <= q <= 1, 0 < alpha, beta <= 1: {0}")]
    InvalidParameters(String),
    #[error("the instantiated chain has no unique stationary distribution")]
    Singular,
    #[error(transparent)]
    Eval(#[from] EvalError),
}

pub type Result<T> = std::result::Result<T, Error>;
