use thiserror::Error;

use crate::poly::Var;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}` in varset")]
    DuplicateVariable(Var),
    #[error("varset mismatch: {left} vs {right}")]
    VarsetMismatch { left: String, right: String },
    #[error("homogenizing variable `{0}` already occurs in the polynomial")]
    HomogenizingVariableOccurs(Var),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("no value assigned to variable `{0}`")]
    MissingVariable(Var),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("tag variable `{0}` is already in use")]
    TagVariableInUse(Var),
    #[error("elimination produced the zero ideal: {0}")]
    DegenerateElimination(String),
    #[error("polynomial is not homogeneous in {0}")]
    NotHomogeneous(String),
    #[error("decomposition exceeded the maximum branch depth {0}")]
    DepthExceeded(usize),
    #[error("every component contains both kd and kn; degenerate input")]
    AllComponentsTrivial,
    #[error("invalid transfer function: {0}")]
    InvalidTransferFunction(String),
    #[error("system is not zero-dimensional on the {0} slice")]
    NotZeroDimensional(String),
    #[error("{0}")]
    Numeric(String),
    #[error("empty input: {0}")]
    Empty(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
