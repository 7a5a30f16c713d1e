//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("inversion of zero in F_{{{d}}}")]
    DivisionByZero { d: u64 },

    #[error("field spec mismatch: {0}")]
    SpecMismatch(String),

    #[error("vector length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("field configuration rejected: {0}")]
    ConfigError(String),

    #[error("weight of the zero subspace is undefined")]
    EmptyWeight,

    #[error("dimension cap exceeded: {what} needs {needed}, cap is {cap}")]
    DimensionCap {
        what: &'static str,
        needed: u64,
        cap: u64,
    },

    #[error("work cap exceeded: estimated {estimated} operations, cap is {cap}")]
    WorkCap { estimated: u64, cap: u64 },

    #[error("unsupported field: {0}")]
    UnsupportedField(String),

    #[error("eigenvector residual {residual:e} exceeds tolerance {tol:e}")]
    EigenResidual { residual: f64, tol: f64 },

    #[error("codeword Gram matrix deviates from identity by {deviation:e}")]
    NonOrthogonal { deviation: f64 },

    #[error("graph structure mismatch: {0}")]
    StructureMismatch(String),

    #[error("argument outside domain: {0}")]
    DomainError(String),

    #[error("parse error at line {line}: {reason}")]
    ParseError { line: usize, reason: String },

    #[error("inconsistent inputs: {0}")]
    ConsistencyError(String),

    #[error("no certified code found within the search budget")]
    NotFound,
}
