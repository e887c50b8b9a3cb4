use alloc::string::String;

/// Errors raised by the exact-arithmetic and representation-theory routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// The operation needs a field (evaluated mode) but got symbolic scalars.
    #[error("operation `{0}` is not supported in symbolic mode")]
    UnsupportedMode(&'static str),

    #[error("symbolic determinant of dimension {dim} exceeds the ceiling {ceiling}")]
    SymbolicCeiling { dim: usize, ceiling: usize },

    #[error("generator index {0} is outside the supported range |n| <= 1000000")]
    IndexOutOfRange(i64),

    #[error("invalid rational literal `{0}`")]
    ParseRational(String),

    #[error("expected a non-zero vector")]
    ZeroVector,

    /// Parameters fall outside the hypotheses of a theorem-level routine.
    #[error("outside theorem hypotheses: {0}")]
    OutsideTheorem(String),

    /// The closed-form product is only defined at level zero.
    #[error("formula domain error: {0}")]
    FormulaDomain(String),

    #[error("inconclusive: {0}")]
    Inconclusive(String),

    /// A vector found through the generating set {L(1), L(2), I(1)} failed
    /// the full annihilation check.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
