use alloc::string::String;

/// Errors raised by the exact kernels.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("incompatible fields: {0}")]
    IncompatibleFields(String),
    #[error("cannot adjoin the square root of zero")]
    CannotAdjoin,
    #[error("unsupported extension: {0}")]
    UnsupportedExtension(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("not a basic ideal")]
    NotABasicIdeal,
    #[error("proposed basis is not natural: e'{0} * e'{1} != 0")]
    NotNatural(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("algebra is not regular")]
    NotRegular,
    #[error("structure matrix is not lower unitriangular")]
    NotTriangular,
    #[error("bad indices: {0}")]
    BadIndices(String),
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = core::result::Result<T, Error>;
