use thiserror::Error;

/// Errors raised by the exact lattice and ideal arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("empty generator list (zero ideal is unsupported)")]
    EmptyGenerators,
    #[error("zero exponent present (unit ideal is unsupported)")]
    UnitIdeal,
    #[error("negative entry in exponent vector")]
    NegativeEntry,
    #[error("ideal power r = 0 is unsupported")]
    ZeroPower,
    #[error("variety is not the origin (operation requires an Artinian ideal)")]
    NotArtinian,
    #[error("operation requires ambient dimension >= 2")]
    DimensionTooSmall,
    #[error("integer overflow in lattice arithmetic")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
