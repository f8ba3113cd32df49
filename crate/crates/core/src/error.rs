use thiserror::Error;

/// Errors produced while constructing, parsing or checking codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty Pauli string")]
    EmptyPauli,

    #[error("invalid Pauli letter {found:?} at position {pos}")]
    InvalidLetter { pos: usize, found: char },

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("length mismatch: {left} vs {right} qubits")]
    LengthMismatch { left: usize, right: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("{what} must be at least {min}, got {value}")]
    OutOfRange {
        what: &'static str,
        value: u64,
        min: u64,
    },

    #[error("left operand of a paste must start with the all-X and all-Z rows")]
    MissingLeadingXz,

    #[error("unknown block name {0:?}")]
    UnknownBlock(String),

    #[error("invalid puncture coordinates: {0}")]
    Puncture(String),

    #[error("not a stabilizer code: {0}")]
    NotACode(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("weight enumeration needs 2^{s} products, cap is 2^{cap}")]
    EnumerationCap { s: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
