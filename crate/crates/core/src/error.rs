use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty Pauli string")]
    EmptyPauli,

    /// `position` is 1-based, counting from the leftmost character.
    #[error("illegal character {ch:?} at position {position}")]
    IllegalChar { position: usize, ch: char },

    #[error("dimension mismatch: {left} vs {right} qubits")]
    DimensionMismatch { left: usize, right: usize },

    #[error("qubit index {index} out of range for {n} qubits")]
    QubitOutOfRange { index: usize, n: usize },

    #[error("the identity string cannot be a stabilizer generator")]
    IdentityGenerator,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{n} qubits exceeds the dense-oracle limit of {limit}")]
    TooManyQubits { n: usize, limit: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
