use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index ({n}, {k}) lies outside the triangle")]
    OutOfTriangle { n: usize, k: usize },

    #[error("invalid step {found:?} at position {position}; only 'R' and 'L' are allowed")]
    InvalidAlphabet { found: char, position: usize },

    #[error("sequence {0:?} is not balanced and legal")]
    NotBalancedLegal(String),

    #[error("sequence of length {len} exceeds the maximum supported length {max}")]
    SequenceTooLong { len: usize, max: usize },

    #[error("enumeration of semi-length {n} exceeds the cap {cap}")]
    EnumerationCap { n: usize, cap: usize },

    #[error("component index {index} out of range for a sequence with {count} components")]
    ComponentIndex { index: usize, count: usize },

    #[error("insertion precondition violated: {0}")]
    InsertPrecondition(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,
}

pub type Result<T> = std::result::Result<T, Error>;
