use alloc::string::String;

use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed braid: {0}")]
    MalformedBraid(String),
    #[error("index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("state has {got} bits but the braid has {expected} crossings")]
    LengthMismatch { expected: usize, got: usize },
    #[error("{crossings} crossings exceed the cap of {cap}")]
    TooManyCrossings { crossings: usize, cap: usize },
    #[error("{strands} tensor factors exceed the cap of {cap}")]
    TooManyStrands { strands: usize, cap: usize },
    #[error("position {position} with arity {arity} does not fit a word of length {len}")]
    PositionOutOfRange { position: usize, arity: usize, len: usize },
    #[error("idempotent component is not integral")]
    ComponentNotIntegral,
    #[error("differential does not square to zero at index {index}")]
    DifferentialNotSquareZero { index: i64 },
    #[error("covering sign system is inconsistent: {0}")]
    SignSystemInconsistent(String),
    #[error("matching is not a planar perfect matching")]
    NotPlanar,
}
