use thiserror::Error;

/// Errors raised by the algebra constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<u32>),
    #[error("not a parking function: {0:?}")]
    NotParking(Vec<u32>),
    #[error("letters must be positive integers")]
    ZeroLetter,
    #[error("color {color} is not an element of {monoid}")]
    InvalidColor { color: i64, monoid: String },
    #[error("invalid color monoid: {0}")]
    InvalidMonoid(String),
    #[error("{monoid} is not a group")]
    NotAGroup { monoid: String },
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("decoding failed: {0}")]
    Decode(String),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("element is not in the expected subspace: {0}")]
    NotInSubspace(String),
    #[error("invalid series operation: {0}")]
    Series(String),
    #[error("unknown series `{0}`")]
    UnknownSeries(String),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
}

pub type Result<T> = std::result::Result<T, Error>;
