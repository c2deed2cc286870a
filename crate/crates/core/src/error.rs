use alloc::string::String;
use alloc::vec::Vec;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("not a group: {reason} at {witness:?}")]
    NotAGroup { reason: &'static str, witness: Vec<usize> },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("group too large: closure exceeded {limit} elements")]
    GroupTooLarge { limit: usize },
    #[error("cyclotomic recognition failed: {0}")]
    RecognitionFailure(String),
    #[error("not a cocycle: coboundary nonzero at {witness:?}")]
    NotACocycle { witness: Vec<usize> },
    #[error("size exceeded: {what} needs {needed} work units, limit {limit}")]
    SizeExceeded { what: &'static str, needed: u128, limit: u128 },
    #[error("pairing is singular")]
    SingularPairing,
    #[error("direct twisted partition function unsupported at genus {0}")]
    UnsupportedTwistedGenus(u32),
    #[error("fusion coefficient N[{a},{b}][{c}] is not a non-negative integer")]
    NonIntegralFusion { a: usize, b: usize, c: usize },
    #[error("dimension {0} out of range")]
    DimensionOutOfRange(usize),
    #[error("covector is zero")]
    ZeroCovector,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// True for errors caused by configured size limits rather than bad input.
    pub fn is_size_limit(&self) -> bool {
        matches!(self, Error::SizeExceeded { .. } | Error::GroupTooLarge { .. })
    }
}

pub type Result<T> = core::result::Result<T, Error>;
