use thiserror::Error;

/// Errors raised while constructing or slicing partitions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive, found 0")]
    ZeroPart,
    #[error("parts must be weakly decreasing: {prev} is followed by {next}")]
    NotDecreasing { prev: u32, next: u32 },
    #[error("malformed partition literal {0:?}, expected e.g. [5,3,3,1] or []")]
    Malformed(String),
    #[error("cut index {index} out of range 1..={max}")]
    CutOutOfRange { index: usize, max: usize },
}

/// Errors raised by the constructive maps when an input falls outside the
/// map's domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("chain length must be at least {min}, got {r}")]
    InvalidR { r: u32, min: u32 },
    #[error("part {part} is divisible by {r}, input must be {r}-regular")]
    NotRegular { part: u32, r: u32 },
    #[error("part {part} occurs {multiplicity} times, input must be {r}-strict")]
    NotStrict {
        part: u32,
        multiplicity: u32,
        r: u32,
    },
    #[error("input has no part divisible by {r}")]
    NoMultiple { r: u32 },
    #[error("input has no part repeated at least {r} times")]
    NoRepeating { r: u32 },
    #[error("index {i} outside the admissible range 1..={max}")]
    IndexOutOfRange { i: u32, max: u32 },
    #[error("pair is not in the codomain: {0}")]
    NotInCodomain(String),
}

/// Errors raised by truncated power series operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("coefficient index {index} beyond truncation order {order}")]
    BeyondTruncation { index: usize, order: usize },
    #[error("constant term {0} is not a unit over the integers")]
    NonUnitConstant(i128),
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
