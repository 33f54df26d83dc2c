use thiserror::Error;

use crate::marked::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be positive and non-increasing, got {0:?}")]
    InvalidPartition(Vec<u32>),

    #[error("no Durfee square: the empty partition has no Durfee symbol")]
    NoDurfeeSquare,

    #[error("no partition preimage defined for odd Durfee symbols")]
    NoPartitionPreimage,

    #[error("invalid symbol: {0}")]
    InvalidSymbol(Violation),

    #[error("vector index {index} out of range 1..={k}")]
    IndexOutOfRange { index: usize, k: usize },

    #[error("symbol is not strict shifted (vector {vector})")]
    NotStrictShifted { vector: usize },

    #[error("pair is not strict shifted")]
    PairNotStrictShifted,

    #[error("rank {found} != sum of m_i + k - 1 = {expected}")]
    RankMismatch { expected: i64, found: i64 },

    #[error("rank vector entries must be nonnegative, got {0:?}")]
    NegativeRank(Vec<i64>),

    #[error("insufficient length difference: {length_difference} < {r} + 1")]
    InsufficientLengthDifference { length_difference: i64, r: usize },

    #[error("largest bottom part {beta} exceeds largest top part {alpha}")]
    BottomExceedsTop { alpha: u32, beta: u32 },

    #[error("vector {vector}: {source}")]
    Vector {
        vector: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("balanced vector must have length {k} with t_k = 0, got {t:?}")]
    BadBalancedVector { k: usize, t: Vec<usize> },

    #[error("{0:?} is not a permutation of 1..={1}")]
    BadPermutation(Vec<usize>, usize),

    #[error("expected {expected} entries, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("k must be at least {min}, got {k}")]
    KTooSmall { k: usize, min: usize },

    #[error("pole at evaluation point: {0}")]
    Pole(String),

    #[error("series has zero constant term and no reciprocal")]
    NotAUnit,
}

pub type Result<T> = std::result::Result<T, Error>;
