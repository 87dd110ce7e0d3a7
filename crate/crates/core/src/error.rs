use thiserror::Error;

use crate::weyl::Family;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator s_{index} is out of range for {family:?} with {rank} coordinates")]
    GeneratorOutOfRange {
        family: Family,
        rank: usize,
        index: usize,
    },

    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid root: {0}")]
    InvalidRoot(String),

    #[error("word is not reduced: letter {position} produces {reason}")]
    NotReduced {
        position: usize,
        reason: &'static str,
    },

    #[error("invalid Grassmannian parameters: {0}")]
    InvalidSpec(String),

    #[error("invalid double partition: {0}")]
    InvalidPartition(String),

    #[error("permutation is not a minimal coset representative: {0}")]
    NotMinimal(String),

    #[error("removal does not apply: {0}")]
    RemovalNotApplicable(String),

    #[error("not a covering pair: {0}")]
    NotCovering(String),

    #[error("phi difference is not an integer multiple of the covering root: {0}")]
    NotAMultiple(String),

    #[error("deleted-letter search failed: {0}")]
    DeletionNotFound(String),

    #[error("cell count {count} exceeds the cap of {cap}")]
    CellCapExceeded { count: usize, cap: usize },

    #[error("boundary of boundary is nonzero in degree {degree}")]
    BoundarySquaredNonzero { degree: usize },

    #[error("boundary entry {value} in degree {degree} is not in {{0, 2, -2}}")]
    InvalidEntry { degree: usize, value: i64 },

    #[error("torsion factor {factor} in degree {degree} is not a power of two")]
    NonTwoPrimaryTorsion { degree: usize, factor: String },
}

pub type Result<T> = std::result::Result<T, Error>;
