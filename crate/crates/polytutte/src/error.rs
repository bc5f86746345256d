use thiserror::Error;

use crate::mask::SubsetMask;
use crate::point::IntVector;

/// Errors produced by construction, validation, and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank table must have 2^n entries, expected {expected}, got {got}")]
    WrongTableSize { expected: usize, got: usize },

    #[error("ground-set size {n} unsupported, must be between 1 and 16")]
    UnsupportedGroundSet { n: usize },

    #[error("rank of the empty set must be 0, got {got}")]
    NonZeroEmpty { got: i64 },

    #[error("not submodular: f({i}) + f({j}) < f(union) + f(intersection)")]
    NotSubmodular { i: SubsetMask, j: SubsetMask },

    #[error("uniform matroid rank {d} exceeds ground-set size {n}")]
    InvalidRank { d: usize, n: usize },

    #[error("edge {edge} touches vertex {vertex}, but the graph has {vertices} vertices")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        vertices: usize,
    },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("image list is not a bijection of 0..{n}")]
    NotABijection { n: usize },

    #[error("vector {0} is not a basis of the polymatroid")]
    NotABasis(IntVector),

    #[error("pivot {pivot} out of range for ground-set size {n}")]
    PivotOutOfRange { pivot: usize, n: usize },

    #[error("fiber through {member} is not a consecutive chain at pivot {pivot}")]
    GapInFiber { pivot: usize, member: IntVector },

    #[error("operation requires a nonempty polymatroid")]
    EmptyPolymatroid,

    #[error("not a matroid rank function: adding element {} to {subset} changes the rank by more than one or decreases it", .element + 1)]
    NotAMatroidRank { subset: SubsetMask, element: usize },

    #[error("truncation caps differ: {lhs} vs {rhs}")]
    CapMismatch { lhs: u32, rhs: u32 },

    #[error("coverage construction needs at least one part")]
    NoCoverageParts,

    #[error("could not parse instance: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
