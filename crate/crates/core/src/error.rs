use thiserror::Error;

use crate::segment::Segment;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Segment length outside `0..=rank+1`.
    #[error("segment {segment} is not valid at rank {rank}")]
    InvalidSegment { segment: Segment, rank: u32 },

    #[error("alpha[{i},{j}] is not an l-root at rank {rank}")]
    InvalidRoot { i: i64, j: i64, rank: u32 },

    #[error("l-weight is not in the l-root lattice")]
    NotInRootLattice,

    #[error("index {index} out of range for a tuple of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("l-weight is not dominant")]
    NotDominant,

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("right endpoint {j} is smaller than left endpoint {i}")]
    Range { i: i64, j: i64 },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
