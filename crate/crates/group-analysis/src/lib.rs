//! Exact verification machinery for permutation groups on up to `2^16`
//! points: deterministic Schreier–Sims with certified orders, orbit and
//! block-system analysis, alternating-group recognition by exact order
//! comparison, and the fixed-point test excluding affine overgroups.
//!
//! Completed [`Bsgs`] values are immutable; independent instances may be
//! built in parallel with no shared state. The transversal arena respects
//! the byte budget in the `CONCENTRIC_BSGS_MAX_BYTES` environment variable
//! (default 4 GB).

mod affine;
mod bsgs;
mod orbits;

pub use affine::{affine_exclusion, AffineVerdict};
pub use bsgs::{
    factorial, group_order, schreier_sims, schreier_sims_with, Bsgs, BsgsOptions,
    BSGS_MEMORY_ENV, DEFAULT_BSGS_MAX_BYTES, MAX_BSGS_DEGREE,
};
pub use orbits::{is_primitive, is_transitive, minimal_block, orbits, BlockSystem};

use thiserror::Error;

/// Errors from group-analysis operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalysisError {
    /// Permutations of different degrees were mixed.
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    /// Degree exceeds what the 16-bit internal tables accept.
    #[error("degree {degree} exceeds the supported maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    /// No generators (and hence no degree) were supplied where one is needed.
    #[error("an empty generator list fixes no degree")]
    DegreeZero,
    /// The transversal arena would exceed its byte budget.
    #[error("transversal arena needs {needed_bytes} bytes, cap is {cap_bytes}")]
    ResourceCap { needed_bytes: u64, cap_bytes: u64 },
    /// A block-system operation needs a transitive group.
    #[error("the group is not transitive")]
    Intransitive,
    /// A point index outside `0..degree`.
    #[error("point {point} outside degree {degree}")]
    PointOutOfRange { point: u32, degree: usize },
    /// The two seed points of a block search must differ.
    #[error("seed pair repeats point {point}")]
    SeedPairDegenerate { point: u32 },
}
