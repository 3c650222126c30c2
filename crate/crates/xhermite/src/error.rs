//! Crate-wide error type.

use crate::partition::Partition;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("partition parts must be weakly increasing, got {parts:?}")]
    NotWeaklyIncreasing { parts: Vec<u32> },

    #[error("gap sequence must be strictly increasing, got {ks:?}")]
    NotStrictlyIncreasing { ks: Vec<u32> },

    #[error("cannot parse partition from {input:?}")]
    PartitionParse { input: String },

    #[error("cannot parse rational number from {input:?}")]
    NumberParse { input: String },

    #[error("exact division left the nonzero remainder {remainder}")]
    Division { remainder: String },

    #[error("{partition} is not an Adler partition")]
    NotAdler { partition: Partition },

    #[error("deletion index {i} out of range 1..={ell}")]
    IndexOutOfRange { i: usize, ell: usize },

    #[error("degree {j} is excluded by the gap pair ({k}, {k_plus})")]
    ExcludedDegree { j: u32, k: u32, k_plus: u32 },

    #[error("index {k} lies in the gap sequence of {partition}")]
    IndexInGaps { partition: Partition, k: u32 },

    #[error("family base partition {partition} must be reduced (no leading zeros)")]
    NotReduced { partition: Partition },

    #[error("denominator has repeated roots, multiplicity profile {profile:?}")]
    NonSimpleRoots { profile: Vec<(usize, u32)> },

    #[error("quadrature did not converge within {subdivisions} subdivisions (error estimate {estimate:e})")]
    NonConvergence { subdivisions: u32, estimate: f64 },

    #[error("sample point {x} is a zero of the denominator")]
    SingularSample { x: String },

    #[error("recurrence index {n} below the admissible minimum {min}")]
    RangeError { n: i64, min: i64 },

    #[error("{0}")]
    Invalid(String),
}
