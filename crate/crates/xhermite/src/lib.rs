//! Exceptional Hermite polynomials in exact arithmetic.
//!
//! Wronskians of classical Hermite polynomials indexed by partitions give
//! rise to complete orthogonal polynomial systems with gaps in their degree
//! sequence, and to the rational extensions of the harmonic oscillator that
//! remain exactly solvable.  This crate constructs those objects and
//! verifies their structure — differential operators, intertwining and
//! factorization identities, orthogonality weights and square norms, and the
//! (2ℓ+3)-term recurrence — with exact rational arithmetic wherever the
//! statement is exact, and certified high-precision numerics where it is
//! not (quadrature, root refinement, Schrödinger residuals).
//!
//! Start with [`partition::Partition`] and [`wronskians`], or read the guide
//! under `book/` (its chapters double as doc-tests, see [`guide`]).

pub mod error;
pub mod guide;
pub mod numeric;
pub mod operators;
pub mod orthogonality;
pub mod partition;
pub mod poly;
pub mod ratfn;
pub mod recurrence;
pub mod report;
pub mod roots;
pub mod spectral;
pub mod subspace;
pub mod wronskians;

pub use error::Error;
pub use partition::{GapSequence, Partition};
pub use poly::{Degree, Parity, Poly, Rat};
pub use ratfn::RationalFn;
