//! The book chapters, embedded so that every code block in `book/` runs
//! under `cargo test --doc` and the guide can never drift from the API.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/partitions.md")]
pub mod partitions {}

#[doc = include_str!("../../../book/src/exact_polynomials.md")]
pub mod exact_polynomials {}

#[doc = include_str!("../../../book/src/hermite_wronskians.md")]
pub mod hermite_wronskians {}

#[doc = include_str!("../../../book/src/operators.md")]
pub mod operators {}

#[doc = include_str!("../../../book/src/subspace.md")]
pub mod subspace {}

#[doc = include_str!("../../../book/src/potentials.md")]
pub mod potentials {}

#[doc = include_str!("../../../book/src/orthogonality.md")]
pub mod orthogonality {}

#[doc = include_str!("../../../book/src/recurrence.md")]
pub mod recurrence {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
