//! Tournaments, twin domination, and exhaustive search over orientations of
//! complete graphs.
//!
//! A twin dominating set of a digraph is a vertex set `S` such that every
//! vertex outside `S` has both an arc into `S` and an arc coming from `S`.
//! This crate computes the minimum size of such sets (`γ*`) for tournaments,
//! builds bound-achieving sets constructively, and enumerates tournaments up
//! to isomorphism to compute `DOM*(K_n)`, the largest `γ*` over all
//! orientations of `K_n`.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and
//! the parallel drivers live in the `twindom` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod burnside;
pub mod canonical;
pub mod constructive;
pub mod domination;
pub mod enumeration;
mod error;
pub mod generators;
pub mod tournament;
pub mod vertex_set;

pub use canonical::{canonical_key, CanonicalKey, DEFAULT_CANON_LIMIT};
pub use domination::{gamma_star, is_twin_dominating, Method, TdsCertificate};
pub use enumeration::DomStarReport;
pub use error::{Error, Result};
pub use tournament::{Tournament, MAX_ORDER};
pub use vertex_set::VertexSet;
