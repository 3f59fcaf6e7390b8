//! Exact root-system combinatorics for minimal-length Weyl orbit problems.
//!
//! The crate computes, for finite root systems, the minimal Coxeter length of
//! a Weyl group element turning the pairing of a weight with a dominant
//! element negative, the invariants obtained by minimizing it over
//! fundamental and self-dual weights, and the embedding-independent
//! sufficiency criteria for branching properties derived from them.

pub mod cache;
pub mod cli;
pub mod criterion;
pub mod dataset;
pub mod ell;
pub mod error;
pub mod rootsystem;
pub mod weyl;

pub use error::{Error, Result};
pub use rootsystem::{Coweight, Family, Root, RootSystem, SimpleType, Weight};
pub use weyl::{OrbitSearch, OrbitSearchResult, WeylWord};

/// Version tag written into JSON outputs and cache files.
pub const SCHEMA_VERSION: u32 = 1;
