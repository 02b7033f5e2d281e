//! Exact domination-type parameters of small graphs, constructive upper
//! bounds on the double domination number, and exhaustive/randomized bound
//! checking.
//!
//! Vertices are dense indices `0..n` with `n <= 62`; vertex sets are 64-bit
//! masks ([`VertexSet`]). All algorithms are exact and intended for desk-scale
//! graphs.

pub mod constructions;
pub mod error;
pub mod families;
pub mod graph;
pub mod oracle;
pub mod solvers;
pub mod verifier;

pub use error::{Error, Result};
pub use graph::{Graph, GraphProfile, VertexSet};
pub use solvers::{ParameterKind, ParameterResult};
