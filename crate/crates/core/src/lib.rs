//! Extremal mixed graphs for the degree/diameter problem.
//!
//! A mixed graph has undirected edges and directed arcs. For maximum
//! undirected degree `r`, out-degree `z`, and diameter `k`, the Moore bound
//! `M(r, z, k)` caps the order of any totally regular mixed graph; graphs of
//! order `M - 1` ("almost Moore") carry a rigid walk structure: every vertex
//! has a unique *repeat*, and the repeats form a permutation tied to the
//! adjacency matrix by exact integer identities.
//!
//! This crate computes the bounds, screens parameter pairs by the known
//! number-theoretic conditions, verifies candidate graphs against the matrix
//! identities, builds the named extremal constructions (line digraphs of
//! Moore graphs, Kautz digraphs, the order-10 diameter-3 family), compares
//! exact integer spectra, and runs isomorph-free exhaustive censuses at
//! small orders.

pub mod bounds;
pub mod constructions;
pub mod feasibility;
pub mod graph;
pub mod iso;
pub mod matrix;
pub mod perm;
pub mod search;
pub mod spectra;
pub mod verify;

pub use graph::{DegreeReport, DistanceData, MixedGraph};
pub use matrix::IntMatrix;
pub use perm::Permutation;
