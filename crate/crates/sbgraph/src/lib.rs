//! Strong biconnectivity analysis for directed graphs.
//!
//! A graph is strongly biconnected when it is strongly connected and its
//! underlying undirected graph is biconnected. This crate finds the arcs
//! (b-bridges) and vertices (b-articulation points) whose loss destroys that
//! property, the overlapping component structure, and the machinery
//! underneath: dominator trees, strong bridges, strong articulation points,
//! sparse strong-connectivity certificates. Brute-force oracles, a seeded
//! instance generator, an edge-list format, DOT export, and a CLI round the
//! library out; see the examples directory for entry points.

pub mod cli;
pub mod connectivity;
pub mod critical;
pub mod dominators;
pub mod dot;
pub mod edgelist;
pub mod error;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod report;
pub mod resilience;
mod rng;
pub mod sbcc;

pub use error::Error;
pub use graph::{Arc, Digraph, VertexId};
