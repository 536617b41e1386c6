//! Exact local metric dimension of graphs and of subgraph-amalgamations.
//!
//! The crate computes `dim_l` exactly with a branch-and-bound hitting-set
//! search, builds amalgams of graphs over a common induced subgraph, and
//! evaluates the traversal / out-solving / co-traversal / cover bounds for
//! them with every upper bound certified by an explicit witness set.

pub mod amalgam;
pub mod audit;
pub mod bounds;
pub mod constructions;
pub mod error;
pub mod family;
pub mod graph;
pub mod hitting;
pub mod io;
pub mod localmetric;
pub mod report;
pub mod verify;

pub use amalgam::{amalgamate, Amalgam, Embedding, Part};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, Vertex};
