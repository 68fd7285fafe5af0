//! Exact multiplicative Zagreb indices, vertex and edge connectivity, and
//! exhaustive verification of extremal results over small graphs.
//!
//! Graphs are immutable values on at most 64 vertices. Index values are
//! exact big integers so that comparisons between extremal candidates never
//! depend on floating point.

pub mod canon;
pub mod cli;
pub mod connectivity;
pub mod constructors;
pub mod enumeration;
pub mod format;
pub mod graph;
pub mod indices;
pub mod transforms;
pub mod verifier;

pub use canon::CanonicalForm;
pub use connectivity::{edge_connectivity, vertex_connectivity, ConnectivityClass};
pub use graph::{DegreeSequence, Graph, GraphError};
pub use indices::{pi1, pi2, ExactProduct, Pi2Form};
