//! Exact spanning-tree counting.
//!
//! Graph Laplacians are built over exact rationals and their cofactors are
//! evaluated by one of five interchangeable determinant engines
//! ([`EngineKind`]). Closed forms for the friendship graph and its
//! subdivision, a brute-force enumeration oracle and spanning-tree entropy
//! sit on top.
//!
//! ```
//! use spantree::{friendship_graph, tau, EngineKind};
//!
//! let g = friendship_graph(3).unwrap();
//! assert_eq!(tau(&g, EngineKind::Salihu).unwrap(), 27u32.into());
//! ```

pub mod det;
pub mod graph;
pub mod matrix;
pub mod spanning;
pub mod union_find;

pub use det::{det, EngineKind};
pub use graph::{complete_graph, cycle_graph, friendship_graph, Graph, GraphError};
pub use matrix::{ExactMatrix, MatrixError, Scalar};
pub use spanning::{
    entropy_estimate, entropy_limit, tau, tau_bruteforce, tau_closed_friendship,
    tau_closed_subdivided_friendship, EntropyEstimate, Family, SpanningError, TreeCount,
};
