//! Discrete Ricci curvature flows on weighted graphs.
//!
//! The crate computes Ollivier and Lin-Lu-Yau edge curvature through exact
//! optimal transport, evolves edge weights under five discrete flow
//! variants with optional theta-surgery, checks the theorem-derived weight
//! envelopes along the way, and detects core subgraphs by cutting the
//! heaviest post-flow edges. Centrality baselines and the r_d / r_s core
//! metrics support side-by-side evaluation.

pub mod centrality;
pub mod curvature;
pub mod detect;
pub mod ensemble;
pub mod error;
pub mod flow;
pub mod graph;
pub mod metrics;
pub mod report;
pub mod transport;

pub use error::{Error, Result};
pub use graph::{EdgeId, NodeId, WeightedGraph};
