//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed edge-list input, with the 1-based line number.
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Lazy walk requested at a degree-0 node with alpha < 1.
    #[error("node {node} has no incident edges; lazy walk undefined for alpha < 1")]
    UndefinedWalk { node: u32 },

    /// A required distance between two support nodes is infinite.
    #[error("supports are not mutually reachable")]
    DisconnectedSupport,

    /// Measure masses are negative or do not sum to one.
    #[error("invalid probability measure: total mass {total}")]
    InfeasibleMeasure { total: f64 },

    /// The curvature quotient did not settle after refinement.
    #[error("curvature quotient failed to stabilize ({first} vs {second})")]
    NumericInstability { first: f64, second: f64 },

    /// A flow update drove an edge weight to zero or below.
    #[error("step produced non-positive weight {weight} on edge {edge}")]
    StepTooLarge { edge: u32, weight: f64 },

    /// Operation requires at least one edge.
    #[error("graph has no live edges")]
    EmptyGraph,

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{0}")]
    Domain(String),

    /// Iterative solver exhausted its round budget.
    #[error("did not converge within {rounds} rounds")]
    NonConvergence { rounds: u32 },

    /// Error attributed to a specific edge.
    #[error("edge {edge}: {source}")]
    OnEdge {
        edge: u32,
        #[source]
        source: Box<Error>,
    },

    /// Error attributed to a specific flow iteration.
    #[error("iteration {iteration}: {source}")]
    AtIteration {
        iteration: u32,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn on_edge(self, edge: crate::graph::EdgeId) -> Error {
        Error::OnEdge {
            edge: edge.0,
            source: Box::new(self),
        }
    }

    pub fn at_iteration(self, iteration: u32) -> Error {
        Error::AtIteration {
            iteration,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
