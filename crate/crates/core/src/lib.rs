//! Knot and link invariants of piecewise-linear spatial graph embeddings.
//!
//! The crate has four layers:
//!
//! - [`graph`]: labeled simple graphs, cycle and disjoint-cycle-pair
//!   enumeration, delta-wye exchange families, canonical labeling, and the
//!   named subgraphs of the standard K_{3,3,1,1};
//! - [`geom`]: exact rational 3-space embeddings (rectilinear and
//!   polyline), validation, regular projection and link diagram
//!   construction — no floating point anywhere;
//! - [`knot`]: linking numbers and Conway polynomials of link diagrams,
//!   with two independent routes to the z^2 coefficient;
//! - [`engine`]: the Conway-Gordon style identity and bound evaluators,
//!   cycle-type classification, link censuses, and delta-wye weight-map
//!   transport.
//!
//! The command line front end lives in the `conway-gordon` binary.

pub mod engine;
pub mod geom;
pub mod graph;
pub mod knot;
pub mod report;
pub mod sampling;

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("graph error: {0}")]
    Graph(String),
    #[error("geometry error: {0}")]
    Geometry(String),
    #[error("diagram error: {0}")]
    Diagram(String),
    #[error("invariant error: {0}")]
    Invariant(String),
    #[error("engine error: {0}")]
    Engine(String),
    #[error("sampling failed: {0}")]
    Sampling(String),
    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
