//! Chromatic symmetric functions of small graphs.
//!
//! The crate computes the chromatic symmetric function (CSF) of a graph in the
//! monomial basis, expands it in forest-bases through a step/route/march
//! rewriting system, computes U-polynomials of forests, and reconstructs
//! independent-partition counts from induced subgraph censuses. Arithmetic is
//! exact throughout (`num-bigint` integers and rationals).
//!
//! Module map:
//!
//! - [`graph`]: graphs, graph6/edge-list I/O, canonical labeling, enumeration
//! - [`partition`]: integer partitions and the refinement order
//! - [`symmetric`]: monomial-basis symmetric functions and the CSF
//! - [`routes`]: steps, routes, marches and forest-basis expansion
//! - [`upoly`]: U-polynomials, corner numbers and the X/U comparison
//! - [`reconstruct`]: subgraph censuses, reconstruction and lambda-matrices
//! - [`verify`]: exhaustive verification suites used by the CLI and tests

pub mod error;
pub mod graph;
pub mod limits;
pub mod linalg;
pub mod par;
pub mod partition;
pub mod reconstruct;
pub mod routes;
pub mod symmetric;
pub mod upoly;
pub mod verify;

pub use error::{Error, ParseError, Result};
pub use graph::{CanonicalKey, Graph, GraphClass};
pub use partition::Partition;
pub use symmetric::MPoly;
