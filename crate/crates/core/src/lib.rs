//! Pentagraphs: graphs of girth at least five whose induced odd cycles all
//! have length five.
//!
//! The crate recognizes them, four-colours them by distance layers, and
//! three-colours them by recursive decomposition along P3-cutsets, strong
//! parity star-cutsets, clique cutsets and the Petersen graph, recombining
//! the pieces with Kempe exchanges. Every result carries a certificate that
//! can be re-checked against the input graph.

pub mod bitset;
pub mod coloring;
pub mod corpus;
pub mod decomposition;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod limits;
pub mod recognition;
pub mod structure;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use coloring::{four_color, three_color, three_color_with, verify_coloring, Coloring, ColoringError};
pub use decomposition::{decompose, decompose_with, DecompositionError, DecompositionOutcome, Priority};
pub use graph::{Bipartition, Graph, GraphError, InducedSubgraph, Layering};
pub use limits::{Exhausted, Limits, Meter};
pub use recognition::{recognize, RecognitionReport, Verdict};
