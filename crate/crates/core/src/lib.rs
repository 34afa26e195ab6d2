//! Treewidth approximation by recursive balanced vertex separators.
//!
//! The crate builds triangulations (and matching tree decompositions) with
//! the factor-4, factor-4½ and three-way factor-(2α+1) separator recursions,
//! and ships the checkers and brute-force oracles used to validate them.

pub mod cli;
pub mod error;
pub mod flow;
pub mod generators;
pub mod graph;
pub mod io;
pub mod report;
pub mod separators;
pub mod triangulation;
pub mod validate;

pub use error::{FlowError, GraphError, OracleError, ParseError, ParseErrorKind};
pub use graph::{Graph, VertexSet};
pub use separators::Alpha;
pub use triangulation::{decompose, Algorithm, Decomposition, Mode, TreeDecomposition, TriangOutcome, Triangulation};
