//! Ice-flower systems, star-graphic lattices, felicitous-difference total
//! colorings and Topcode-matrix encoding of graphs.

pub mod coloring;
pub mod degree;
pub mod error;
pub mod generate;
pub mod graph;
pub mod hamilton;
pub mod ice_flower;
pub mod iso;
pub mod lattice;
pub mod leaf_ops;
pub mod planar;
mod textio;
pub mod topcode;
pub mod vcolor;

pub use coloring::{ColoredGraph, FdtReport, FdtSearch, TotalColoring};
pub use degree::DegreeSequence;
pub use error::{Error, Result};
pub use graph::{Edge, Graph, Renumbering, Vertex};
pub use leaf_ops::LeafEdge;
