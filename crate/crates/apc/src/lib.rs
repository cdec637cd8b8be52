//! Alternating-cycle analysis and synthesis for 2-edge-colored colored
//! generalized sums of Hamiltonian-alternating summands.

pub mod analysis;
pub mod cgs;
pub mod doc;
pub mod graph;
pub mod oracle;
pub mod synthesis;

pub use cgs::{CgsInstance, Summand};
pub use graph::{ColoredGraph, CycleSeq, EdgeColor, VertexId};
