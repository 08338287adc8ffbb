//! σ-hypergraphs on a `q × n` vertex grid: partitions, edges, matchings.

mod edge;
mod matching;
mod sigma;
mod vertex;

pub use edge::{count_edges, enumerate_edges, is_edge, Edge, EdgePart};
pub use matching::{verify_matching, Matching, VerificationReport, Violation};
pub use sigma::{make_spec, HypergraphSpec, Sigma};
pub use vertex::{Vertex, VertexSet};
