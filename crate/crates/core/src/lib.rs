//! Exact k-independence numbers, colouring bounds and matching constructions for
//! σ-hypergraphs `H(n, r, q | σ)`, with brute-force oracles to check them against.

pub mod error;
pub mod hypergraph;
pub mod independence;
pub mod matching;
pub mod numtheory;
pub mod oracle;

pub use error::{Error, Result};
pub use hypergraph::{
    count_edges, enumerate_edges, is_edge, make_spec, verify_matching, Edge, EdgePart, HypergraphSpec, Matching,
    Sigma, VerificationReport, Vertex, VertexSet, Violation,
};
pub use numtheory::frobenius_decompose;
