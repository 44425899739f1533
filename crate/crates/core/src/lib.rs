//! Exact construction, recognition and spectral certification of Deza graphs
//! built from strongly regular graphs by (generalised) dual Seidel switching
//! and permutation-based constructions.

pub mod census;
pub mod classify;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod matrix;
pub mod reproduce;
pub mod spectra;
pub mod switching;

pub use error::{Error, Result};
pub use graph::{induced_embedding, EmbeddedSubgraph, Graph, Permutation};
