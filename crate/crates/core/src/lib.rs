//! Cut complexes of graphs and the tools to study them: graph builders,
//! simplicial complexes stored by facets, shelling verification and search,
//! exact simplicial homology, and an explicit shelling of the 3-cut complex
//! of the squared cycle.

pub mod error;
pub mod graph;
pub mod homology;
pub mod simplicial;
pub mod vertex_set;
pub mod wn_shelling;

pub use error::{Error, Result};
pub use graph::{circulant, squared_cycle, Graph};
pub use homology::{betti, BettiVector, FieldSpec};
pub use simplicial::{
    clique_complex, cut_complex, total_cut_complex, ShellingReport, ShellingSearch, ShellingWitness, SimplicialComplex,
};
pub use vertex_set::VertexSet;
