use thiserror::Error;

/// Errors produced by graph, complex and homology operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for ground set of size {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("ground set size {0} exceeds the supported maximum of 64")]
    TooManyVertices(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{0} is not a face of the complex")]
    NotAFace(String),

    #[error("complex is not pure")]
    NotPure,

    #[error("operation undefined on the void complex")]
    VoidComplex,

    #[error("order is not a permutation of the facets: {0}")]
    NotAPermutation(String),

    #[error("shelling report is invalid (witness positions {earlier}, {later})")]
    InvalidShelling { earlier: usize, later: usize },

    #[error("{0} is not a facet of the 3-cut complex")]
    NotAFacet(String),

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
