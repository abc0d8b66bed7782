use alloc::string::String;

/// Errors raised by hypergraph construction and the analysis routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("uniformity must be at least 2, got {0}")]
    InvalidUniformity(usize),

    #[error("edge {edge} has {found} vertices, expected {expected}")]
    EdgeSize {
        edge: usize,
        expected: usize,
        found: usize,
    },

    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {edge} repeats a vertex")]
    RepeatedVertex { edge: usize },

    #[error("edge {edge} duplicates an earlier edge")]
    DuplicateEdge { edge: usize },

    #[error("vertex sets overlap at vertex {0}")]
    OverlappingSets(usize),

    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("hypergraph is not linear")]
    NotLinear,

    #[error("hypergraph is not hm-bipartite under the given partition")]
    NotHmBipartite,

    #[error("{what} exceeds capacity limit {limit}")]
    CapacityExceeded { what: &'static str, limit: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("walk count overflowed 128-bit accumulator at length {0}")]
    Overflow(usize),

    #[error("vector has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("power iteration did not converge; spectral radius in [{lower}, {upper}]")]
    NotConverged { lower: f64, upper: f64 },
}

pub type Result<T> = core::result::Result<T, Error>;
