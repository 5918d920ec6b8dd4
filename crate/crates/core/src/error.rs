use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge on vertex {0}")]
    LoopEdge(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("malformed graph6 string: {0}")]
    Graph6(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    /// The 2^n subset scans are refused above the configured cap.
    #[error(
        "graph has {n} vertices but the subset-scan cap is {cap}; \
         raise the cap (--cap) if you really want 2^{n} homology computations"
    )]
    CapExceeded { n: usize, cap: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("bound `{bound}` violated by {graph6}: {lhs} > {rhs}")]
    BoundViolation {
        bound: &'static str,
        graph6: String,
        lhs: i64,
        rhs: i64,
    },

    #[error(
        "pure resolution identity violated by {graph6}: deg h - reg = {lhs} but dim - depth = {rhs}"
    )]
    PureResolutionViolation { graph6: String, lhs: i64, rhs: i64 },
}
