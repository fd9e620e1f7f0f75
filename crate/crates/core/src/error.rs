use thiserror::Error;

/// Errors shared by graph construction, monitoring queries, solvers and
/// reductions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) out of range for a graph with {n} vertices")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge index {index} out of range for a graph with {m} edges")]
    EdgeIndexOutOfRange { index: usize, m: usize },
    #[error("graph must be connected")]
    Disconnected,
    #[error("a pair requires two distinct vertices, got {0} twice")]
    DegeneratePair(usize),
    #[error("at least {min} vertices required, got {n}")]
    TooFewVertices { n: usize, min: usize },
    #[error("graph diameter {0} exceeds 2")]
    DiameterTooLarge(u32),
    #[error("copy count must be at least 1")]
    ZeroCopies,
    #[error("set is not a monitoring edge-geodetic set")]
    NotMegSet,
    #[error("set is not a vertex cover")]
    NotVertexCover,
    #[error("subsets cannot cover the universe")]
    UniverseNotCoverable,
    #[error("set-cover subsets must be nonempty")]
    EmptySubset,
    #[error("approximation parameters require ratio >= 1 and epsilon > 0")]
    InvalidApproxParams,
    #[error("inner solver returned an uncertified solution")]
    UncertifiedSolver,
    #[error("role data does not match the gadget graph")]
    GadgetMismatch,
    #[error("{0} budget exceeded")]
    BudgetExceeded(&'static str),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
