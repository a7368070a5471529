use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph has {n} vertices but at least {min} are required")]
    TooSmall { n: usize, min: usize },
    #[error("graph has {n} vertices but this computation is capped at {max}")]
    TooLarge { n: usize, max: usize },
    #[error("vector is not feasible: {0}")]
    InfeasibleVector(&'static str),
    #[error("no convergence after {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error("invalid family specification: {0}")]
    InvalidSpec(&'static str),
    #[error("a cartesian product needs at least two factors")]
    TooFewFactors,
    #[error("harmonic combination requires positive values")]
    NonPositiveInput,
    #[error("malformed linear program: {0}")]
    InvalidProgram(&'static str),
    #[error("linear program unexpectedly {0}")]
    UnexpectedStatus(&'static str),
    #[error("simplex exceeded {0} pivots")]
    IterationCap(usize),
}

pub type Result<T> = core::result::Result<T, Error>;
