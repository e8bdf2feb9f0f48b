use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("context mismatch: {left} variables vs {right} variables")]
    ContextMismatch { left: usize, right: usize },

    #[error("variable {var} out of range for {n} variables")]
    VariableOutOfRange { var: String, n: usize },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("polynomial involves y variables")]
    NotYFree,

    #[error("diagram has {cells} cells but the context has {n} variables")]
    CellCountMismatch { cells: usize, n: usize },

    #[error("diagram is degenerate (repeated cell or cell outside the positive quadrant)")]
    DegenerateDiagram,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("cell ({i},{j}) is not in the partition {partition}")]
    CellNotInPartition { i: usize, j: usize, partition: String },

    #[error("cell ({i},{j}) is at the top of its column")]
    TopOfColumn { i: usize, j: usize },

    #[error("k = {k} out of range 1..={n}")]
    KOutOfRange { k: usize, n: usize },

    #[error("empty variable set")]
    EmptyVariableSet,

    #[error("tableau flavor does not apply to this shape: {0}")]
    FlavorShapeMismatch(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("slide row {u} out of range 0..={max}")]
    SlideOutOfRange { u: usize, max: usize },

    #[error("quotient not visibly finite below degree cap {cap}")]
    QuotientNotFinite { cap: usize },

    #[error("basis certification failed: {0}")]
    Certification(String),

    #[error("{suite} accepts n-max up to {limit}, got {n_max}")]
    LimitExceeded { suite: String, n_max: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
