use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("host core must have at least one vertex")]
    EmptyCore,
    #[error("pendant attachment {pendant_k} exceeds core order {n_core}")]
    PendantTooLarge { n_core: usize, pendant_k: usize },
    #[error("host of order {order} exceeds the 64-vertex limit")]
    HostTooLarge { order: usize },
    #[error("vertex {vertex} out of range for host of order {order}")]
    InvalidVertex { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{{{0}, {1}}} is not an edge of the host")]
    NotHostEdge(usize, usize),
    #[error("red adjacency is not symmetric at {{{0}, {1}}}")]
    Asymmetric(usize, usize),
    #[error("expected {expected} adjacency rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("unsupported restriction: {0}")]
    UnsupportedRestriction(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("{construction}: precondition violated: {condition} (n = {n}, m = {m})")]
    Precondition {
        construction: &'static str,
        condition: &'static str,
        n: usize,
        m: usize,
    },
    #[error("circulant order must be positive")]
    EmptyCirculant,
    #[error("red distance {distance} outside [1, {max}]")]
    BadDistance { distance: usize, max: usize },
    #[error("diagonals require an even order, got {order}")]
    DiagonalOnOddOrder { order: usize },
    #[error("diagonal index {index} out of range for order {order}")]
    BadDiagonal { index: usize, order: usize },
    #[error("diagonals are redundant when the half-order distance is already red")]
    RedundantDiagonals,
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TargetError {
    #[error("red star size must be at least 1, got {0}")]
    RedStarTooSmall(usize),
    #[error("blue star-plus-edge size must be at least 2, got {0}")]
    BlueStarTooSmall(usize),
    #[error("naive enumeration refused: host has {order} vertices (limit {limit})")]
    OracleHostTooLarge { order: usize, limit: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("formulas are defined for n, m >= 3; got n = {n}, m = {m}")]
    Domain { n: usize, m: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("search budget of {budget} nodes exhausted on {host}; arrowing undecided")]
    BudgetExhausted { host: String, budget: u64 },
    #[error("no arrowing host K_N with N <= {n_max}")]
    NoArrowingWithin { n_max: usize },
    #[error("ramsey bound must be at least 2, got {0}")]
    BadBound(usize),
    #[error("inconsistent Ramsey value r = {r}: {reason}")]
    InconsistentRamsey { r: usize, reason: &'static str },
    #[error("search returned a witness that fails the detectors on {host}")]
    UnsoundWitness { host: String },
    #[error(transparent)]
    Target(#[from] TargetError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed coloring document: {0}")]
    Malformed(#[from] serde_json::Error),
    #[error("unsupported schema version {0:?}")]
    SchemaVersion(String),
    #[error("pendant_k = {pendant_k} exceeds n_core = {n_core}")]
    PendantTooLarge { n_core: usize, pendant_k: usize },
    #[error("invalid host: {0}")]
    Host(ColoringError),
    #[error("edge [{0}, {1}] references a vertex outside the host")]
    EdgeOutOfRange(usize, usize),
    #[error("edge [{0}, {0}] is a loop")]
    Loop(usize),
    #[error("edge [{0}, {1}] listed more than once")]
    DuplicateEdge(usize, usize),
    #[error("edge [{0}, {1}] is not an edge of the host")]
    NotHostEdge(usize, usize),
    #[error("edge [{0}, {1}] must be written with the smaller index first")]
    Unordered(usize, usize),
}
