use alloc::string::String;

/// Errors raised by graph construction, centrality evaluation and the
/// random models.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("self-loop on node `{0}`")]
    SelfLoop(String),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(String, String),

    #[error("edge weight must be positive and finite, got {0}")]
    InvalidWeight(f64),

    #[error("unknown node index {0}")]
    UnknownNode(usize),

    #[error("graph is not connected")]
    Disconnected,

    #[error("node {0} has degree zero")]
    ZeroDegree(usize),

    #[error("graph is empty")]
    EmptyGraph,

    /// A power `base^alpha` (or a quantity built from it) left the normal
    /// binary64 range.
    #[error("{base}^{alpha} is not representable as a normal binary64 value")]
    Computability { base: f64, alpha: f64 },

    #[error("alpha = {alpha} lies outside the safe interval [{lo}, {hi}]")]
    OutsideSafeInterval { alpha: f64, lo: f64, hi: f64 },

    #[error("non-finite centrality value at node {0}")]
    NonFiniteValue(usize),

    #[error("lines {0} and {1} are coincident")]
    CoincidentLines(usize, usize),

    #[error("invalid interval [{0}, {1}]")]
    InvalidInterval(f64, f64),

    #[error("invalid model parameter: {0}")]
    InvalidParameter(&'static str),

    #[error("no connected graph after {0} attempts")]
    ConnectivityNotAchieved(usize),

    #[error("rewiring needs at least two edges")]
    TooFewEdges,

    #[error("no valid swap found within {0} attempts")]
    SwapBudgetExhausted(usize),
}

pub type Result<T> = core::result::Result<T, Error>;
