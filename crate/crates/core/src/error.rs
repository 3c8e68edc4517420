use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),

    #[error("malformed graph6: {0}")]
    Graph6(String),

    /// Two vertices share a D-neighborhood, so every bijection gives them equal weights.
    #[error("vertices {0} and {1} have identical D-neighborhoods")]
    TwinObstruction(usize, usize),

    #[error("provably infeasible: {0}")]
    ProvablyInfeasible(String),

    #[error("search budget exceeded after {0} nodes")]
    BudgetExceeded(u64),

    /// A construction produced a labeling that failed its own verification.
    #[error("verification failed: {0}")]
    Verification(String),
}
