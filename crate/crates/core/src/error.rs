use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {series}: {constraint}")]
    InvalidRank { series: String, rank: usize, constraint: String },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("invalid painted set: {0}")]
    Painted(String),
    #[error("pattern mismatch: {0}")]
    Pattern(String),
    #[error("degenerate ordering: summand {0} gets a zero coefficient")]
    DegenerateOrdering(usize),
    #[error("singular linear system: {0}")]
    Singular(String),
    #[error("metric coefficients must be positive (component {0})")]
    NonPositive(usize),
    #[error("rank cap exceeded: rank {rank} > {cap}")]
    RankCap { rank: usize, cap: usize },
    #[error("unknown variable `{0}`")]
    Variable(String),
    #[error("no univariate member in `{0}`: branch is positive-dimensional")]
    PositiveDimensional(String),
    #[error("unresolved branch: {0}")]
    Unresolved(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("inadmissible space: {0}")]
    Inadmissible(String),
}
