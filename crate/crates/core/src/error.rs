use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("node count must be at least 1")]
    ZeroNodes,

    #[error("filter half-width m = {m} must satisfy m < n = {n}")]
    FilterWidth { n: usize, m: usize },

    #[error("the compact trigonometric formula needs m >= 1")]
    CompactFormulaNeedsFilter,

    #[error("node index {k} out of range for n = {n}")]
    NodeIndex { k: usize, n: usize },

    #[error("basis index {j} out of range for n = {n}")]
    BasisIndex { j: usize, n: usize },

    #[error("angle {0} outside [0, pi]")]
    AngleOutOfRange(f64),

    #[error("abscissa {0} outside [-1, 1]")]
    AbscissaOutOfRange(f64),

    #[error("expected {expected} node values, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("Jacobi exponents must be non-negative (gamma = {gamma}, delta = {delta})")]
    NegativeExponent { gamma: f64, delta: f64 },

    #[error("evaluation grid is empty")]
    EmptyGrid,

    #[error("theta = {0} must lie strictly between 0 and 1")]
    Theta(f64),

    #[error("floor(theta * n) must be at least 1 (theta = {theta}, n = {n})")]
    DegenerateFilter { theta: f64, n: usize },

    #[error("degree sequence needs coprime 0 < mu < nu (mu = {mu}, nu = {nu})")]
    DegreeSequence { mu: usize, nu: usize },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("non-finite value {value} at x = {x}")]
    NonFinite { x: f64, value: f64 },
}
