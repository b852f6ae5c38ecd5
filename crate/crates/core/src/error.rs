use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("the polynomial is zero")]
    ZeroPolynomial,
    #[error("zero scalar where a nonzero one is required")]
    ZeroScalar,
    #[error("empty point set")]
    EmptySet,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("matrix ({0}, {1}; {2}, {3}) is not unimodular")]
    NotUnimodular(i64, i64, i64, i64),
    #[error("cannot invert a scalar with more than one term: {0}")]
    NonMonomialInverse(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("{0} is outside the domain")]
    OutOfDomain(String),
    #[error("invalid rational {0:?}")]
    BadRational(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
