use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible moduli: {left} vs {right}")]
    IncompatibleModulus { left: String, right: String },

    #[error("series is not invertible: constant term {constant} is not a unit{context}")]
    NotInvertible { constant: String, context: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("series has order {have} but {need} coefficients are required")]
    InsufficientOrder { have: usize, need: usize },

    #[error("theta specification diverges: exponents a = b = 0")]
    DivergentSpec,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime {p} is not eligible: requires {hypothesis}")]
    Ineligible { p: u64, hypothesis: String },

    #[error("offset is not integral: {0}")]
    NonIntegralOffset(String),

    #[error("missing parameter `{0}`")]
    MissingParameter(&'static str),

    #[error("n = {n} exceeds the explicit enumeration limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("required series order {need} exceeds the order limit {limit}")]
    OrderBudget { need: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("independent constructions disagree: {0}")]
    RouteMismatch(String),
}

impl Error {
    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}
