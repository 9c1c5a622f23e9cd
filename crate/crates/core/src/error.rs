use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring order mismatch: Z[w_{left}] vs Z[w_{right}]")]
    OrderMismatch { left: u32, right: u32 },

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("invalid ring order {0}: must be at least 1")]
    InvalidOrder(u32),

    #[error(
        "malformed cyclotomic integer: expected {expected} coefficients for r = {r}, got {got}"
    )]
    CoefficientLength { r: u32, expected: usize, got: usize },

    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("cannot parse element {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("invalid letter {value}[{color}] for {context}")]
    InvalidLetter {
        value: u32,
        color: u32,
        context: String,
    },

    #[error("invalid group parameters: {0}")]
    InvalidParameters(String),

    #[error("statistic {stat} is not defined here: {reason}")]
    WrongFamily { stat: String, reason: String },

    #[error("character {name} does not apply: {reason}")]
    CharacterMismatch { name: String, reason: String },

    #[error("unknown identity id {0:?}")]
    UnknownIdentity(String),

    #[error("identity {id} does not accept these parameters: {reason}")]
    Constraint { id: String, reason: String },

    #[error("thread pool: {0}")]
    ThreadPool(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
