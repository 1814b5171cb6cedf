use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid set family: {0}")]
    InvalidFamily(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("inconsistent rotation system: {0}")]
    InconsistentEmbedding(String),

    #[error("graph is disconnected; faces and genus need a connected host")]
    Disconnected,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("girth {found} is below the required {required}")]
    GirthViolation { required: usize, found: usize },

    #[error("{what}: node budget of {budget} exhausted")]
    BudgetExhausted { what: &'static str, budget: u64 },

    #[error("resample budget exhausted after {attempts} attempts")]
    ResampleExhausted { attempts: u64 },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
