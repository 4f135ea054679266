use thiserror::Error;

/// Errors produced by the walk library and the experiment runner.
#[derive(Debug, Error)]
pub enum WalkError {
    #[error("polygon order N must be at least 3, got {0}")]
    PolygonOrder(usize),

    #[error("invalid group element (s={s}, t={t}) for N={n}")]
    InvalidElement { s: u8, t: usize, n: usize },

    #[error("vertex index {v} out of range [0, {limit})")]
    VertexOutOfRange { v: usize, limit: usize },

    #[error("momentum index {k} out of range [0, {n})")]
    MomentumOutOfRange { k: usize, n: usize },

    #[error("coin operator is not unitary (deviation {deviation:e})")]
    NonUnitaryCoin { deviation: f64 },

    #[error("state is not normalized (norm^2 = {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },

    #[error("state has {got} amplitudes, expected {expected}")]
    DimensionMismatch { got: usize, expected: usize },

    #[error("time-average horizon must be at least 1")]
    EmptyHorizon,

    #[error("closed-form eigenvalues exist only for the Grover coin")]
    NotGrover,

    #[error("eigensolver failed for momentum block k={k}: {reason}")]
    Eigensolver { k: usize, reason: String },

    #[error("dense oracle supports N <= {max}, got N={n}")]
    OracleTooLarge { n: usize, max: usize },

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, WalkError>;
