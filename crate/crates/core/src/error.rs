use thiserror::Error;

/// Errors shared by all graphon-lab modules.
#[derive(Debug, Error)]
pub enum Error {
    #[error("probability {0} outside [0,1]")]
    InvalidProbability(f64),

    #[error("invalid stepfunction: {0}")]
    InvalidStepFunction(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid bigraph: {0}")]
    InvalidBigraph(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("empty graph not allowed here")]
    EmptyGraph,

    #[error("step measures not commensurable at resolution {resolution}")]
    Incommensurable { resolution: f64 },

    #[error("problem size exceeds exact-computation bound: {0}")]
    SizeBound(String),

    #[error("alpha schedule cannot certify finiteness: {0}")]
    AlphaCertification(String),

    #[error("operation not supported for this graphon: {0}")]
    Unsupported(String),

    #[error("interval partition tail exceeded (group {group} beyond the {materialized} materialized groups)")]
    PartitionTailExceeded { group: u32, materialized: u32 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
