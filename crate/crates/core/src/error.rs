use thiserror::Error;

/// Errors shared across the estimation pipeline.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// The bucket count demands more samples than the data set has
    /// (`2k > n`). This encodes the information-theoretic requirement that
    /// the failure probability cannot be driven below `2^-O(n)`.
    #[error("insufficient samples: {buckets} buckets need at least {required} samples, got {available}")]
    InsufficientSamples {
        buckets: usize,
        required: usize,
        available: usize,
    },

    /// All rows coincide with the centering point, so no scale exists.
    #[error("degenerate data: {0}")]
    DegenerateData(String),

    /// Every weighted row of the matrix is zero; no singular direction exists.
    #[error("zero matrix: all weighted rows are zero")]
    ZeroMatrix,

    /// The capped simplex is empty or cannot absorb the required mass.
    #[error("infeasible cap: {0}")]
    InfeasibleCap(String),

    /// A caller-supplied argument violates a documented precondition.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
