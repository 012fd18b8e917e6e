use thiserror::Error;

/// Errors produced by the game, optimizer, spectral, and experiment layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("leading cubic coefficient has magnitude {leading:.3e}, below {threshold:.3e} relative to the largest coefficient; polynomial is effectively quadratic")]
    DegenerateCubic { leading: f64, threshold: f64 },

    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix dimension {dim} exceeds the dense-solver limit of {limit}")]
    DimensionTooLarge { dim: usize, limit: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("game of dimension {dim} has no Jacobian oracle and is too large for finite differences")]
    JacobianUnavailable { dim: usize },

    #[error("gradient returned a non-finite value")]
    NonfiniteGradient,

    #[error("iterate diverged at step {step} (distance {distance:.3e})")]
    NonfiniteIterate { step: usize, distance: f64 },

    #[error("empty spectrum")]
    EmptySpectrum,

    #[error("empty grid")]
    EmptyGrid,

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("unknown method `{0}`")]
    UnknownMethod(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
