//! Crate-wide error type.

/// Errors shared by all modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// `log_psd` was handed a matrix that is not symmetric positive
    /// definite with unit determinant; usually a decomposition bug upstream.
    #[error("matrix is not symmetric positive definite with det 1: {0}")]
    NotSymmetricPosDef(String),

    /// Invalid quadrature specification (too few or odd number of points).
    #[error("invalid quadrature: {0}")]
    InvalidQuadrature(String),

    /// A Lévy model failed validation.
    #[error("invalid model: {0}")]
    InvalidModel(String),

    /// A scalar check was requested for a jump law that is not
    /// rotation invariant.
    #[error("jump law must be rotation invariant for scalar checks: {0}")]
    AnisotropicJumpLaw(String),

    /// Invalid argument (non-positive step, empty sample set, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The Plancherel calibration reference produced a degenerate integral.
    #[error("degenerate calibration reference: |integral| = {0:e}")]
    DegenerateReference(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
