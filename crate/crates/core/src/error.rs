//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Matrix or factor dimensions do not line up.
    #[error("dimension mismatch: {context}")]
    InvalidDimensions { context: String },

    /// Input to a Hermitian-only operation is not Hermitian.
    #[error("matrix is not Hermitian (max |A - A\u{2020}| = {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    /// Matrix has weight outside the diagonal and anti-diagonal corners.
    #[error("matrix is not in X form (off-pattern magnitude {magnitude:.3e})")]
    NotXState { magnitude: f64 },

    /// An eigenvalue is negative beyond round-off; the pipeline is broken.
    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")]
    NotPositive { min_eigenvalue: f64 },

    #[error("trace is {trace} instead of 1")]
    NotUnitTrace { trace: f64 },

    #[error("state vector norm\u{b2} is {norm_sq} instead of 1")]
    NotNormalized { norm_sq: f64 },

    #[error("non-finite entry in matrix or state")]
    NotFinite,

    /// Kraus operators do not sum to the identity.
    #[error("Kraus operators violate completeness (defect {defect:.3e})")]
    IncompleteKraus { defect: f64 },

    #[error("invalid parameter {name} = {value}")]
    InvalidParameter { name: &'static str, value: f64 },

    /// The heralded measurement branch has vanishing probability.
    #[error("post-selected branch has probability {trace:.3e}; the heralded outcome never occurs")]
    PostSelectionImpossible { trace: f64 },

    #[error("Jacobi iteration did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
}
