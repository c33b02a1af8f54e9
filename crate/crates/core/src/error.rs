use thiserror::Error;

/// Errors surfaced by the numerical kernels and the operator modules.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix must be square, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },

    #[error("numeric range error: {0}")]
    NumericRange(String),

    #[error("matrix is not Hermitian within tolerance: residual {residual:.3e} > {tol:.3e}")]
    NotHermitian { residual: f64, tol: f64 },

    #[error("eigenvalue {eigenvalue:.12e} lies outside the domain of the scalar function")]
    SpectrumDomain { eigenvalue: f64 },

    #[error("operator is numerically singular: condition number {cond:.3e} exceeds {limit:.1e}")]
    Singular { cond: f64, limit: f64 },

    #[error("{kind} membership violated: residual {residual:.3e} > {tol:.3e}")]
    Membership {
        kind: &'static str,
        residual: f64,
        tol: f64,
    },

    #[error("gamma must be a nonzero real number for orbit-level operations")]
    GammaZero,

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
