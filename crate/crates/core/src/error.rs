use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input contains NaN or infinite entries")]
    NonFinite,
    #[error("matrix is not symmetric (‖L − Lᵀ‖_F = {0:.3e})")]
    NotSymmetric(f64),
    #[error("matrix is not unitary (‖W†W − I‖_max = {0:.3e})")]
    NotUnitary(f64),
    #[error("matrix is not symplectic (‖SᵀΔS − Δ‖_max = {0:.3e})")]
    NotSymplectic(f64),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("mode index {index} out of range for {modes} modes")]
    ModeIndex { index: usize, modes: usize },
    #[error("squeeze matrix has a nonzero diagonal entry at mode {0}")]
    NonzeroDiagonal(usize),
    #[error("|L[{row},{col}]| = {value:.6} exceeds the declared gain bound {bound:.6}")]
    GainBound {
        row: usize,
        col: usize,
        value: f64,
        bound: f64,
    },
    #[error(
        "covariance violates the uncertainty relation (smallest symplectic eigenvalue {0:.6e})"
    )]
    UncertaintyViolation(f64),
    #[error("covariance matrix is singular or not positive definite")]
    SingularCovariance,
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error(
        "Fock cutoff {cutoff} too small: tail mass {tail_mass:.3e}, try cutoff {suggested_cutoff}"
    )]
    CutoffTooSmall {
        cutoff: usize,
        tail_mass: f64,
        suggested_cutoff: usize,
    },
    #[error("Fock space dimension {0} exceeds the configured memory cap")]
    DimensionCap(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
