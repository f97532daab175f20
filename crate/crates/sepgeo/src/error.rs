//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by validation and classification.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An entry of a matrix or vector is NaN or infinite.
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    /// A matrix required to be Hermitian is not, within tolerance.
    #[error(
        "matrix is not Hermitian: |a[{row},{col}] - conj(a[{col},{row}])| = {deviation:.3e} \
         exceeds {tol:.1e}"
    )]
    NotHermitian {
        row: usize,
        col: usize,
        deviation: f64,
        tol: f64,
    },

    /// Trace deviates from one beyond tolerance.
    #[error("trace {trace:.17} deviates from 1 by more than {tol:.1e}")]
    TraceNotOne { trace: f64, tol: f64 },

    /// Smallest eigenvalue is too negative for a positive semidefinite state.
    #[error(
        "matrix is not positive semidefinite: min eigenvalue {min_eigenvalue:.3e} < -{tol:.1e}"
    )]
    NotPositiveSemidefinite { min_eigenvalue: f64, tol: f64 },

    /// Basis parameter outside its closed range `[0, pi/4]`.
    #[error("alpha = {value} is outside [0, pi/4]")]
    AlphaOutOfRange { value: f64 },

    /// A mixture weight is more negative than the clamping tolerance allows.
    #[error("weight w{index} = {value:.3e} is negative beyond tolerance")]
    NegativeWeight { index: usize, value: f64 },

    /// Mixture weights do not sum to one within tolerance.
    #[error("weights sum to {sum:.17}, not 1 within {tol:.1e}")]
    WeightSum { sum: f64, tol: f64 },

    /// Requested a cone surface point from a degenerate (plane-pair) surface.
    #[error("cone surface is degenerate; use the plane descriptors instead")]
    DegenerateCone,

    /// The closed-form factor oracle and the eigenvalue oracle disagree.
    /// This signals an implementation bug, never an expected outcome.
    #[error(
        "separability oracles disagree: min factor {min_factor:.6e} vs \
         min eigenvalue {min_eigenvalue:.6e}"
    )]
    OracleDisagreement {
        min_factor: f64,
        min_eigenvalue: f64,
    },

    /// The eigensolver failed to reach its off-diagonal target.
    #[error("Jacobi diagonalization did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    /// A mesh face references a vertex that does not exist.
    #[error(
        "face {face} references vertex index {index} out of range for {vertex_count} vertices"
    )]
    FaceIndexOutOfRange {
        face: usize,
        index: usize,
        vertex_count: usize,
    },

    /// A mesh face has (numerically) zero area.
    #[error("face {face} is degenerate (area {area:.3e})")]
    DegenerateFace { face: usize, area: f64 },

    /// The four vertex reduced states disagree on their entropy.
    #[error("basis vertex entropies disagree by {spread:.3e}")]
    EntropyMismatch { spread: f64 },

    /// A correlation-tensor entry exceeds its physical bound.
    #[error("correlation tensor entry t[{row},{col}] = {value:.6} exceeds 1 in magnitude")]
    CorrelationOutOfRange { row: usize, col: usize, value: f64 },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
