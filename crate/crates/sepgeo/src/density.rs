//! Validated two-qubit density matrices.

use crate::eigen::{eigenvalues_hermitian, Spectrum4};
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix4;
use crate::tol::{HERMITICITY_TOL, PSD_TOL, TRACE_TOL};

/// Validation tolerances for [`DensityMatrix::new_with`].
#[derive(Debug, Clone, Copy)]
pub struct StateTolerances {
    /// Largest accepted Hermiticity deviation.
    pub hermiticity: f64,
    /// Largest accepted deviation of the trace from one.
    pub trace: f64,
    /// Most negative accepted eigenvalue.
    pub psd: f64,
}

impl Default for StateTolerances {
    fn default() -> Self {
        Self {
            hermiticity: HERMITICITY_TOL,
            trace: TRACE_TOL,
            psd: PSD_TOL,
        }
    }
}

/// A 4x4 matrix validated to be Hermitian, unit trace, and positive
/// semidefinite within tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix4,
}

impl DensityMatrix {
    /// Validates with the default tolerances.
    pub fn new(matrix: ComplexMatrix4) -> Result<Self> {
        Self::new_with(matrix, &StateTolerances::default())
    }

    /// Validates Hermiticity, unit trace, and positive semidefiniteness
    /// against the supplied tolerances.
    pub fn new_with(matrix: ComplexMatrix4, tol: &StateTolerances) -> Result<Self> {
        matrix.check_hermitian(tol.hermiticity)?;
        let trace = matrix.trace().re;
        if !((trace - 1.0).abs() <= tol.trace) {
            return Err(Error::TraceNotOne {
                trace,
                tol: tol.trace,
            });
        }
        let min = eigenvalues_hermitian(&matrix)?.min();
        if min < -tol.psd {
            return Err(Error::NotPositiveSemidefinite {
                min_eigenvalue: min,
                tol: tol.psd,
            });
        }
        Ok(Self { matrix })
    }

    /// The underlying matrix.
    pub fn matrix(&self) -> &ComplexMatrix4 {
        &self.matrix
    }

    /// Spectrum of the state itself.
    pub fn spectrum(&self) -> Result<Spectrum4> {
        eigenvalues_hermitian(&self.matrix)
    }

    /// Spectrum of the partial transpose; its sign decides separability.
    pub fn partial_transpose_spectrum(&self) -> Result<Spectrum4> {
        eigenvalues_hermitian(&self.matrix.partial_transpose())
    }
}
