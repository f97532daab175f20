//! Centralized numerical tolerances.
//!
//! Every threshold used for validation or classification is defined here so
//! that no module carries ad-hoc magic numbers. The values fall into two
//! groups: machine-precision bounds for operations that are exact up to
//! rounding (entry permutations, closed-form polynomials) and looser bounds
//! for quantities that pass through the iterative eigensolver.

/// Maximum allowed deviation `|a_ij - conj(a_ji)|` for a matrix accepted as
/// Hermitian. Exact inputs only accumulate a few ulps here.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Maximum allowed deviation `|tr - 1|` for a unit-trace density matrix.
pub const TRACE_TOL: f64 = 1e-12;

/// Most negative eigenvalue accepted as "positive semidefinite". The
/// eigensolver resolves eigenvalues of O(1) matrices to ~1e-14, so 1e-10
/// leaves four orders of headroom.
pub const PSD_TOL: f64 = 1e-10;

/// Weight-sum tolerance for simplex weights before exact renormalization.
pub const WEIGHT_SUM_TOL: f64 = 1e-10;

/// Individual weights may undershoot zero by this much; they are clamped.
pub const WEIGHT_NEG_TOL: f64 = 1e-12;

/// Jacobi sweeps stop once the off-diagonal Frobenius norm drops below this.
pub const JACOBI_OFF_NORM_TOL: f64 = 1e-14;

/// Default half-width of the boundary band on the closed-form factors.
/// States with `|min(f1, f2)|` inside the band are labelled `Boundary`.
/// The band lives on the factors, not on eigenvalues: the factors are
/// polynomial in the inputs and carry no solver noise.
pub const BOUNDARY_BAND: f64 = 1e-9;

/// Slack allowed on the eigenvalue witness when cross-checking the two
/// separability oracles against each other.
pub const ORACLE_CROSS_CHECK_TOL: f64 = 1e-9;

/// A point is accepted as lying inside the tetrahedron when every
/// barycentric weight is at least `-INSIDE_TOL`.
pub const INSIDE_TOL: f64 = 1e-10;

/// Triangles with area at or below this are dropped as degenerate.
pub const DEGENERATE_FACE_AREA: f64 = 1e-14;

/// Bound on how far correlation-tensor entries may exceed 1 in magnitude.
pub const CORRELATION_ENTRY_TOL: f64 = 1e-10;
