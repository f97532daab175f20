//! The entanglement-parameterized basis family, its tetrahedron of mixtures,
//! and the cartesian chart on the mixture simplex.
//!
//! For a parameter `alpha` in `[0, pi/4]` with `c = cos(alpha)`,
//! `s = sin(alpha)`, the four orthonormal basis states are
//!
//! ```text
//! |1> = c|uu> + s|dd>      |2> = s|uu> - c|dd>
//! |3> = c|ud> + s|du>      |4> = s|ud> - c|du>
//! ```
//!
//! At `alpha = 0` these are product states; at `alpha = pi/4` the Bell basis.
//! Their projectors sit at the vertices of a regular tetrahedron of edge 1 in
//! Hilbert-Schmidt distance, and mixtures `sum(w_i rho_i)` fill it. The chart
//!
//! ```text
//! x = (w1 - w2)/2,  y = (w3 - w4)/2,  z = (w3 + w4 - w1 - w2)/(2 sqrt 2)
//! ```
//!
//! maps the weight simplex isometrically onto that tetrahedron.

use crate::density::DensityMatrix;
use crate::eigen::von_neumann_entropy;
use crate::error::{Error, Result};
use crate::matrix::{pauli, tensor_product, ComplexMatrix4, StateVector4};
use crate::tol::{CORRELATION_ENTRY_TOL, WEIGHT_NEG_TOL, WEIGHT_SUM_TOL};

/// `1 / (2 sqrt 2)`, the tetrahedron's half-height in the chart.
pub const APEX_HEIGHT: f64 = std::f64::consts::SQRT_2 / 4.0;

/// Basis parameter in radians, restricted to the closed range `[0, pi/4]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Alpha {
    radians: f64,
}

impl Alpha {
    /// Largest admissible value, `pi/4`.
    pub const MAX: f64 = std::f64::consts::FRAC_PI_4;

    /// Validates the range; no silent clamping.
    pub fn new(radians: f64) -> Result<Self> {
        if !radians.is_finite() || !(0.0..=Self::MAX).contains(&radians) {
            return Err(Error::AlphaOutOfRange { value: radians });
        }
        Ok(Self { radians })
    }

    /// Builds from a fraction of `pi/4`, so `1.0` is the Bell-basis endpoint.
    pub fn from_fraction(fraction: f64) -> Result<Self> {
        Self::new(fraction * Self::MAX)
    }

    /// Value in radians.
    pub fn radians(&self) -> f64 {
        self.radians
    }

    /// `(cos alpha, sin alpha)`.
    pub fn cos_sin(&self) -> (f64, f64) {
        (self.radians.cos(), self.radians.sin())
    }

    /// The recurring coefficient `k = cos^2(alpha) sin^2(alpha)`, in `[0, 1/4]`.
    pub fn k(&self) -> f64 {
        let (c, s) = self.cos_sin();
        c * c * s * s
    }
}

/// Mixture weights on the probability simplex. Construction clamps tiny
/// negative components and renormalizes exactly (divides by the sum), so a
/// stored value always sums to 1 up to one rounding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimplexWeights {
    w: [f64; 4],
}

impl SimplexWeights {
    /// Validates and normalizes four weights.
    pub fn new(w: [f64; 4]) -> Result<Self> {
        let mut w = w;
        for (i, wi) in w.iter_mut().enumerate() {
            if !wi.is_finite() {
                return Err(Error::NonFinite { row: i, col: 0 });
            }
            if *wi < -WEIGHT_NEG_TOL {
                return Err(Error::NegativeWeight {
                    index: i + 1,
                    value: *wi,
                });
            }
            if *wi < 0.0 {
                *wi = 0.0;
            }
        }
        let sum: f64 = w.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(Error::WeightSum {
                sum,
                tol: WEIGHT_SUM_TOL,
            });
        }
        for wi in w.iter_mut() {
            *wi /= sum;
        }
        Ok(Self { w })
    }

    /// The barycenter `(1/4, 1/4, 1/4, 1/4)`.
    pub fn barycenter() -> Self {
        Self { w: [0.25; 4] }
    }

    /// Unit weight on vertex `index` (0-based).
    pub fn vertex(index: usize) -> Self {
        let mut w = [0.0; 4];
        w[index] = 1.0;
        Self { w }
    }

    /// The weight components.
    pub fn weights(&self) -> &[f64; 4] {
        &self.w
    }
}

/// A point of the chart, dimensionless Hilbert-Schmidt coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartesianPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl CartesianPoint {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    /// Euclidean distance to another point.
    pub fn distance(&self, other: &Self) -> f64 {
        let (dx, dy, dz) = (self.x - other.x, self.y - other.y, self.z - other.z);
        (dx * dx + dy * dy + dz * dz).sqrt()
    }
}

/// Barycentric coordinates of a chart point, possibly outside the simplex.
///
/// Boundary scans and mesh clipping probe points slightly outside the
/// tetrahedron, so inversion reports rather than rejects them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BarycentricCoords {
    weights: [f64; 4],
}

impl BarycentricCoords {
    /// Raw weight values; they sum to 1 but may be negative.
    pub fn raw(&self) -> &[f64; 4] {
        &self.weights
    }

    /// Whether all weights are at least `-tol`.
    pub fn inside(&self, tol: f64) -> bool {
        self.weights.iter().all(|&w| w >= -tol)
    }

    /// The most negative slack across the four half-space constraints
    /// (`0` when well inside).
    pub fn min_weight(&self) -> f64 {
        self.weights.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Validates into simplex weights; fails when genuinely outside.
    pub fn to_weights(&self) -> Result<SimplexWeights> {
        SimplexWeights::new(self.weights)
    }
}

/// The four orthonormal basis states at the given parameter.
///
/// Sign conventions are kept verbatim (states 2 and 4 carry a minus on the
/// second amplitude); they are irrelevant for the projectors.
pub fn basis_states(alpha: Alpha) -> [StateVector4; 4] {
    let (c, s) = alpha.cos_sin();
    [
        StateVector4::from_real([c, 0.0, 0.0, s]),
        StateVector4::from_real([s, 0.0, 0.0, -c]),
        StateVector4::from_real([0.0, c, s, 0.0]),
        StateVector4::from_real([0.0, s, -c, 0.0]),
    ]
}

/// Projector onto basis state `index` (0-based) at the given parameter.
pub fn vertex_projector(alpha: Alpha, index: usize) -> ComplexMatrix4 {
    basis_states(alpha)[index].projector()
}

/// The mixture `sum(w_i |i><i|)` as a validated density matrix.
///
/// Built from the outer products directly; the closed form (nonzero entries
/// only on the two 2x2 blocks over indices {0,3} and {1,2}) follows because
/// every basis state lives in one of those blocks.
pub fn mixture(weights: &SimplexWeights, alpha: Alpha) -> Result<DensityMatrix> {
    DensityMatrix::new(mixture_matrix(weights, alpha))
}

/// The mixture matrix without density-matrix validation. Used internally
/// where the inputs are already trusted and the PSD eigencheck would just
/// burn time.
pub fn mixture_matrix(weights: &SimplexWeights, alpha: Alpha) -> ComplexMatrix4 {
    let states = basis_states(alpha);
    let w = weights.weights();
    let mut acc = ComplexMatrix4::zeros();
    for (wi, state) in w.iter().zip(states.iter()) {
        acc = acc + state.projector().scale(*wi);
    }
    acc
}

/// The chart: `x = (w1-w2)/2`, `y = (w3-w4)/2`, `z = (w3+w4-w1-w2)/(2 sqrt 2)`.
pub fn weights_to_point(weights: &SimplexWeights) -> CartesianPoint {
    let [w1, w2, w3, w4] = *weights.weights();
    CartesianPoint {
        x: 0.5 * (w1 - w2),
        y: 0.5 * (w3 - w4),
        z: (w3 + w4 - w1 - w2) * APEX_HEIGHT,
    }
}

/// Inverse chart. The weights sum to 1 by construction:
/// `w1 = 1/4 + x - z/sqrt2`, `w2 = 1/4 - x - z/sqrt2`,
/// `w3 = 1/4 + y + z/sqrt2`, `w4 = 1/4 - y + z/sqrt2`.
pub fn point_to_weights(p: &CartesianPoint) -> BarycentricCoords {
    let q = p.z / std::f64::consts::SQRT_2;
    BarycentricCoords {
        weights: [
            0.25 + p.x - q,
            0.25 - p.x - q,
            0.25 + p.y + q,
            0.25 - p.y + q,
        ],
    }
}

/// Chart images of the four unit-weight corners:
/// `(1/2, 0, -h), (-1/2, 0, -h), (0, 1/2, h), (0, -1/2, h)` with
/// `h = 1/(2 sqrt 2)`. A regular tetrahedron of edge 1.
pub fn tetrahedron_vertices() -> [CartesianPoint; 4] {
    [
        CartesianPoint::new(0.5, 0.0, -APEX_HEIGHT),
        CartesianPoint::new(-0.5, 0.0, -APEX_HEIGHT),
        CartesianPoint::new(0.0, 0.5, APEX_HEIGHT),
        CartesianPoint::new(0.0, -0.5, APEX_HEIGHT),
    ]
}

/// 3x3 real correlation tensor `t[n][m] = tr(rho sigma_n (x) sigma_m)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationTensor {
    t: [[f64; 3]; 3],
}

impl CorrelationTensor {
    /// The tensor entries, row index on the first subsystem.
    pub fn entries(&self) -> &[[f64; 3]; 3] {
        &self.t
    }

    /// Diagonal entries `(t_xx, t_yy, t_zz)`.
    pub fn diagonal(&self) -> [f64; 3] {
        [self.t[0][0], self.t[1][1], self.t[2][2]]
    }
}

/// Pauli-Pauli expectation values of a state.
///
/// For family mixtures the tensor is diagonal with entries
/// `(4 c s (x + y), 4 c s (y - x), -2 sqrt2 z)`.
pub fn correlation_tensor(rho: &DensityMatrix) -> Result<CorrelationTensor> {
    let mut t = [[0.0; 3]; 3];
    for (n, row) in t.iter_mut().enumerate() {
        for (m, entry) in row.iter_mut().enumerate() {
            let observable = tensor_product(&pauli(n + 1), &pauli(m + 1));
            let value = (*rho.matrix() * observable).trace().re;
            if value.abs() > 1.0 + CORRELATION_ENTRY_TOL {
                return Err(Error::CorrelationOutOfRange {
                    row: n,
                    col: m,
                    value,
                });
            }
            *entry = value;
        }
    }
    Ok(CorrelationTensor { t })
}

/// Entanglement of the basis states at `alpha`: the von Neumann entropy (in
/// nats) of the reduced state of any vertex projector, which equals
/// `-c^2 ln c^2 - s^2 ln s^2`.
///
/// All four vertices are computed through the matrix path and must agree to
/// `1e-12`; a mismatch is an internal-consistency error.
pub fn basis_entanglement(alpha: Alpha) -> Result<f64> {
    let mut entropies = [0.0; 4];
    for (i, e) in entropies.iter_mut().enumerate() {
        let reduced = vertex_projector(alpha, i).partial_trace_b();
        *e = von_neumann_entropy(&reduced)?;
    }
    let spread = entropies.iter().copied().fold(f64::NEG_INFINITY, f64::max)
        - entropies.iter().copied().fold(f64::INFINITY, f64::min);
    if spread > 1e-12 {
        return Err(Error::EntropyMismatch { spread });
    }
    Ok(entropies[0])
}
