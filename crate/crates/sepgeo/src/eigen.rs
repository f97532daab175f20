//! Eigenvalues of small Hermitian matrices via cyclic Jacobi rotations.
//!
//! A 4x4 Hermitian matrix `A = R + iS` (R symmetric, S antisymmetric) embeds
//! into the 8x8 real symmetric matrix `[[R, -S], [S, R]]` whose spectrum is
//! that of `A` with every eigenvalue doubled. Cyclic Jacobi sweeps drive the
//! off-diagonal norm below [`crate::tol::JACOBI_OFF_NORM_TOL`]; at these sizes
//! convergence takes a handful of sweeps.

// Two-sided symmetric updates read clearer with explicit indices.
#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};
use crate::matrix::{pauli, tensor_product, ComplexMatrix2, ComplexMatrix4};
use crate::tol::{HERMITICITY_TOL, JACOBI_OFF_NORM_TOL, PSD_TOL};

/// Hard cap on Jacobi sweeps; reached only on broken input.
const MAX_SWEEPS: usize = 100;

/// The four real eigenvalues of a Hermitian 4x4 matrix, sorted ascending.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spectrum4 {
    eigenvalues: [f64; 4],
}

impl Spectrum4 {
    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> &[f64; 4] {
        &self.eigenvalues
    }

    /// Smallest eigenvalue.
    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// Largest eigenvalue.
    pub fn max(&self) -> f64 {
        self.eigenvalues[3]
    }

    /// Sum of eigenvalues.
    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    /// Product of eigenvalues (the determinant).
    pub fn product(&self) -> f64 {
        self.eigenvalues.iter().product()
    }
}

/// Frobenius norm of the strict upper triangle.
fn off_diagonal_norm<const N: usize>(m: &[[f64; N]; N]) -> f64 {
    let mut sum = 0.0;
    for i in 0..N {
        for j in (i + 1)..N {
            sum += m[i][j] * m[i][j];
        }
    }
    sum.sqrt()
}

/// One cyclic sweep of Jacobi rotations over all strict upper-triangle pairs.
fn jacobi_sweep<const N: usize>(m: &mut [[f64; N]; N]) {
    for p in 0..N {
        for q in (p + 1)..N {
            let apq = m[p][q];
            if apq == 0.0 {
                continue;
            }
            let theta = (m[q][q] - m[p][p]) / (2.0 * apq);
            // Smaller-angle root of t^2 + 2 t theta - 1 = 0, overflow-safe.
            let t = if theta >= 0.0 {
                1.0 / (theta + (1.0 + theta * theta).sqrt())
            } else {
                -1.0 / (-theta + (1.0 + theta * theta).sqrt())
            };
            let c = 1.0 / (1.0 + t * t).sqrt();
            let s = t * c;

            let app = m[p][p];
            let aqq = m[q][q];
            m[p][p] = app - t * apq;
            m[q][q] = aqq + t * apq;
            m[p][q] = 0.0;
            m[q][p] = 0.0;
            for k in 0..N {
                if k == p || k == q {
                    continue;
                }
                let akp = m[k][p];
                let akq = m[k][q];
                m[k][p] = c * akp - s * akq;
                m[p][k] = m[k][p];
                m[k][q] = s * akp + c * akq;
                m[q][k] = m[k][q];
            }
        }
    }
}

/// Diagonalizes a real symmetric matrix in place and returns its eigenvalues
/// sorted ascending.
fn jacobi_eigenvalues<const N: usize>(mut m: [[f64; N]; N]) -> Result<[f64; N]> {
    let mut sweeps = 0;
    while off_diagonal_norm(&m) >= JACOBI_OFF_NORM_TOL {
        if sweeps >= MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps });
        }
        jacobi_sweep(&mut m);
        sweeps += 1;
    }
    let mut eig = [0.0; N];
    for i in 0..N {
        eig[i] = m[i][i];
    }
    eig.sort_by(|a, b| a.partial_cmp(b).expect("eigenvalues are finite"));
    Ok(eig)
}

/// Eigenvalues of a Hermitian 4x4 matrix, ascending, via the real-symmetric
/// embedding. The input is checked for Hermiticity to `1e-12` and then
/// symmetrized exactly before embedding.
pub fn eigenvalues_hermitian(a: &ComplexMatrix4) -> Result<Spectrum4> {
    a.check_hermitian(HERMITICITY_TOL)?;
    let mut embedded = [[0.0_f64; 8]; 8];
    for i in 0..4 {
        for j in 0..4 {
            let h = 0.5 * (a[(i, j)] + a[(j, i)].conj());
            embedded[i][j] = h.re;
            embedded[i + 4][j + 4] = h.re;
            embedded[i + 4][j] = h.im;
            embedded[i][j + 4] = -h.im;
        }
    }
    let eig = jacobi_eigenvalues(embedded)?;
    // Every eigenvalue of the embedding is doubled; average adjacent pairs.
    let eigenvalues = [
        0.5 * (eig[0] + eig[1]),
        0.5 * (eig[2] + eig[3]),
        0.5 * (eig[4] + eig[5]),
        0.5 * (eig[6] + eig[7]),
    ];
    Ok(Spectrum4 { eigenvalues })
}

/// Eigenvalues of a Hermitian 2x2 matrix, ascending, in closed form.
pub fn eigenvalues_hermitian2(a: &ComplexMatrix2) -> Result<[f64; 2]> {
    a.check_hermitian(HERMITICITY_TOL)?;
    let d1 = a[(0, 0)].re;
    let d2 = a[(1, 1)].re;
    let off = 0.5 * (a[(0, 1)] + a[(1, 0)].conj());
    let mid = 0.5 * (d1 + d2);
    let radius = (0.25 * (d1 - d2) * (d1 - d2) + off.norm_sqr()).sqrt();
    Ok([mid - radius, mid + radius])
}

/// Von Neumann entropy `-sum(lambda ln lambda)` of a validated 2x2 reduced
/// state, in nats, with the `0 ln 0 = 0` convention. Eigenvalues are clamped
/// to `[0, 1]` before the logarithm.
pub fn von_neumann_entropy(rho_a: &ComplexMatrix2) -> Result<f64> {
    rho_a.check_hermitian(HERMITICITY_TOL)?;
    let trace = rho_a.trace().re;
    if !((trace - 1.0).abs() <= 1e-10) {
        return Err(Error::TraceNotOne { trace, tol: 1e-10 });
    }
    let eig = eigenvalues_hermitian2(rho_a)?;
    if eig[0] < -PSD_TOL {
        return Err(Error::NotPositiveSemidefinite {
            min_eigenvalue: eig[0],
            tol: PSD_TOL,
        });
    }
    let entropy: f64 = eig
        .iter()
        .map(|&l| {
            let l = l.clamp(0.0, 1.0);
            if l > 0.0 {
                -l * l.ln()
            } else {
                0.0
            }
        })
        .sum();
    Ok(entropy)
}

/// The partial-transpose map as a 16x16 real matrix in the
/// `sigma_mu (x) sigma_nu` basis (`mu, nu` in `0..=3`, index `4 mu + nu`).
///
/// Basis elements are orthogonal with `tr(B_i B_j) = 4 delta_ij`, so the
/// matrix entry is `tr(B_j . B_i^{T_b}) / 4`. In this basis the map is
/// diagonal with entries exactly `+1` or `-1`.
pub fn pt_superoperator_matrix() -> [[f64; 16]; 16] {
    let basis: Vec<ComplexMatrix4> = (0..16)
        .map(|i| tensor_product(&pauli(i / 4), &pauli(i % 4)))
        .collect();
    let mut m = [[0.0_f64; 16]; 16];
    for (i, b) in basis.iter().enumerate() {
        let image = b.partial_transpose();
        for (j, c) in basis.iter().enumerate() {
            m[j][i] = 0.25 * (*c * image).trace().re;
        }
    }
    m
}

/// Dimensions of the `+1` and `-1` eigenspaces of the partial-transpose map
/// acting on the 16-dimensional real space of Hermitian 4x4 matrices.
///
/// Partial transposition is an involution, so its eigenvalues are `+1` and
/// `-1` with multiplicities fixed by the trace: `dim(+1) = (16 + tr) / 2`.
/// The involution property is verified on the constructed matrix.
pub fn pt_superoperator_spectrum() -> (usize, usize) {
    let m = pt_superoperator_matrix();
    // m is a signed permutation; squaring it must reproduce I exactly.
    for i in 0..16 {
        for j in 0..16 {
            let mm: f64 = (0..16).map(|k| m[i][k] * m[k][j]).sum();
            let expected = if i == j { 1.0 } else { 0.0 };
            assert_eq!(mm, expected, "partial transpose is not an involution");
        }
    }
    let trace: f64 = (0..16).map(|i| m[i][i]).sum();
    let plus = ((16.0 + trace) / 2.0).round() as usize;
    (plus, 16 - plus)
}
