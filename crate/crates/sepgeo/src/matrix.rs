//! Dense complex 2x2 and 4x4 matrices and the bipartite operations on them.
//!
//! The 4x4 composite index is fixed throughout the crate as
//! `0 = (up,up)`, `1 = (up,down)`, `2 = (down,up)`, `3 = (down,down)`,
//! with subsystem `a` as the slow (first) factor. Row-major storage.

use std::ops::{Add, Index, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol::HERMITICITY_TOL;

/// Shorthand for a real complex number.
#[inline]
pub fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Dense 2x2 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMatrix2 {
    entries: [[Complex64; 2]; 2],
}

/// Dense 4x4 complex matrix; the workhorse for two-qubit states and their
/// partial transposes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMatrix4 {
    entries: [[Complex64; 4]; 4],
}

macro_rules! impl_matrix_common {
    ($name:ident, $n:expr) => {
        impl $name {
            /// Builds a matrix after checking that every entry is finite.
            pub fn new(entries: [[Complex64; $n]; $n]) -> Result<Self> {
                for (i, row) in entries.iter().enumerate() {
                    for (j, e) in row.iter().enumerate() {
                        if !e.re.is_finite() || !e.im.is_finite() {
                            return Err(Error::NonFinite { row: i, col: j });
                        }
                    }
                }
                Ok(Self { entries })
            }

            /// Builds a matrix from entries known to be finite.
            pub(crate) fn from_entries(entries: [[Complex64; $n]; $n]) -> Self {
                Self { entries }
            }

            /// Builds a real matrix from `f64` entries.
            pub fn from_real(entries: [[f64; $n]; $n]) -> Result<Self> {
                let mut m = [[Complex64::ZERO; $n]; $n];
                for i in 0..$n {
                    for j in 0..$n {
                        m[i][j] = re(entries[i][j]);
                    }
                }
                Self::new(m)
            }

            /// All-zero matrix.
            pub fn zeros() -> Self {
                Self {
                    entries: [[Complex64::ZERO; $n]; $n],
                }
            }

            /// Identity matrix.
            pub fn identity() -> Self {
                let mut m = Self::zeros();
                for i in 0..$n {
                    m.entries[i][i] = Complex64::ONE;
                }
                m
            }

            /// Diagonal matrix from real entries.
            pub fn diagonal(d: [f64; $n]) -> Self {
                let mut m = Self::zeros();
                for i in 0..$n {
                    m.entries[i][i] = re(d[i]);
                }
                m
            }

            /// Matrix dimension.
            pub const fn dim() -> usize {
                $n
            }

            /// Conjugate transpose.
            pub fn adjoint(&self) -> Self {
                let mut m = Self::zeros();
                for i in 0..$n {
                    for j in 0..$n {
                        m.entries[i][j] = self.entries[j][i].conj();
                    }
                }
                m
            }

            /// Plain transpose.
            pub fn transpose(&self) -> Self {
                let mut m = Self::zeros();
                for i in 0..$n {
                    for j in 0..$n {
                        m.entries[i][j] = self.entries[j][i];
                    }
                }
                m
            }

            /// Trace.
            pub fn trace(&self) -> Complex64 {
                (0..$n).map(|i| self.entries[i][i]).sum()
            }

            /// Entrywise scaling by a real factor.
            pub fn scale(&self, factor: f64) -> Self {
                let mut m = *self;
                for row in m.entries.iter_mut() {
                    for e in row.iter_mut() {
                        *e *= factor;
                    }
                }
                m
            }

            /// Largest Hermiticity deviation `|a_ij - conj(a_ji)|` together
            /// with the offending entry position.
            pub fn hermiticity_deviation(&self) -> (f64, usize, usize) {
                let mut worst = (0.0_f64, 0, 0);
                for i in 0..$n {
                    for j in i..$n {
                        let dev = (self.entries[i][j] - self.entries[j][i].conj()).norm();
                        // NaN ranks worst of all.
                        if dev.is_nan() {
                            return (dev, i, j);
                        }
                        if dev > worst.0 {
                            worst = (dev, i, j);
                        }
                    }
                }
                worst
            }

            /// Checks Hermiticity to the given tolerance. NaN deviations fail.
            pub fn check_hermitian(&self, tol: f64) -> Result<()> {
                let (dev, i, j) = self.hermiticity_deviation();
                if dev <= tol {
                    Ok(())
                } else {
                    Err(Error::NotHermitian {
                        row: i,
                        col: j,
                        deviation: dev,
                        tol,
                    })
                }
            }

            /// Largest entrywise absolute difference to another matrix.
            pub fn max_abs_diff(&self, other: &Self) -> f64 {
                let mut worst = 0.0_f64;
                for i in 0..$n {
                    for j in 0..$n {
                        worst = worst.max((self.entries[i][j] - other.entries[i][j]).norm());
                    }
                }
                worst
            }
        }

        impl Index<(usize, usize)> for $name {
            type Output = Complex64;

            fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
                &self.entries[i][j]
            }
        }

        impl Add for $name {
            type Output = $name;

            fn add(self, rhs: $name) -> $name {
                let mut m = self;
                for i in 0..$n {
                    for j in 0..$n {
                        m.entries[i][j] += rhs.entries[i][j];
                    }
                }
                m
            }
        }

        impl Sub for $name {
            type Output = $name;

            fn sub(self, rhs: $name) -> $name {
                let mut m = self;
                for i in 0..$n {
                    for j in 0..$n {
                        m.entries[i][j] -= rhs.entries[i][j];
                    }
                }
                m
            }
        }

        impl Mul for $name {
            type Output = $name;

            fn mul(self, rhs: $name) -> $name {
                let mut m = $name::zeros();
                for i in 0..$n {
                    for k in 0..$n {
                        let a = self.entries[i][k];
                        if a == Complex64::ZERO {
                            continue;
                        }
                        for j in 0..$n {
                            m.entries[i][j] += a * rhs.entries[k][j];
                        }
                    }
                }
                m
            }
        }
    };
}

impl_matrix_common!(ComplexMatrix2, 2);
impl_matrix_common!(ComplexMatrix4, 4);

impl ComplexMatrix4 {
    /// Partial transpose over the second subsystem: in the 2x2 block
    /// decomposition over subsystem `a`, each block is transposed in place.
    /// Entrywise this swaps the fast indices, `(m,mu),(n,nu) -> (m,nu),(n,mu)`.
    /// A pure entry permutation, hence an exact involution.
    pub fn partial_transpose(&self) -> Self {
        let mut m = Self::zeros();
        for am in 0..2 {
            for an in 0..2 {
                for bm in 0..2 {
                    for bn in 0..2 {
                        m.entries[2 * am + bm][2 * an + bn] =
                            self.entries[2 * am + bn][2 * an + bm];
                    }
                }
            }
        }
        m
    }

    /// Traces out the second subsystem: `rho_a[m,n] = sum_mu rho[(m,mu),(n,mu)]`.
    pub fn partial_trace_b(&self) -> ComplexMatrix2 {
        let mut m = ComplexMatrix2::zeros();
        for am in 0..2 {
            for an in 0..2 {
                m.entries[am][an] =
                    self.entries[2 * am][2 * an] + self.entries[2 * am + 1][2 * an + 1];
            }
        }
        m
    }
}

/// Kronecker product with subsystem `a` as the slow index:
/// `(a (x) b)[(2m + mu), (2n + nu)] = a[m,n] * b[mu,nu]`.
pub fn tensor_product(a: &ComplexMatrix2, b: &ComplexMatrix2) -> ComplexMatrix4 {
    let mut m = ComplexMatrix4::zeros();
    for am in 0..2 {
        for an in 0..2 {
            for bm in 0..2 {
                for bn in 0..2 {
                    m.entries[2 * am + bm][2 * an + bn] = a.entries[am][an] * b.entries[bm][bn];
                }
            }
        }
    }
    m
}

/// Normalized Hilbert-Schmidt distance `sqrt(tr((a-b)^2) / 2)`.
///
/// With this normalization orthogonal pure states sit at distance 1.
/// Both inputs must be Hermitian; the offending entry is reported otherwise.
pub fn hs_distance(a: &ComplexMatrix4, b: &ComplexMatrix4) -> Result<f64> {
    a.check_hermitian(HERMITICITY_TOL)?;
    b.check_hermitian(HERMITICITY_TOL)?;
    let d = *a - *b;
    // tr(d^2) = sum |d_ij|^2 for Hermitian d.
    let mut sum = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            sum += d.entries[i][j].norm_sqr();
        }
    }
    Ok((0.5 * sum).sqrt())
}

/// The Pauli basis `sigma_0 = I, sigma_1 = X, sigma_2 = Y, sigma_3 = Z`.
pub fn pauli(index: usize) -> ComplexMatrix2 {
    let o = Complex64::ZERO;
    let l = Complex64::ONE;
    let i = Complex64::I;
    let entries = match index {
        0 => [[l, o], [o, l]],
        1 => [[o, l], [l, o]],
        2 => [[o, -i], [i, o]],
        3 => [[l, o], [o, -l]],
        _ => panic!("Pauli index {index} out of range 0..=3"),
    };
    ComplexMatrix2::from_entries(entries)
}

/// Normalized state vector in the 4-dimensional composite space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateVector4 {
    amplitudes: [Complex64; 4],
}

impl StateVector4 {
    /// Wraps amplitude components without normalizing.
    pub fn new(amplitudes: [Complex64; 4]) -> Self {
        Self { amplitudes }
    }

    /// Builds a real-amplitude vector.
    pub fn from_real(amplitudes: [f64; 4]) -> Self {
        Self {
            amplitudes: amplitudes.map(re),
        }
    }

    /// Amplitude components.
    pub fn amplitudes(&self) -> &[Complex64; 4] {
        &self.amplitudes
    }

    /// Inner product `<self|other>`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(other.amplitudes.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Euclidean norm.
    pub fn norm(&self) -> f64 {
        self.inner(self).re.sqrt()
    }

    /// Rank-one projector `|self><self|`.
    pub fn projector(&self) -> ComplexMatrix4 {
        let mut m = ComplexMatrix4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                m.entries[i][j] = self.amplitudes[i] * self.amplitudes[j].conj();
            }
        }
        m
    }
}
