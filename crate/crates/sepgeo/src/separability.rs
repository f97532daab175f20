//! Separable / entangled / boundary classification of family mixtures.
//!
//! Two independent oracles decide positivity of the partial transpose, which
//! for two-qubit states is equivalent to separability:
//!
//! * the closed-form factors `f1`, `f2` below, whose product is
//!   `det(rho^{T_b})` and whose signs encode block positivity, and
//! * the eigenvalue spectrum of `rho^{T_b}` from the Jacobi kernel.
//!
//! Labels derive from the factors (polynomial, no solver noise); the
//! eigenvalue witness is reported alongside and cross-checked. The two
//! oracles disagreeing outside the boundary band is an internal bug, never an
//! expected outcome on valid inputs.

use std::fmt;

use crate::basis::{mixture_matrix, weights_to_point, Alpha, SimplexWeights};
use crate::eigen::eigenvalues_hermitian;
use crate::error::{Error, Result};
use crate::tol::{BOUNDARY_BAND, ORACLE_CROSS_CHECK_TOL};

/// The two quadratic factors of `det(rho^{T_b})` for a family mixture, with
/// `k = cos^2(alpha) sin^2(alpha)` and `b = (w1-w2)^2 - (w3-w4)^2`:
///
/// ```text
/// f1 = w1 w2 + k b        (determinant of the {0,3} block of rho^{T_b})
/// f2 = w3 w4 - k b        (determinant of the {1,2} block)
/// ```
///
/// Positivity of the partial transpose is exactly `f1 >= 0` and `f2 >= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryFactors {
    pub f1: f64,
    pub f2: f64,
}

impl BoundaryFactors {
    /// The smaller factor; its sign is the separability verdict.
    pub fn min(&self) -> f64 {
        self.f1.min(self.f2)
    }

    /// `f1 * f2 = det(rho^{T_b})`.
    pub fn det(&self) -> f64 {
        self.f1 * self.f2
    }
}

/// Separability verdict for a family mixture.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    Separable,
    Entangled,
    Boundary,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Label::Separable => "Separable",
            Label::Entangled => "Entangled",
            Label::Boundary => "Boundary",
        };
        f.write_str(name)
    }
}

/// Outcome of [`classify`]: the label, the eigenvalue witness, and the
/// closed-form factors that produced the label.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Classification {
    pub label: Label,
    /// Smallest eigenvalue of the partial transpose.
    pub witness: f64,
    pub factors: BoundaryFactors,
}

/// Closed-form evaluation of the two boundary factors.
pub fn boundary_factors(weights: &SimplexWeights, alpha: Alpha) -> BoundaryFactors {
    let [w1, w2, w3, w4] = *weights.weights();
    let k = alpha.k();
    let bracket = (w1 - w2) * (w1 - w2) - (w3 - w4) * (w3 - w4);
    BoundaryFactors {
        f1: w1 * w2 + k * bracket,
        f2: w3 * w4 - k * bracket,
    }
}

/// `det(rho^{T_b})` as the factor product `f1 * f2`. Agrees with the
/// eigenvalue product of the partial transpose to `1e-12`.
pub fn det_pt(weights: &SimplexWeights, alpha: Alpha) -> f64 {
    boundary_factors(weights, alpha).det()
}

/// Classifies a family mixture with the default boundary band.
pub fn classify(weights: &SimplexWeights, alpha: Alpha) -> Result<Classification> {
    classify_with(weights, alpha, BOUNDARY_BAND)
}

/// Classifies a family mixture.
///
/// The label comes from the closed-form factors: `Boundary` when
/// `|min(f1, f2)| < eps`, otherwise the sign of the smaller factor decides.
/// The eigenvalue oracle runs on every call; a sign contradiction between the
/// two outside the band returns [`Error::OracleDisagreement`].
pub fn classify_with(weights: &SimplexWeights, alpha: Alpha, eps: f64) -> Result<Classification> {
    assert!(eps > 0.0, "classification band must be positive");
    let factors = boundary_factors(weights, alpha);
    let min_factor = factors.min();

    let rho_pt = mixture_matrix(weights, alpha).partial_transpose();
    let witness = eigenvalues_hermitian(&rho_pt)?.min();

    let label = if min_factor.abs() < eps {
        Label::Boundary
    } else if min_factor > 0.0 {
        Label::Separable
    } else {
        Label::Entangled
    };

    // Cross-check: a positive factor floor forces a non-negative witness and
    // vice versa, up to solver noise.
    let guard = eps.max(ORACLE_CROSS_CHECK_TOL);
    let disagree = match label {
        Label::Separable => witness < -guard,
        Label::Entangled => witness > guard,
        Label::Boundary => false,
    };
    if disagree {
        return Err(Error::OracleDisagreement {
            min_factor,
            min_eigenvalue: witness,
        });
    }

    Ok(Classification {
        label,
        witness,
        factors,
    })
}

/// Whether the mixture is a fixed point of partial transposition.
///
/// For `cos(alpha) sin(alpha) != 0` the fixed-point set is the plane `x = y`;
/// at `alpha = 0` every mixture is fixed. The predicate works on the chart
/// coordinates and agrees with entrywise comparison of `rho` and `rho^{T_b}`
/// at the same tolerance.
pub fn is_fixed_point(weights: &SimplexWeights, alpha: Alpha, tol: f64) -> bool {
    let (c, s) = alpha.cos_sin();
    if c * s == 0.0 {
        return true;
    }
    let p = weights_to_point(weights);
    (p.x - p.y).abs() <= tol
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{random_weights, SplitMix64};

    const FRAC_PI_4: f64 = std::f64::consts::FRAC_PI_4;

    fn alpha(v: f64) -> Alpha {
        Alpha::new(v).unwrap()
    }

    #[test]
    fn barycenter_factors_are_one_sixteenth() {
        for a in [0.0, 0.3, FRAC_PI_4] {
            let f = boundary_factors(&SimplexWeights::barycenter(), alpha(a));
            assert_eq!(f.f1, 1.0 / 16.0);
            assert_eq!(f.f2, 1.0 / 16.0);
        }
    }

    #[test]
    fn bell_vertex_factors() {
        let f = boundary_factors(&SimplexWeights::vertex(0), alpha(FRAC_PI_4));
        assert!((f.f1 - 0.25).abs() < 1e-15);
        assert!((f.f2 + 0.25).abs() < 1e-15);
        assert!((f.det() + 1.0 / 16.0).abs() < 1e-15);
    }

    #[test]
    fn half_half_mixture_is_on_the_boundary() {
        let w = SimplexWeights::new([0.5, 0.5, 0.0, 0.0]).unwrap();
        let f = boundary_factors(&w, alpha(FRAC_PI_4));
        assert!((f.f1 - 0.25).abs() < 1e-15);
        assert_eq!(f.f2, 0.0);
        let c = classify(&w, alpha(FRAC_PI_4)).unwrap();
        assert_eq!(c.label, Label::Boundary);
    }

    #[test]
    fn det_at_barycenter_matches_identity_quarter() {
        assert!((det_pt(&SimplexWeights::barycenter(), alpha(0.5)) - 1.0 / 256.0).abs() < 1e-17);
    }

    #[test]
    fn symmetric_weights_give_nonnegative_factors() {
        // w1 = w2, w3 = w4 lies on the x = y = 0 axis: f1 = w1^2, f2 = w3^2.
        let w = SimplexWeights::new([0.3, 0.3, 0.2, 0.2]).unwrap();
        for a in [0.1, 0.5, FRAC_PI_4] {
            let f = boundary_factors(&w, alpha(a));
            assert!((f.f1 - 0.09).abs() < 1e-15);
            assert!((f.f2 - 0.04).abs() < 1e-15);
        }
    }

    #[test]
    fn maximally_mixed_state_is_separable() {
        let c = classify(&SimplexWeights::barycenter(), alpha(FRAC_PI_4)).unwrap();
        assert_eq!(c.label, Label::Separable);
    }

    #[test]
    fn bell_vertex_is_entangled_with_witness_half() {
        let c = classify(&SimplexWeights::vertex(0), alpha(FRAC_PI_4)).unwrap();
        assert_eq!(c.label, Label::Entangled);
        assert!((c.witness + 0.5).abs() < 1e-12);
    }

    #[test]
    fn product_basis_vertex_is_separable() {
        // At alpha = 0 every mixture is separable; the vertex is a product
        // state sitting on the degenerate boundary (f1 = w1 w2 = 0).
        let c = classify(&SimplexWeights::vertex(0), alpha(0.0)).unwrap();
        assert_ne!(c.label, Label::Entangled);
        assert!(c.witness >= -1e-12);
    }

    #[test]
    fn factor_product_matches_eigenvalue_product() {
        let mut rng = SplitMix64::new(0xdef1);
        for _ in 0..2000 {
            let w = random_weights(&mut rng);
            let a = alpha(rng.next_f64() * FRAC_PI_4);
            let spectrum =
                eigenvalues_hermitian(&mixture_matrix(&w, a).partial_transpose()).unwrap();
            assert!((det_pt(&w, a) - spectrum.product()).abs() < 1e-12);
        }
    }

    #[test]
    fn entangled_states_have_exactly_one_negative_factor() {
        // f1 + f2 = w1 w2 + w3 w4 >= 0, so both factors can never go negative.
        let mut rng = SplitMix64::new(0xfa02);
        let mut entangled = 0;
        for _ in 0..100_000 {
            let w = random_weights(&mut rng);
            let a = alpha(rng.next_f64() * FRAC_PI_4);
            let f = boundary_factors(&w, a);
            assert!(!(f.f1 < 0.0 && f.f2 < 0.0), "both factors negative");
            if f.min() < 0.0 {
                entangled += 1;
            }
        }
        assert!(
            entangled > 1000,
            "sampling produced too few entangled states"
        );
    }

    #[test]
    fn fixed_plane_predicate() {
        // w = (1/2, 0, 1/2, 0) has x = y = 1/4 for every alpha.
        let w = SimplexWeights::new([0.5, 0.0, 0.5, 0.0]).unwrap();
        for a in [0.1, 0.5, FRAC_PI_4] {
            assert!(is_fixed_point(&w, alpha(a), 1e-12));
        }
        assert!(!is_fixed_point(
            &SimplexWeights::vertex(0),
            alpha(FRAC_PI_4),
            1e-12
        ));
        // Everything is fixed at alpha = 0.
        assert!(is_fixed_point(
            &SimplexWeights::vertex(0),
            alpha(0.0),
            1e-12
        ));
    }

    #[test]
    fn fixed_square_corners_are_fixed_points() {
        // {x = y} cut by the tetrahedron is the square with corners
        // (0, 0, +-h) and (+-1/4, +-1/4, 0).
        let h = crate::basis::APEX_HEIGHT;
        let corners = [
            crate::basis::CartesianPoint::new(0.0, 0.0, h),
            crate::basis::CartesianPoint::new(0.0, 0.0, -h),
            crate::basis::CartesianPoint::new(0.25, 0.25, 0.0),
            crate::basis::CartesianPoint::new(-0.25, -0.25, 0.0),
        ];
        for p in corners {
            let bary = crate::basis::point_to_weights(&p);
            assert!(bary.inside(0.0), "corner {p:?} left the tetrahedron");
            let w = bary.to_weights().unwrap();
            for a in [0.2, FRAC_PI_4] {
                assert!(is_fixed_point(&w, alpha(a), 1e-14));
            }
        }
        // The square has side 1/2: corners are apex-to-midpoint neighbors.
        assert!((corners[0].distance(&corners[2]) - 0.5).abs() < 1e-15);
        assert!((corners[1].distance(&corners[3]) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn fixed_point_predicate_agrees_with_entrywise_comparison() {
        let mut rng = SplitMix64::new(0x0f1a);
        for _ in 0..500 {
            let w = random_weights(&mut rng);
            let a = alpha(0.05 + rng.next_f64() * (FRAC_PI_4 - 0.05));
            let rho = mixture_matrix(&w, a);
            let diff = rho.max_abs_diff(&rho.partial_transpose());
            let predicted = is_fixed_point(&w, a, 1e-9);
            // (w1-w2)cs vs (w3-w4)cs differ by 2 cs |x - y|.
            let (c, s) = a.cos_sin();
            if predicted {
                assert!(diff <= 2.0 * c * s * 1e-9 + 1e-15);
            } else {
                assert!(diff > 0.0);
            }
        }
    }

    #[test]
    fn octahedron_is_the_intersection_of_the_two_tetrahedra() {
        // At pi/4 three descriptions coincide for mixtures: max weight <= 1/2
        // (the octahedron), the reflected point staying in the tetrahedron
        // (the intersection with the inverted copy), and a non-entangled
        // label. The band makes the surface itself read as Boundary.
        let a = alpha(FRAC_PI_4);
        let mut rng = SplitMix64::new(0x0c7a);
        for _ in 0..5000 {
            let w = random_weights(&mut rng);
            let max_w = w.weights().iter().copied().fold(0.0, f64::max);
            let p = weights_to_point(&w);
            let reflected =
                crate::basis::point_to_weights(&crate::basis::CartesianPoint::new(p.y, p.x, p.z));
            let in_octahedron = max_w <= 0.5;
            assert_eq!(in_octahedron, reflected.inside(1e-12));
            let label = classify(&w, a).unwrap().label;
            assert_eq!(in_octahedron, label != Label::Entangled);
        }
    }

    #[test]
    fn reflection_realizes_partial_transpose_at_bell_alpha() {
        // At pi/4 the partial transpose acts on the chart as the reflection
        // (x, y, z) -> (y, x, z). Entangled states reflect out of the weight
        // simplex (their partial transposes are not states); wherever the
        // reflected point is still a valid mixture, the reflected state must
        // equal rho^{T_b} entrywise and carry the same label.
        let a = alpha(FRAC_PI_4);
        let mut rng = SplitMix64::new(0x5afe);
        let mut checked = 0;
        for _ in 0..2000 {
            let w = random_weights(&mut rng);
            let p = weights_to_point(&w);
            let reflected =
                crate::basis::point_to_weights(&crate::basis::CartesianPoint::new(p.y, p.x, p.z));
            let original = classify(&w, a).unwrap();
            match reflected.to_weights() {
                Ok(w_reflected) => {
                    let rho_pt = mixture_matrix(&w, a).partial_transpose();
                    let rho_reflected = mixture_matrix(&w_reflected, a);
                    assert!(rho_reflected.max_abs_diff(&rho_pt) < 1e-14);
                    let mirrored = classify(&w_reflected, a).unwrap();
                    assert_eq!(original.label, mirrored.label);
                    checked += 1;
                }
                Err(_) => assert_eq!(original.label, Label::Entangled),
            }
        }
        assert!(
            checked > 200,
            "too few valid reflections sampled: {checked}"
        );
    }
}
