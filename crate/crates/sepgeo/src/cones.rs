//! The two boundary cones in chart coordinates.
//!
//! Substituting the inverse chart into the factor `f1` gives, with
//! `k = cos^2(alpha) sin^2(alpha)` and `h = 1/(2 sqrt 2)`,
//!
//! ```text
//! f1 = 0   <=>   (z - h)^2 = 2(1 - 4k) x^2 + 8k y^2        (cone A, apex +h)
//! f2 = 0   <=>   (z + h)^2 = 8k x^2 + 2(1 - 4k) y^2        (cone B, apex -h)
//! ```
//!
//! Both quadrics are elliptic cones with axes along z. Their base ellipses in
//! the plane `z = 0` always pass through the four edge midpoints
//! `(+-1/4, +-1/4, 0)`, the coefficients coincide at `alpha = pi/8` (circular
//! cones, major axes cross over there), and at `k = 0` or `k = 1/4` a
//! coefficient vanishes and the quadric degenerates into a pair of planes:
//! the sides of the mixture tetrahedron at `alpha = 0`, the sides of the
//! inverted tetrahedron at `alpha = pi/4`.
//!
//! The forms above are derived from the factors rather than transcribed, so
//! they are consistent with the determinant oracle by construction.

use crate::basis::{point_to_weights, Alpha, CartesianPoint, APEX_HEIGHT};
use crate::error::{Error, Result};

/// Which of the two cones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeSelector {
    /// Zero set of `f1`; apex at `(0, 0, +1/(2 sqrt 2))`.
    ConeA,
    /// Zero set of `f2`; apex at `(0, 0, -1/(2 sqrt 2))`.
    ConeB,
}

/// Quadric data for one cone: `(z - apex_z)^2 = coef_x2 x^2 + coef_y2 y^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConeSpec {
    pub which: ConeSelector,
    pub apex: CartesianPoint,
    pub coef_x2: f64,
    pub coef_y2: f64,
}

impl ConeSpec {
    /// A coefficient at (numerical) zero means the ellipse blew up into a
    /// plane pair; `cone_point` refuses to parametrize it.
    pub fn is_degenerate(&self) -> bool {
        self.coef_x2 <= f64::EPSILON || self.coef_y2 <= f64::EPSILON
    }

    /// Semi-axes of the base ellipse in the plane `z = 0`.
    pub fn base_semi_axes(&self) -> (f64, f64) {
        (
            APEX_HEIGHT / self.coef_x2.sqrt(),
            APEX_HEIGHT / self.coef_y2.sqrt(),
        )
    }

    /// Residual of the quadric equation at a point; zero on the surface.
    pub fn residual(&self, p: &CartesianPoint) -> f64 {
        let dz = p.z - self.apex.z;
        dz * dz - self.coef_x2 * p.x * p.x - self.coef_y2 * p.y * p.y
    }
}

/// The cone pair at the given parameter. The quadric data is returned for
/// every `alpha`; degenerate endpoints are flagged on the specs and described
/// by [`degenerate_planes`].
pub fn cone_specs(alpha: Alpha) -> (ConeSpec, ConeSpec) {
    let k = alpha.k();
    let narrow = 2.0 * (1.0 - 4.0 * k);
    let wide = 8.0 * k;
    (
        ConeSpec {
            which: ConeSelector::ConeA,
            apex: CartesianPoint::new(0.0, 0.0, APEX_HEIGHT),
            coef_x2: narrow,
            coef_y2: wide,
        },
        ConeSpec {
            which: ConeSelector::ConeB,
            apex: CartesianPoint::new(0.0, 0.0, -APEX_HEIGHT),
            coef_x2: wide,
            coef_y2: narrow,
        },
    )
}

/// A plane `n . p = offset` from a degenerate cone limit, tagged with the
/// tetrahedron face it coincides with.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneDescriptor {
    pub normal: [f64; 3],
    pub offset: f64,
    /// Which cone's factor this plane came from.
    pub from: ConeSelector,
}

impl PlaneDescriptor {
    /// Signed residual `n . p - offset`.
    pub fn residual(&self, p: &CartesianPoint) -> f64 {
        self.normal[0] * p.x + self.normal[1] * p.y + self.normal[2] * p.z - self.offset
    }
}

/// The four limiting planes at a degenerate parameter, or `None` when the
/// cones are genuine.
///
/// At `alpha = 0` the planes are the four sides of the mixture tetrahedron
/// (`z - h = +-sqrt2 x` from cone A, `z + h = +-sqrt2 y` from cone B, i.e.
/// the faces `w1 = 0`, `w2 = 0`, `w4 = 0`, `w3 = 0`). At `alpha = pi/4` the
/// roles of x and y swap and the planes are the sides of the inverted
/// tetrahedron.
pub fn degenerate_planes(alpha: Alpha) -> Option<[PlaneDescriptor; 4]> {
    let k = alpha.k();
    let s2 = std::f64::consts::SQRT_2;
    let (a_axis, b_axis) = if k <= f64::EPSILON {
        // Major axes along y for cone A, along x for cone B.
        ([1.0, 0.0], [0.0, 1.0])
    } else if (0.25 - k).abs() <= f64::EPSILON {
        ([0.0, 1.0], [1.0, 0.0])
    } else {
        return None;
    };
    let plane = |axis: [f64; 2], sign: f64, apex_z: f64, from| PlaneDescriptor {
        // (z - apex_z) = sign * sqrt2 * (axis . (x, y))
        normal: [-sign * s2 * axis[0], -sign * s2 * axis[1], 1.0],
        offset: apex_z,
        from,
    };
    Some([
        plane(a_axis, 1.0, APEX_HEIGHT, ConeSelector::ConeA),
        plane(a_axis, -1.0, APEX_HEIGHT, ConeSelector::ConeA),
        plane(b_axis, 1.0, -APEX_HEIGHT, ConeSelector::ConeB),
        plane(b_axis, -1.0, -APEX_HEIGHT, ConeSelector::ConeB),
    ])
}

/// Point on the cone surface: the ruling from the apex through the base
/// ellipse point at angle `u`, at fraction `t` of the way down (`t = 0` is
/// the apex, `t = 1` the base plane `z = 0`).
pub fn cone_point(spec: &ConeSpec, u: f64, t: f64) -> Result<CartesianPoint> {
    if spec.is_degenerate() {
        return Err(Error::DegenerateCone);
    }
    let (rx, ry) = spec.base_semi_axes();
    Ok(CartesianPoint::new(
        t * rx * u.cos(),
        t * ry * u.sin(),
        (1.0 - t) * spec.apex.z,
    ))
}

/// The ruling parameter `u` whose base point is the edge midpoint
/// `(sx/4, sy/4, 0)`; every cone passes through all four midpoints.
pub fn edge_midpoint_angle(spec: &ConeSpec, sx: f64, sy: f64) -> f64 {
    let (rx, ry) = spec.base_semi_axes();
    (sy * 0.25 / ry).atan2(sx * 0.25 / rx)
}

/// Largest `t` in `[0, 1]` for which the ruling point stays inside the
/// mixture tetrahedron (all barycentric weights nonnegative).
///
/// Clipping happens along the ruling, so clipped points stay on the cone.
pub fn ruling_clip(spec: &ConeSpec, u: f64) -> Result<f64> {
    let apex_w = *point_to_weights(&spec.apex).raw();
    let base = cone_point(spec, u, 1.0)?;
    let base_w = *point_to_weights(&base).raw();
    let mut t_max = 1.0_f64;
    for i in 0..4 {
        let slope = base_w[i] - apex_w[i];
        if slope < 0.0 {
            t_max = t_max.min(apex_w[i] / -slope);
        }
    }
    Ok(t_max.max(0.0))
}
