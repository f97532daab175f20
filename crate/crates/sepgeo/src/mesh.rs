//! Triangle meshes and classified point clouds for export.

use crate::basis::{
    point_to_weights, tetrahedron_vertices, weights_to_point, Alpha, CartesianPoint,
    SimplexWeights, APEX_HEIGHT,
};
use crate::cones::{cone_point, cone_specs, ruling_clip, ConeSelector};
use crate::error::{Error, Result};
use crate::separability::{classify_with, Label};
use crate::tol::{BOUNDARY_BAND, DEGENERATE_FACE_AREA, INSIDE_TOL};

/// Vertices plus triangular faces (1-based vertex indices, OBJ convention).
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceMesh {
    vertices: Vec<CartesianPoint>,
    faces: Vec<[usize; 3]>,
}

fn triangle_area(a: &CartesianPoint, b: &CartesianPoint, c: &CartesianPoint) -> f64 {
    let u = [b.x - a.x, b.y - a.y, b.z - a.z];
    let v = [c.x - a.x, c.y - a.y, c.z - a.z];
    let cross = [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ];
    0.5 * (cross[0] * cross[0] + cross[1] * cross[1] + cross[2] * cross[2]).sqrt()
}

impl SurfaceMesh {
    /// Validates face indices and rejects degenerate (zero-area) faces.
    pub fn new(vertices: Vec<CartesianPoint>, faces: Vec<[usize; 3]>) -> Result<Self> {
        for (fi, face) in faces.iter().enumerate() {
            for &index in face {
                if index == 0 || index > vertices.len() {
                    return Err(Error::FaceIndexOutOfRange {
                        face: fi,
                        index,
                        vertex_count: vertices.len(),
                    });
                }
            }
            let area = triangle_area(
                &vertices[face[0] - 1],
                &vertices[face[1] - 1],
                &vertices[face[2] - 1],
            );
            if area <= DEGENERATE_FACE_AREA {
                return Err(Error::DegenerateFace { face: fi, area });
            }
        }
        Ok(Self { vertices, faces })
    }

    /// Builds a mesh keeping the vertex list as-is but silently dropping
    /// degenerate faces (clipping collapses some cone rulings on purpose).
    fn with_degenerate_faces_dropped(
        vertices: Vec<CartesianPoint>,
        faces: Vec<[usize; 3]>,
    ) -> Result<Self> {
        let kept = faces
            .into_iter()
            .filter(|face| {
                triangle_area(
                    &vertices[face[0] - 1],
                    &vertices[face[1] - 1],
                    &vertices[face[2] - 1],
                ) > DEGENERATE_FACE_AREA
            })
            .collect();
        Self::new(vertices, kept)
    }

    /// Empty mesh.
    pub fn empty() -> Self {
        Self {
            vertices: Vec::new(),
            faces: Vec::new(),
        }
    }

    pub fn vertices(&self) -> &[CartesianPoint] {
        &self.vertices
    }

    /// Faces as 1-based vertex index triples.
    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }
}

/// The mixture tetrahedron: 4 vertices, 4 faces, edge length 1.
pub fn tetrahedron_mesh() -> SurfaceMesh {
    let vertices = tetrahedron_vertices().to_vec();
    let faces = vec![[2, 3, 4], [1, 4, 3], [1, 2, 4], [1, 3, 2]];
    SurfaceMesh::new(vertices, faces).expect("static tetrahedron is valid")
}

/// The inverted tetrahedron: the point reflection of the mixture
/// tetrahedron through the origin, with vertices
/// `(0, +-1/2, -h)` and `(+-1/2, 0, +h)`.
pub fn inverted_tetrahedron_mesh() -> SurfaceMesh {
    let vertices = vec![
        CartesianPoint::new(0.0, 0.5, -APEX_HEIGHT),
        CartesianPoint::new(0.0, -0.5, -APEX_HEIGHT),
        CartesianPoint::new(0.5, 0.0, APEX_HEIGHT),
        CartesianPoint::new(-0.5, 0.0, APEX_HEIGHT),
    ];
    let faces = vec![[2, 3, 4], [1, 4, 3], [1, 2, 4], [1, 3, 2]];
    SurfaceMesh::new(vertices, faces).expect("static tetrahedron is valid")
}

/// The stella octangula: the union of the mixture tetrahedron and its
/// point reflection. 8 vertices, 8 faces.
pub fn stella_octangula_mesh() -> SurfaceMesh {
    let outer = tetrahedron_mesh();
    let inner = inverted_tetrahedron_mesh();
    let mut vertices = outer.vertices.clone();
    vertices.extend_from_slice(&inner.vertices);
    let mut faces = outer.faces.clone();
    faces.extend(inner.faces.iter().map(|f| f.map(|i| i + 4)));
    SurfaceMesh::new(vertices, faces).expect("static stella is valid")
}

/// The intersection of the two stella tetrahedra: the regular octahedron
/// with vertices `(+-1/4, +-1/4, 0)` and `(0, 0, +-h)`. 6 vertices, 8 faces.
pub fn octahedron_mesh() -> SurfaceMesh {
    let vertices = vec![
        CartesianPoint::new(0.25, 0.25, 0.0),
        CartesianPoint::new(-0.25, 0.25, 0.0),
        CartesianPoint::new(-0.25, -0.25, 0.0),
        CartesianPoint::new(0.25, -0.25, 0.0),
        CartesianPoint::new(0.0, 0.0, APEX_HEIGHT),
        CartesianPoint::new(0.0, 0.0, -APEX_HEIGHT),
    ];
    let faces = vec![
        [5, 1, 2],
        [5, 2, 3],
        [5, 3, 4],
        [5, 4, 1],
        [6, 2, 1],
        [6, 3, 2],
        [6, 4, 3],
        [6, 1, 4],
    ];
    SurfaceMesh::new(vertices, faces).expect("static octahedron is valid")
}

/// Parametric triangulation of one boundary cone.
///
/// Vertices are the apex plus `height_segments` rings of `radial_segments`
/// points each (`1 + radial * heights` in total). With
/// `clip_to_tetrahedron` set, each ruling is rescaled to end on the
/// tetrahedron boundary, so every emitted vertex stays both on the cone and
/// inside the tetrahedron; faces collapsed by the clipping are dropped.
///
/// At a degenerate `alpha` (`0` or `pi/4`) the cone is a plane pair and the
/// mesh falls back to the four sides of the limiting tetrahedron: the
/// mixture tetrahedron itself at `alpha = 0`, the inverted one at `pi/4`.
pub fn cone_mesh(
    alpha: Alpha,
    which: ConeSelector,
    radial_segments: usize,
    height_segments: usize,
    clip_to_tetrahedron: bool,
) -> Result<SurfaceMesh> {
    assert!(radial_segments >= 3, "need at least 3 radial segments");
    assert!(height_segments >= 1, "need at least 1 height segment");

    let (cone_a, cone_b) = cone_specs(alpha);
    let spec = match which {
        ConeSelector::ConeA => cone_a,
        ConeSelector::ConeB => cone_b,
    };
    if spec.is_degenerate() {
        let k = alpha.k();
        return Ok(if k < 0.125 {
            tetrahedron_mesh()
        } else {
            inverted_tetrahedron_mesh()
        });
    }

    let mut vertices = Vec::with_capacity(1 + radial_segments * height_segments);
    vertices.push(spec.apex);
    for ring in 1..=height_segments {
        let t = ring as f64 / height_segments as f64;
        for step in 0..radial_segments {
            let u = 2.0 * std::f64::consts::PI * step as f64 / radial_segments as f64;
            let t_eff = if clip_to_tetrahedron {
                t * ruling_clip(&spec, u)?
            } else {
                t
            };
            vertices.push(cone_point(&spec, u, t_eff)?);
        }
    }

    let mut faces = Vec::new();
    let ring_start = |ring: usize| 2 + (ring - 1) * radial_segments;
    for step in 0..radial_segments {
        let next = (step + 1) % radial_segments;
        faces.push([1, ring_start(1) + step, ring_start(1) + next]);
    }
    for ring in 1..height_segments {
        let (inner, outer) = (ring_start(ring), ring_start(ring + 1));
        for step in 0..radial_segments {
            let next = (step + 1) % radial_segments;
            faces.push([inner + step, outer + step, outer + next]);
            faces.push([inner + step, outer + next, inner + next]);
        }
    }

    if clip_to_tetrahedron {
        SurfaceMesh::with_degenerate_faces_dropped(vertices, faces)
    } else {
        SurfaceMesh::new(vertices, faces)
    }
}

/// One classified point of a cloud.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifiedPoint {
    pub point: CartesianPoint,
    pub weights: [f64; 4],
    pub label: Label,
    pub f1: f64,
    pub f2: f64,
    pub min_eigenvalue: f64,
}

/// Classified points in a deterministic order, with the band they were
/// classified at.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassifiedCloud {
    points: Vec<ClassifiedPoint>,
    eps: f64,
}

impl ClassifiedCloud {
    pub fn points(&self) -> &[ClassifiedPoint] {
        &self.points
    }

    /// The boundary band the labels were computed with.
    pub fn eps(&self) -> f64 {
        self.eps
    }

    /// Fraction of points carrying a given label.
    pub fn label_fraction(&self, label: Label) -> f64 {
        let hits = self.points.iter().filter(|p| p.label == label).count();
        hits as f64 / self.points.len().max(1) as f64
    }
}

/// Classifies the barycentric lattice `{(i, j, k, l) / resolution}` over the
/// simplex, in lexicographic index order. The lattice has
/// `C(resolution + 3, 3)` points.
pub fn classification_grid(alpha: Alpha, resolution: usize) -> Result<ClassifiedCloud> {
    classification_grid_with(alpha, resolution, BOUNDARY_BAND)
}

/// [`classification_grid`] with an explicit boundary band.
pub fn classification_grid_with(
    alpha: Alpha,
    resolution: usize,
    eps: f64,
) -> Result<ClassifiedCloud> {
    assert!(resolution >= 2, "need a grid resolution of at least 2");
    let r = resolution;
    let mut lattice = Vec::new();
    for i in 0..=r {
        for j in 0..=(r - i) {
            for k in 0..=(r - i - j) {
                let l = r - i - j - k;
                lattice.push(SimplexWeights::new([
                    i as f64 / r as f64,
                    j as f64 / r as f64,
                    k as f64 / r as f64,
                    l as f64 / r as f64,
                ])?);
            }
        }
    }
    classify_points(&lattice, alpha, eps)
}

/// Classifies a caller-supplied list of mixtures into a cloud, preserving
/// order. Label consistency with [`classify_with`] holds by construction.
pub fn classify_points(
    weights_list: &[SimplexWeights],
    alpha: Alpha,
    eps: f64,
) -> Result<ClassifiedCloud> {
    let mut points = Vec::with_capacity(weights_list.len());
    for weights in weights_list {
        let c = classify_with(weights, alpha, eps)?;
        points.push(ClassifiedPoint {
            point: weights_to_point(weights),
            weights: *weights.weights(),
            label: c.label,
            f1: c.factors.f1,
            f2: c.factors.f2,
            min_eigenvalue: c.witness,
        });
    }
    Ok(ClassifiedCloud { points, eps })
}

/// Checks the four tetrahedron half-space constraints at a point.
pub fn inside_tetrahedron(p: &CartesianPoint) -> bool {
    point_to_weights(p).inside(INSIDE_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::separability::det_pt;

    const FRAC_PI_4: f64 = std::f64::consts::FRAC_PI_4;
    const FRAC_PI_8: f64 = std::f64::consts::FRAC_PI_8;

    fn alpha(v: f64) -> Alpha {
        Alpha::new(v).unwrap()
    }

    #[test]
    fn tetrahedron_mesh_shape() {
        let mesh = tetrahedron_mesh();
        assert_eq!(mesh.vertices().len(), 4);
        assert_eq!(mesh.faces().len(), 4);
        let centroid = mesh.vertices().iter().fold([0.0; 3], |acc, v| {
            [acc[0] + v.x, acc[1] + v.y, acc[2] + v.z]
        });
        for c in centroid {
            assert!(c.abs() < 1e-16);
        }
        for i in 0..4 {
            for j in (i + 1)..4 {
                let d = mesh.vertices()[i].distance(&mesh.vertices()[j]);
                assert!((d - 1.0).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn stella_mesh_shape_and_neighbor_distances() {
        let mesh = stella_octangula_mesh();
        assert_eq!(mesh.vertices().len(), 8);
        assert_eq!(mesh.faces().len(), 8);
        // Within each tetrahedron all pairwise distances are 1.
        for group in [0..4, 4..8] {
            let vs = &mesh.vertices()[group];
            for i in 0..4 {
                for j in (i + 1)..4 {
                    assert!((vs[i].distance(&vs[j]) - 1.0).abs() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn octahedron_mesh_shape() {
        let mesh = octahedron_mesh();
        assert_eq!(mesh.vertices().len(), 6);
        assert_eq!(mesh.faces().len(), 8);
        // All vertices inside the tetrahedron and separable or boundary at pi/4.
        for v in mesh.vertices() {
            assert!(inside_tetrahedron(v));
            let w = point_to_weights(v).to_weights().unwrap();
            let c = classify_with(&w, alpha(FRAC_PI_4), 1e-9).unwrap();
            assert_ne!(c.label, Label::Entangled);
        }
    }

    #[test]
    fn octahedron_volume_is_half_the_tetrahedron() {
        // Signed volume from the face fans of each closed mesh.
        fn volume(mesh: &SurfaceMesh) -> f64 {
            let v = mesh.vertices();
            mesh.faces()
                .iter()
                .map(|f| {
                    let (a, b, c) = (&v[f[0] - 1], &v[f[1] - 1], &v[f[2] - 1]);
                    (a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x)
                        + a.z * (b.x * c.y - b.y * c.x))
                        / 6.0
                })
                .sum::<f64>()
                .abs()
        }
        let t = volume(&tetrahedron_mesh());
        let o = volume(&octahedron_mesh());
        assert!((o / t - 0.5).abs() < 1e-12, "ratio {}", o / t);
        // Absolute check: edge-1 tetrahedron has volume 1/(6 sqrt 2).
        assert!((t - 1.0 / (6.0 * std::f64::consts::SQRT_2)).abs() < 1e-15);
    }

    #[test]
    fn octahedron_face_planes_separate_entangled_points() {
        // Half the octahedron faces lie on the inverted-tetrahedron planes
        // interior to the mixture tetrahedron; points nudged 1e-3 outside
        // those classify Entangled. The other half lie on the tetrahedron
        // boundary itself, where the outward nudge leaves the simplex (the
        // partial transposes of entangled states are unphysical).
        let a = alpha(FRAC_PI_4);
        let mesh = octahedron_mesh();
        let mut entangled_side = 0;
        let mut unphysical_side = 0;
        for f in mesh.faces() {
            let (p0, p1, p2) = (
                mesh.vertices()[f[0] - 1],
                mesh.vertices()[f[1] - 1],
                mesh.vertices()[f[2] - 1],
            );
            let centroid = CartesianPoint::new(
                (p0.x + p1.x + p2.x) / 3.0,
                (p0.y + p1.y + p2.y) / 3.0,
                (p0.z + p1.z + p2.z) / 3.0,
            );
            let norm = centroid.distance(&CartesianPoint::new(0.0, 0.0, 0.0));
            let outside = CartesianPoint::new(
                centroid.x * (1.0 + 1e-3 / norm),
                centroid.y * (1.0 + 1e-3 / norm),
                centroid.z * (1.0 + 1e-3 / norm),
            );
            match point_to_weights(&outside).to_weights() {
                Ok(w) => {
                    let c = classify_with(&w, a, 1e-9).unwrap();
                    assert_eq!(c.label, Label::Entangled);
                    entangled_side += 1;
                }
                Err(_) => unphysical_side += 1,
            }
        }
        assert_eq!((entangled_side, unphysical_side), (4, 4));
    }

    #[test]
    fn unclipped_cone_mesh_counts() {
        let mesh = cone_mesh(alpha(FRAC_PI_8), ConeSelector::ConeA, 64, 8, false).unwrap();
        assert_eq!(mesh.vertices().len(), 1 + 64 * 8);
        assert_eq!(mesh.faces().len(), 64 + 2 * 64 * 7);
    }

    #[test]
    fn degenerate_cone_mesh_falls_back_to_plane_triangles() {
        let at_zero = cone_mesh(alpha(0.0), ConeSelector::ConeA, 16, 4, true).unwrap();
        assert_eq!(at_zero, tetrahedron_mesh());
        let at_bell = cone_mesh(alpha(FRAC_PI_4), ConeSelector::ConeB, 16, 4, true).unwrap();
        assert_eq!(at_bell, inverted_tetrahedron_mesh());
    }

    #[test]
    fn clipped_cone_vertices_satisfy_all_half_spaces_and_det_zero() {
        for a in [0.2, FRAC_PI_8, 0.6] {
            for which in [ConeSelector::ConeA, ConeSelector::ConeB] {
                let mesh = cone_mesh(alpha(a), which, 32, 4, true).unwrap();
                for v in mesh.vertices() {
                    let bary = point_to_weights(v);
                    assert!(bary.inside(INSIDE_TOL));
                    let w = bary.to_weights().unwrap();
                    assert!(det_pt(&w, alpha(a)).abs() < 1e-8);
                }
            }
        }
    }

    #[test]
    fn face_index_validation() {
        let vertices = vec![
            CartesianPoint::new(0.0, 0.0, 0.0),
            CartesianPoint::new(1.0, 0.0, 0.0),
            CartesianPoint::new(0.0, 1.0, 0.0),
        ];
        assert!(SurfaceMesh::new(vertices.clone(), vec![[1, 2, 3]]).is_ok());
        assert!(matches!(
            SurfaceMesh::new(vertices.clone(), vec![[1, 2, 4]]),
            Err(Error::FaceIndexOutOfRange { .. })
        ));
        assert!(matches!(
            SurfaceMesh::new(vertices, vec![[1, 2, 2]]),
            Err(Error::DegenerateFace { .. })
        ));
    }

    #[test]
    fn grid_point_count_is_stars_and_bars() {
        let cloud = classification_grid(alpha(0.3), 7).unwrap();
        // C(7 + 3, 3) = 120.
        assert_eq!(cloud.points().len(), 120);
    }

    #[test]
    fn grid_at_alpha_zero_is_fully_separable_or_boundary() {
        let cloud = classification_grid(alpha(0.0), 8).unwrap();
        assert_eq!(cloud.label_fraction(Label::Entangled), 0.0);
    }

    #[test]
    fn boundary_labels_have_vanishing_factor_product() {
        let cloud = classification_grid(alpha(FRAC_PI_4), 10).unwrap();
        for p in cloud.points() {
            if p.label == Label::Boundary {
                assert!((p.f1 * p.f2).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn bell_grid_labels_match_the_max_weight_oracle() {
        // Independent oracle at pi/4: separable iff max weight <= 1/2, with
        // equality on the octahedron faces (labelled Boundary by the band).
        let cloud = classification_grid(alpha(FRAC_PI_4), 20).unwrap();
        for p in cloud.points() {
            let max_w = p.weights.iter().copied().fold(0.0, f64::max);
            let expected = if (max_w - 0.5).abs() < 1e-12 {
                Label::Boundary
            } else if max_w < 0.5 {
                Label::Separable
            } else {
                Label::Entangled
            };
            assert_eq!(p.label, expected, "at weights {:?}", p.weights);
        }
        // The separable closure fills half the simplex; face-lattice points
        // carry the Boundary label but are separable states.
        let closure =
            cloud.label_fraction(Label::Separable) + cloud.label_fraction(Label::Boundary);
        assert!((closure - 0.5).abs() < 0.01, "closure fraction {closure}");
    }
}
