//! Geometry of two-qubit separability inside a family of basis tetrahedra.
//!
//! A one-parameter family of orthonormal two-qubit bases interpolates from
//! product states to the Bell basis. The mixtures of each basis fill a
//! regular tetrahedron in Hilbert-Schmidt space, and the positive partial
//! transpose criterion — necessary and sufficient for two qubits — carves
//! out the separable region. Its boundary is a pair of elliptic cones whose
//! closed forms this crate evaluates, cross-checked against an eigenvalue
//! oracle on every classification. At the Bell endpoint the cones flatten
//! into the sides of the inverted tetrahedron and the separable region
//! becomes the octahedron core of a stella octangula.
//!
//! The crate provides:
//!
//! * a small Hermitian 4x4 kernel (tensor products, partial transpose and
//!   trace, Hilbert-Schmidt distance, Jacobi eigenvalues, entropy);
//! * the basis family, its mixture tetrahedron, and the cartesian chart;
//! * dual-oracle separability classification with boundary detection;
//! * cone surfaces, fixed-point predicate, and Monte Carlo volume estimates;
//! * OBJ / CSV export of tetrahedra, cones, octahedron, and classified grids.

pub mod basis;
pub mod cones;
pub mod density;
pub mod eigen;
pub mod error;
pub mod io;
pub mod matrix;
pub mod mesh;
pub mod sample;
pub mod separability;
pub mod tol;

pub use basis::{
    basis_entanglement, basis_states, correlation_tensor, mixture, mixture_matrix,
    point_to_weights, tetrahedron_vertices, vertex_projector, weights_to_point, Alpha,
    BarycentricCoords, CartesianPoint, CorrelationTensor, SimplexWeights, APEX_HEIGHT,
};
pub use cones::{
    cone_point, cone_specs, degenerate_planes, edge_midpoint_angle, ruling_clip, ConeSelector,
    ConeSpec, PlaneDescriptor,
};
pub use density::{DensityMatrix, StateTolerances};
pub use eigen::{
    eigenvalues_hermitian, eigenvalues_hermitian2, pt_superoperator_matrix,
    pt_superoperator_spectrum, von_neumann_entropy, Spectrum4,
};
pub use error::{Error, Result};
pub use io::{write_csv, write_obj, CSV_HEADER};
pub use matrix::{
    hs_distance, pauli, tensor_product, ComplexMatrix2, ComplexMatrix4, StateVector4,
};
pub use mesh::{
    classification_grid, classification_grid_with, classify_points, cone_mesh,
    inverted_tetrahedron_mesh, octahedron_mesh, stella_octangula_mesh, tetrahedron_mesh,
    ClassifiedCloud, ClassifiedPoint, SurfaceMesh,
};
pub use sample::{
    random_hermitian, random_weights, separable_volume_fraction, simplex_sample, SplitMix64,
    VolumeEstimate,
};
pub use separability::{
    boundary_factors, classify, classify_with, det_pt, is_fixed_point, BoundaryFactors,
    Classification, Label,
};
