//! Deterministic ASCII writers: OBJ for meshes, CSV for classified clouds.
//!
//! Numbers print through the shortest round-trip `f64` formatter, lines end
//! with LF, and the output is byte-identical across runs and platforms for
//! identical inputs.

use std::io::{self, Write};

use crate::mesh::{ClassifiedCloud, SurfaceMesh};

/// Header line of every classified-cloud CSV.
pub const CSV_HEADER: &str = "x,y,z,w1,w2,w3,w4,label,f1,f2,min_eig";

/// Normalizes negative zero so coordinates never print as `-0`.
#[inline]
fn clean(v: f64) -> f64 {
    if v == 0.0 {
        0.0
    } else {
        v
    }
}

/// Writes `v x y z` lines followed by `f i j k` lines (1-based indices).
/// An empty mesh produces empty output.
pub fn write_obj(mesh: &SurfaceMesh, sink: &mut impl Write) -> io::Result<()> {
    for v in mesh.vertices() {
        writeln!(sink, "v {} {} {}", clean(v.x), clean(v.y), clean(v.z))?;
    }
    for f in mesh.faces() {
        writeln!(sink, "f {} {} {}", f[0], f[1], f[2])?;
    }
    Ok(())
}

/// Writes the cloud as CSV with the fixed [`CSV_HEADER`], one row per point,
/// in the cloud's (deterministic) point order.
pub fn write_csv(cloud: &ClassifiedCloud, sink: &mut impl Write) -> io::Result<()> {
    writeln!(sink, "{CSV_HEADER}")?;
    for p in cloud.points() {
        writeln!(
            sink,
            "{},{},{},{},{},{},{},{},{},{},{}",
            clean(p.point.x),
            clean(p.point.y),
            clean(p.point.z),
            clean(p.weights[0]),
            clean(p.weights[1]),
            clean(p.weights[2]),
            clean(p.weights[3]),
            p.label,
            clean(p.f1),
            clean(p.f2),
            clean(p.min_eigenvalue),
        )?;
    }
    Ok(())
}
