//! Golden-file checks for the deterministic writers.

use sepgeo::{cone_mesh, write_obj, Alpha, ConeSelector};

/// Frozen output for the circular cone at pi/8 with 8 radial and 2 height
/// segments, unclipped. The vertex coordinates were spot-verified against an
/// independent evaluation of the parametrization (apex at (0, 0, 1/(2 sqrt 2)),
/// rings of radius t/(2 sqrt 2) at height (1 - t)/(2 sqrt 2)).
const CONE_PI8_8X2: &[u8] = include_bytes!("data/cone_pi8_8x2.obj");

#[test]
fn cone_obj_matches_golden_bytes() {
    let mesh = cone_mesh(
        Alpha::new(std::f64::consts::FRAC_PI_8).unwrap(),
        ConeSelector::ConeA,
        8,
        2,
        false,
    )
    .unwrap();
    let mut bytes = Vec::new();
    write_obj(&mesh, &mut bytes).unwrap();
    assert_eq!(
        bytes, CONE_PI8_8X2,
        "OBJ output drifted from the frozen golden file"
    );
}

#[test]
fn golden_file_has_expected_record_counts() {
    let text = std::str::from_utf8(CONE_PI8_8X2).unwrap();
    let v = text.lines().filter(|l| l.starts_with("v ")).count();
    let f = text.lines().filter(|l| l.starts_with("f ")).count();
    assert_eq!(v, 1 + 8 * 2);
    assert_eq!(f, 8 + 2 * 8);
}
