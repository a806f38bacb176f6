use std::fmt::Write;

use crate::fold::Mesh;

/// Wavefront OBJ with `v` and `f` records only, 1-based indices.
pub fn write_mesh_obj(mesh: &Mesh) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# orifold folded mesh");
    let _ = writeln!(out, "# units: mm");
    let _ = writeln!(out, "# {} vertices, {} faces", mesh.vertices.len(), mesh.faces.len());
    for [x, y, z] in &mesh.vertices {
        let _ = writeln!(out, "v {x:.6} {y:.6} {z:.6}");
    }
    for [a, b, c, d] in &mesh.faces {
        let _ = writeln!(out, "f {} {} {} {}", a + 1, b + 1, c + 1, d + 1);
    }
    out
}
