use serde::{Deserialize, Serialize};

use super::mesh::Lattice;
use super::FoldParams;
use crate::error::Result;

/// Diameter of each cable hole, mm.
pub const HOLE_DIAMETER_MM: f64 = 2.0;
/// Centre-to-centre distance of the two cable holes in a facet, mm.
pub const HOLE_SPACING_MM: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CreaseKind {
    Mountain,
    Valley,
}

impl CreaseKind {
    fn alternate(even: bool) -> Self {
        if even {
            CreaseKind::Mountain
        } else {
            CreaseKind::Valley
        }
    }
}

/// One crease segment between two lattice vertices.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Crease {
    pub from: usize,
    pub to: usize,
    pub kind: CreaseKind,
    /// `true` for the zigzag crease lines running across the width,
    /// `false` for the straight lines running along the length.
    pub zigzag: bool,
    /// Lattice row (straight lines) or column (zigzag lines) of the crease.
    pub line: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HoleMark {
    pub center: [f64; 2],
    pub diameter: f64,
    pub facet: usize,
}

/// Flat fabrication pattern: facets, labelled creases and cable holes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CreasePattern {
    pub vertices: Vec<[f64; 2]>,
    pub facets: Vec<[usize; 4]>,
    pub creases: Vec<Crease>,
    pub holes: Vec<HoleMark>,
    /// Flat length and width, mm.
    pub extents: [f64; 2],
}

impl CreasePattern {
    pub fn count(&self, kind: CreaseKind) -> usize {
        self.creases.iter().filter(|c| c.kind == kind).count()
    }
}

/// Lays out the unfolded pattern. Interior creases alternate mountain and
/// valley between neighbouring lines of each family; the outer boundary is
/// not a crease.
pub fn crease_pattern(params: &FoldParams) -> Result<CreasePattern> {
    params.validate()?;
    let lattice = Lattice::new(params, 180.0);
    let vertices: Vec<[f64; 2]> = lattice.points().into_iter().map(|[x, y, _]| [x, y]).collect();
    let facets = lattice.faces();
    let (cols, rows) = (lattice.cols, lattice.rows);

    let mut creases = Vec::new();
    // Straight lines: constant j. Segment (i, i+1) is a mountain when i + j is even.
    for j in 1..rows - 1 {
        for i in 0..cols - 1 {
            creases.push(Crease {
                from: lattice.index(i, j),
                to: lattice.index(i + 1, j),
                kind: CreaseKind::alternate((i + j) % 2 == 0),
                zigzag: false,
                line: j,
            });
        }
    }
    // Zigzag lines: constant i. Ridges sit on odd columns.
    for i in 1..cols - 1 {
        for j in 0..rows - 1 {
            creases.push(Crease {
                from: lattice.index(i, j),
                to: lattice.index(i, j + 1),
                kind: CreaseKind::alternate(i % 2 == 1),
                zigzag: true,
                line: i,
            });
        }
    }

    let mut holes = Vec::with_capacity(2 * facets.len());
    for (k, f) in facets.iter().enumerate() {
        let corners = f.map(|v| vertices[v]);
        let cx = corners.iter().map(|c| c[0]).sum::<f64>() / 4.0;
        let cy = corners.iter().map(|c| c[1]).sum::<f64>() / 4.0;
        // Holes line up with the facet edge along the length, the cable direction.
        let (ex, ey) = (corners[1][0] - corners[0][0], corners[1][1] - corners[0][1]);
        let len = ex.hypot(ey);
        let (ux, uy) = (ex / len, ey / len);
        for s in [-0.5, 0.5] {
            holes.push(HoleMark {
                center: [cx + s * HOLE_SPACING_MM * ux, cy + s * HOLE_SPACING_MM * uy],
                diameter: HOLE_DIAMETER_MM,
                facet: k,
            });
        }
    }

    let bbox = lattice
        .points()
        .iter()
        .fold([0.0f64; 2], |acc, v| [acc[0].max(v[0]), acc[1].max(v[1])]);
    Ok(CreasePattern {
        vertices,
        facets,
        creases,
        holes,
        extents: bbox,
    })
}
