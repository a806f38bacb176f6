use serde::{Deserialize, Serialize};

use super::{check_theta, phi_unchecked, FoldParams};
use crate::angle::{cos_deg, sin_deg};
use crate::error::Result;

/// Quad mesh with shared vertices. Coordinates in mm, faces wound
/// counter-clockwise seen from +z.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Mesh {
    pub vertices: Vec<[f64; 3]>,
    pub faces: Vec<[usize; 4]>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundingBox {
    pub min: [f64; 3],
    pub max: [f64; 3],
}

impl BoundingBox {
    /// Extents along x (length), y (width) and z (height).
    pub fn extents(&self) -> [f64; 3] {
        [0, 1, 2].map(|k| self.max[k] - self.min[k])
    }
}

impl Mesh {
    pub fn bounding_box(&self) -> BoundingBox {
        let mut min = [f64::INFINITY; 3];
        let mut max = [f64::NEG_INFINITY; 3];
        for v in &self.vertices {
            for k in 0..3 {
                min[k] = min[k].min(v[k]);
                max[k] = max[k].max(v[k]);
            }
        }
        BoundingBox { min, max }
    }
}

/// Vertex lattice shared by the folded mesh and the flat crease pattern.
///
/// Vertex `(i, j)` with `i in 0..=2n` along the length and `j in 0..=2m`
/// along the width sits at
///
/// ```text
/// x = i * p sin(theta/2) + (j mod 2) * p cos(phi/2)
/// y = j * p sin(phi/2)
/// z = (i mod 2) * p cos(theta/2)
/// ```
///
/// Edges along `i` rise and fall by the ridge height, edges along `j` zigzag
/// in-plane, so every face is a parallelogram with both sides equal to `p`.
pub(crate) struct Lattice {
    pub cols: usize,
    pub rows: usize,
    pub step_x: f64,
    pub zig_x: f64,
    pub step_y: f64,
    pub rise: f64,
}

impl Lattice {
    pub fn new(params: &FoldParams, theta: f64) -> Self {
        let phi = phi_unchecked(params.beta, theta);
        let p = params.p;
        Self {
            cols: 2 * params.n as usize + 1,
            rows: 2 * params.m as usize + 1,
            step_x: p * sin_deg(theta / 2.0),
            zig_x: p * cos_deg(phi / 2.0),
            step_y: p * sin_deg(phi / 2.0),
            rise: p * cos_deg(theta / 2.0),
        }
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        j * self.cols + i
    }

    pub fn point(&self, i: usize, j: usize) -> [f64; 3] {
        [
            i as f64 * self.step_x + (j % 2) as f64 * self.zig_x,
            j as f64 * self.step_y,
            (i % 2) as f64 * self.rise,
        ]
    }

    pub fn points(&self) -> Vec<[f64; 3]> {
        (0..self.rows)
            .flat_map(|j| (0..self.cols).map(move |i| (i, j)))
            .map(|(i, j)| self.point(i, j))
            .collect()
    }

    pub fn faces(&self) -> Vec<[usize; 4]> {
        let mut faces = Vec::with_capacity((self.cols - 1) * (self.rows - 1));
        for j in 0..self.rows - 1 {
            for i in 0..self.cols - 1 {
                faces.push([
                    self.index(i, j),
                    self.index(i + 1, j),
                    self.index(i + 1, j + 1),
                    self.index(i, j + 1),
                ]);
            }
        }
        faces
    }
}

/// Builds the folded structure at `theta`. Its bounding box reproduces
/// [`dimensions`](super::dimensions) as `(l, w, h)`.
pub fn folded_mesh(params: &FoldParams, theta: f64) -> Result<Mesh> {
    params.validate()?;
    check_theta(theta)?;
    let lattice = Lattice::new(params, theta);
    Ok(Mesh {
        vertices: lattice.points(),
        faces: lattice.faces(),
    })
}
