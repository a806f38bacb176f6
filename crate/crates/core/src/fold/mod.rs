//! Miura-Ori fold kinematics.
//!
//! The structure has a single degree of freedom, the fold angle `theta`
//! (180° flat, decreasing as it folds). Everything else follows in closed form:
//!
//! ```text
//! phi = 2 acos(cos(beta) sin(theta/2))
//! h   = p cos(theta/2)
//! l   = n (2p sin(theta/2)) + p cos(phi/2)
//! w   = m (2p sin(phi/2))
//! ```

mod crease;
mod mesh;

pub use crease::{Crease, CreaseKind, CreasePattern, HoleMark, HOLE_DIAMETER_MM, HOLE_SPACING_MM};
pub use mesh::{BoundingBox, Mesh};

use serde::{Deserialize, Serialize};

use crate::angle::{acos_deg, cos_deg, sin_deg};
use crate::error::{check, Error, Result};

/// Geometry of a Miura-Ori module of `n x m` units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FoldParams {
    /// Facet side length in mm.
    pub p: f64,
    /// Sector angle between the facet sides, degrees.
    pub beta: f64,
    /// Units along the length.
    pub n: u32,
    /// Units along the width.
    pub m: u32,
    /// Fold angle with no cable tension, degrees.
    pub theta_neutral: f64,
}

impl Default for FoldParams {
    /// The 3 x 4 prototype: 22 mm facets, 70° sector angle, 130° at rest.
    fn default() -> Self {
        Self {
            p: 22.0,
            beta: 70.0,
            n: 4,
            m: 3,
            theta_neutral: 130.0,
        }
    }
}

impl FoldParams {
    pub fn validate(&self) -> Result<()> {
        check(self.p > 0.0, "p", self.p, "(0, inf)")?;
        check_beta(self.beta)?;
        check(self.n >= 1, "n", self.n as f64, "[1, inf)")?;
        check(self.m >= 1, "m", self.m as f64, "[1, inf)")?;
        check(
            self.theta_neutral > 0.0 && self.theta_neutral <= 180.0,
            "theta_neutral",
            self.theta_neutral,
            "(0, 180]",
        )
    }

    /// Number of parallelogram facets (four per unit).
    pub fn facet_count(&self) -> usize {
        4 * self.n as usize * self.m as usize
    }
}

/// Folded extents of the structure.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Dimensions {
    pub h: f64,
    pub l: f64,
    pub w: f64,
    pub phi: f64,
}

pub(crate) fn check_beta(beta: f64) -> Result<()> {
    check(beta > 0.0 && beta < 90.0, "beta", beta, "(0, 90)")
}

pub(crate) fn check_theta(theta: f64) -> Result<()> {
    check(theta > 0.0 && theta <= 180.0, "theta", theta, "(0, 180]")
}

/// In-plane angle `phi` for sector angle `beta` at fold angle `theta`.
pub fn phi_from_theta(params: &FoldParams, theta: f64) -> Result<f64> {
    check_beta(params.beta)?;
    check_theta(theta)?;
    Ok(phi_unchecked(params.beta, theta))
}

fn phi_unchecked(beta: f64, theta: f64) -> f64 {
    if theta == 180.0 {
        return 2.0 * beta;
    }
    2.0 * acos_deg(cos_deg(beta) * sin_deg(theta / 2.0))
}

pub fn dimensions(params: &FoldParams, theta: f64) -> Result<Dimensions> {
    params.validate()?;
    check_theta(theta)?;
    let phi = phi_unchecked(params.beta, theta);
    let p = params.p;
    Ok(Dimensions {
        h: p * cos_deg(theta / 2.0),
        l: params.n as f64 * (2.0 * p * sin_deg(theta / 2.0)) + p * cos_deg(phi / 2.0),
        w: params.m as f64 * (2.0 * p * sin_deg(phi / 2.0)),
        phi,
    })
}

/// Inverse of the height relation: the fold angle at which the structure is `h` mm tall.
pub fn theta_from_height(params: &FoldParams, h: f64) -> Result<f64> {
    check(params.p > 0.0, "p", params.p, "(0, inf)")?;
    if !(h >= 0.0 && h < params.p) {
        return Err(Error::HeightUnreachable { h, p: params.p });
    }
    Ok(2.0 * acos_deg(h / params.p))
}

/// One row of a [`DimensionTable`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DimensionRow {
    pub beta: f64,
    pub theta: f64,
    pub h: f64,
    pub l: f64,
    pub w: f64,
}

/// Sweep output, beta-major with theta ascending.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct DimensionTable {
    pub rows: Vec<DimensionRow>,
}

impl DimensionTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn for_beta(&self, beta: f64) -> impl Iterator<Item = &DimensionRow> {
        self.rows.iter().filter(move |r| r.beta == beta)
    }

    /// `max w - min w` over the rows for one sector angle.
    pub fn width_range(&self, beta: f64) -> Option<f64> {
        let (lo, hi) = self
            .for_beta(beta)
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
                (lo.min(r.w), hi.max(r.w))
            });
        (lo <= hi).then_some(hi - lo)
    }
}

/// Inclusive grid `theta_min, theta_min + step, ...` up to `theta_max`.
pub fn theta_grid(theta_min: f64, theta_max: f64, step: f64) -> Result<Vec<f64>> {
    check(theta_min > 0.0, "theta_min", theta_min, "(0, theta_max)")?;
    check(
        theta_max > theta_min && theta_max <= 180.0,
        "theta_max",
        theta_max,
        "(theta_min, 180]",
    )?;
    check(step > 0.0, "step", step, "(0, inf)")?;
    // Absorb rounding so that e.g. 90..180 step 1 ends exactly on 180.
    let count = ((theta_max - theta_min) / step + 1e-9).floor() as usize + 1;
    Ok((0..count)
        .map(|k| (theta_min + k as f64 * step).min(theta_max))
        .collect())
}

/// Evaluates the dimensions over a theta grid for each sector angle in `betas`.
pub fn sweep(params: &FoldParams, theta_min: f64, theta_max: f64, step: f64, betas: &[f64]) -> Result<DimensionTable> {
    if betas.is_empty() {
        return Err(Error::Empty("betas"));
    }
    let thetas = theta_grid(theta_min, theta_max, step)?;
    let mut rows = Vec::with_capacity(thetas.len() * betas.len());
    for &beta in betas {
        check_beta(beta)?;
        let params = FoldParams { beta, ..*params };
        for &theta in &thetas {
            let d = dimensions(&params, theta)?;
            rows.push(DimensionRow {
                beta,
                theta,
                h: d.h,
                l: d.l,
                w: d.w,
            });
        }
    }
    Ok(DimensionTable { rows })
}

pub use crease::crease_pattern;
pub use mesh::folded_mesh;
