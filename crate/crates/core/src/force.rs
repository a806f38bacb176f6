//! Ladder-style static equilibrium of one half of the folded structure.
//!
//! A facet is treated as a rigid beam of length `p` leaning at `theta/2` from
//! the vertical: friction and a normal reaction at the base, a frictionless
//! roller against the wall at the top, the beam's own weight at its centre,
//! the lateral cable force `F_l` at its centre and the tactile load `N` on
//! top. With `h = p cos(theta/2)` and `q = p sin(theta/2)`:
//!
//! ```text
//! sum Fx = F_a + F_l - R_b            = 0,   F_a = mu R_a
//! sum Fy = R_a - m g - N              = 0
//! sum M  = F_l h/2 + m g q/2 - R_b h + N q = 0
//! ```
//!
//! which solves to
//!
//! ```text
//! N = ((m g/2) sin(theta/2) - mu m g cos(theta/2) - (F_l/2) cos(theta/2))
//!     / (mu cos(theta/2) - sin(theta/2))
//! ```
//!
//! The denominator vanishes at `theta* = 2 atan(mu)`.

use serde::{Deserialize, Serialize};

use crate::angle::{cos_deg, sin_deg};
use crate::error::{check, Error, Result};
use crate::fold::{check_theta, FoldParams};

pub const STANDARD_GRAVITY: f64 = 9.81;

/// Configurations with `|tan(theta/2) - mu|` below this band are rejected as singular.
pub const DEFAULT_SINGULARITY_BAND: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LoadCase {
    /// External load resting on the beam, N.
    pub load_n: f64,
    /// Beam (facet) mass, kg.
    pub beam_mass: f64,
    /// Friction coefficient at the base.
    pub mu: f64,
    /// Lateral cable force applied at the beam centre, N.
    pub lateral_force: f64,
    /// m/s^2.
    pub gravity: f64,
}

impl Default for LoadCase {
    fn default() -> Self {
        Self {
            load_n: 0.0,
            beam_mass: 0.0,
            mu: 0.2,
            lateral_force: 0.0,
            gravity: STANDARD_GRAVITY,
        }
    }
}

impl LoadCase {
    pub fn validate(&self) -> Result<()> {
        check(self.load_n >= 0.0, "load_n", self.load_n, "[0, inf)")?;
        check(self.beam_mass >= 0.0, "beam_mass", self.beam_mass, "[0, inf)")?;
        check(self.mu >= 0.0, "mu", self.mu, "[0, inf)")?;
        check(
            self.lateral_force >= 0.0,
            "lateral_force",
            self.lateral_force,
            "[0, inf)",
        )?;
        check(self.gravity > 0.0, "gravity", self.gravity, "(0, inf)")
    }

    fn weight(&self) -> f64 {
        self.beam_mass * self.gravity
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Reactions {
    /// Base normal reaction `R_a`, N.
    pub base_normal: f64,
    /// Wall reaction `R_b`, N.
    pub wall: f64,
    /// Base friction `F_a = mu R_a`, N.
    pub base_friction: f64,
}

/// Lever arms of the beam, mm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BeamGeometry {
    pub h: f64,
    pub q: f64,
}

impl BeamGeometry {
    pub fn new(p: f64, theta: f64) -> Self {
        Self {
            h: p * cos_deg(theta / 2.0),
            q: p * sin_deg(theta / 2.0),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EquilibriumResult {
    /// Counterbalance force `N` the structure pushes up with, N.
    pub vertical_force: f64,
    pub reactions: Reactions,
    pub geometry: BeamGeometry,
    /// Set when `N < 0`: the structure cannot push up in this configuration.
    pub negative: bool,
}

impl EquilibriumResult {
    /// Upward force left over after carrying the case's external load.
    pub fn margin(&self, case: &LoadCase) -> f64 {
        self.vertical_force - case.load_n
    }
}

/// Force and moment balance residuals (N, N, N*mm).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Residuals {
    pub f_x: f64,
    pub f_y: f64,
    pub moment: f64,
}

impl Residuals {
    pub fn max_abs(&self) -> f64 {
        self.f_x.abs().max(self.f_y.abs()).max(self.moment.abs())
    }
}

/// Fold angle at which the equilibrium has no solution, degrees.
pub fn critical_theta(mu: f64) -> f64 {
    2.0 * mu.atan().to_degrees()
}

fn check_singularity(mu: f64, theta: f64, band: f64) -> Result<()> {
    let tan_half = sin_deg(theta / 2.0) / cos_deg(theta / 2.0);
    if (tan_half - mu).abs() < band {
        Err(Error::Singular {
            theta_deg: theta,
            critical_theta_deg: critical_theta(mu),
        })
    } else {
        Ok(())
    }
}

/// Solves for the vertical force with the default singularity band.
pub fn vertical_force(case: &LoadCase, params: &FoldParams, theta: f64) -> Result<EquilibriumResult> {
    vertical_force_with_band(case, params, theta, DEFAULT_SINGULARITY_BAND)
}

pub fn vertical_force_with_band(
    case: &LoadCase,
    params: &FoldParams,
    theta: f64,
    band: f64,
) -> Result<EquilibriumResult> {
    case.validate()?;
    check(params.p > 0.0, "p", params.p, "(0, inf)")?;
    check_theta(theta)?;
    check_singularity(case.mu, theta, band)?;

    let (s, c) = (sin_deg(theta / 2.0), cos_deg(theta / 2.0));
    let mg = case.weight();
    let mu = case.mu;
    let f_l = case.lateral_force;
    let n = ((mg / 2.0) * s - mu * mg * c - (f_l / 2.0) * c) / (mu * c - s);

    let reactions = reactions_for(case, n);
    Ok(EquilibriumResult {
        vertical_force: n,
        reactions,
        geometry: BeamGeometry::new(params.p, theta),
        negative: n < 0.0,
    })
}

/// Base and wall reactions implied by the two force balances for a given `N`.
fn reactions_for(case: &LoadCase, n: f64) -> Reactions {
    let base_normal = case.weight() + n;
    let base_friction = case.mu * base_normal;
    Reactions {
        base_normal,
        wall: base_friction + case.lateral_force,
        base_friction,
    }
}

/// Evaluates the three balances for explicit `N` and reactions.
pub fn residuals(case: &LoadCase, geometry: &BeamGeometry, n: f64, reactions: &Reactions) -> Residuals {
    let mg = case.weight();
    let BeamGeometry { h, q } = *geometry;
    Residuals {
        f_x: reactions.base_friction + case.lateral_force - reactions.wall,
        f_y: reactions.base_normal - mg - n,
        moment: case.lateral_force * (h / 2.0) + mg * (q / 2.0) - reactions.wall * h + n * q,
    }
}

/// Balances at a candidate `N`, with the reactions taken from the force
/// balances; a wrong candidate shows up in the moment.
pub fn equilibrium_residuals(case: &LoadCase, params: &FoldParams, theta: f64, candidate_n: f64) -> Residuals {
    let geometry = BeamGeometry::new(params.p, theta);
    residuals(case, &geometry, candidate_n, &reactions_for(case, candidate_n))
}

/// Lateral force that makes the structure deliver `target_n`.
/// `case.lateral_force` is ignored.
pub fn lateral_force_for_target(case: &LoadCase, theta: f64, target_n: f64) -> Result<f64> {
    lateral_force_for_target_with_band(case, theta, target_n, DEFAULT_SINGULARITY_BAND)
}

pub fn lateral_force_for_target_with_band(case: &LoadCase, theta: f64, target_n: f64, band: f64) -> Result<f64> {
    LoadCase {
        lateral_force: 0.0,
        ..*case
    }
    .validate()?;
    check(target_n >= 0.0, "target_n", target_n, "[0, inf)")?;
    check_theta(theta)?;
    check_singularity(case.mu, theta, band)?;

    let (s, c) = (sin_deg(theta / 2.0), cos_deg(theta / 2.0));
    if c == 0.0 {
        return Err(Error::FlatState { theta_deg: theta });
    }
    let mg = case.weight();
    let mu = case.mu;
    let f_l = 2.0 * ((mg / 2.0) * s - mu * mg * c - target_n * (mu * c - s)) / c;
    if f_l < 0.0 {
        // Rounding can leave a hair below zero when no tension is needed at all.
        if f_l > -1e-12 * (1.0 + target_n) {
            return Ok(0.0);
        }
        return Err(Error::NoTensionNeeded { required_n: f_l });
    }
    Ok(f_l)
}
