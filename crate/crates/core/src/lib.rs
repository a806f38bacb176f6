//! Simulation and design toolkit for cable-actuated Miura-Ori tactile surfaces.
//!
//! The crate is organised around the actuation chain of the device:
//!
//! * [`fold`]: closed-form fold kinematics, parameter sweeps, the folded 3D
//!   mesh and the flat crease pattern.
//! * [`force`]: ladder-style static equilibrium turning lateral cable force into
//!   vertical tactile force.
//! * [`actuation`]: servo, extension wheel and cable, mapping servo angle to
//!   fold angle, plus latency and power.
//! * [`testbed`]: a loaded plate over the folded structure with eight contact
//!   sensors, heights and intensity schedules.
//! * [`io`]: JSON configuration and every text emitter (CSV, OBJ, SVG, report).
//!
//! All public angles are in degrees, lengths in millimetres, masses in
//! kilograms and forces in newtons.

pub mod actuation;
mod angle;
mod error;
pub mod fold;
pub mod force;
pub mod io;
pub mod testbed;

pub use actuation::{ActuationCommand, ActuatorConfig, CalibrationPoint, MappingMode, ServoTheta};
pub use error::{Error, Result};
pub use fold::{Dimensions, FoldParams};
pub use force::{EquilibriumResult, LoadCase};
pub use testbed::{ContactMap, TestbedConfig};
