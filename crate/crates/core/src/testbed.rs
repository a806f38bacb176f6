//! Loaded-plate testbed over the folded structure.
//!
//! A flat plate of mass `plate_mass_kg` rests on the structure. Its weight is
//! shared evenly by the contact locations; on top of that share every
//! location feels the vertical force the actuated structure produces from the
//! cable tension. What a contact sensor reads is that force scaled by the
//! contact-area factor `a(theta) = sin(theta/2)`, which is 1 in the flat state
//! and shrinks as the structure folds and its ridges sharpen.
//!
//! Cable tension is modelled as proportional to the cable wound onto the
//! wheel, `F_l = cable_tension_per_mm * displacement`.

use serde::{Deserialize, Serialize};

use crate::actuation::{self, ActuationCommand, ActuatorConfig, MappingMode};
use crate::angle::sin_deg;
use crate::error::{check, Error, Result};
use crate::fold::{self, FoldParams};
use crate::force::{self, LoadCase, STANDARD_GRAVITY};

/// Height the prototype reads at rest, including material thickness, mm.
pub const NEUTRAL_HEIGHT_MM: f64 = 10.0;

/// Servo angles of the pressure-distribution run, degrees.
pub const PRESSURE_RUN_ANGLES: [f64; 5] = [0.0, 30.0, 60.0, 90.0, 120.0];

/// Servo angle per intensity level step, degrees.
pub const LEVEL_STEP_DEG: f64 = 40.0;

/// Supply voltage used for intensity schedules.
pub const REFERENCE_VOLTAGE: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContactLocation {
    /// 1-based sensor label.
    pub id: u8,
    /// Row-major index of the unit under the sensor.
    pub unit: u32,
    pub cable_connected: bool,
}

fn default_locations() -> Vec<ContactLocation> {
    // Sensors 1-4 sit on cable-connected facets, 5-8 on free ones.
    [(1, 1), (2, 2), (3, 5), (4, 6), (5, 4), (6, 7), (7, 8), (8, 11)]
        .into_iter()
        .map(|(id, unit)| ContactLocation {
            id,
            unit,
            cable_connected: id <= 4,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TestbedConfig {
    /// Structure under the plate. In a [`SystemConfig`](crate::io::SystemConfig)
    /// this always mirrors the top-level fold parameters.
    #[serde(skip)]
    pub prototype: FoldParams,
    pub plate_mass_kg: f64,
    pub contact_locations: Vec<ContactLocation>,
    /// Added to kinematic heights to account for material thickness, mm.
    pub thickness_offset_mm: f64,
    pub mu: f64,
    pub beam_mass: f64,
    /// Cable tension per mm of wound cable, N/mm.
    pub cable_tension_per_mm: f64,
    pub gravity: f64,
}

impl Default for TestbedConfig {
    fn default() -> Self {
        let prototype = FoldParams::default();
        Self {
            prototype,
            plate_mass_kg: 1.0,
            contact_locations: default_locations(),
            thickness_offset_mm: neutral_offset(&prototype),
            mu: 0.2,
            beam_mass: 0.0,
            cable_tension_per_mm: 0.023,
            gravity: STANDARD_GRAVITY,
        }
    }
}

/// Offset that makes the neutral state read [`NEUTRAL_HEIGHT_MM`].
pub fn neutral_offset(prototype: &FoldParams) -> f64 {
    let h = prototype.p * crate::angle::cos_deg(prototype.theta_neutral / 2.0);
    NEUTRAL_HEIGHT_MM - h
}

impl TestbedConfig {
    pub fn validate(&self) -> Result<()> {
        self.prototype.validate()?;
        check(
            self.plate_mass_kg >= 0.0,
            "plate_mass_kg",
            self.plate_mass_kg,
            "[0, inf)",
        )?;
        if self.contact_locations.is_empty() {
            return Err(Error::Empty("contact_locations"));
        }
        let units = self.prototype.n * self.prototype.m;
        for loc in &self.contact_locations {
            check(
                loc.unit < units,
                "contact_locations",
                loc.unit as f64,
                "unit indices below n * m",
            )?;
        }
        check(
            self.thickness_offset_mm.is_finite(),
            "thickness_offset_mm",
            self.thickness_offset_mm,
            "a finite value",
        )?;
        check(
            self.cable_tension_per_mm >= 0.0,
            "cable_tension_per_mm",
            self.cable_tension_per_mm,
            "[0, inf)",
        )?;
        self.load_case(0.0, 0.0).validate()
    }

    fn load_case(&self, share: f64, lateral: f64) -> LoadCase {
        LoadCase {
            load_n: share,
            beam_mass: self.beam_mass,
            mu: self.mu,
            lateral_force: lateral,
            gravity: self.gravity,
        }
    }

    pub fn plate_weight(&self) -> f64 {
        self.plate_mass_kg * self.gravity
    }
}

/// Fraction of a sensor's area in contact at fold angle `theta`.
pub fn contact_area_factor(theta: f64) -> f64 {
    sin_deg(theta / 2.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LocationForce {
    pub id: u8,
    pub cable_connected: bool,
    pub area_factor: f64,
    pub force_n: f64,
}

/// Simulated sensor readings for one servo angle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContactMap {
    pub servo_deg: f64,
    pub theta_deg: f64,
    pub height_mm: f64,
    pub lateral_force_n: f64,
    /// Force carried by each contacting unit before the area factor, N.
    pub unit_force_n: f64,
    /// Part of `unit_force_n` produced by actuation, N.
    pub actuation_force_n: f64,
    pub locations: Vec<LocationForce>,
}

impl ContactMap {
    pub fn total_force(&self) -> f64 {
        self.locations.iter().map(|l| l.force_n).sum()
    }
}

/// One servo angle of a testbed run. Singular configurations keep their
/// slot with the error instead of aborting the run.
#[derive(Debug, Clone, PartialEq)]
pub struct TestbedEntry {
    pub servo_deg: f64,
    pub theta_deg: f64,
    pub outcome: Result<ContactMap>,
}

pub fn simulate_testbed(
    config: &TestbedConfig,
    actuator: &ActuatorConfig,
    servo_angles: &[f64],
) -> Result<Vec<TestbedEntry>> {
    config.validate()?;
    actuator.validate()?;
    let mut thetas = Vec::with_capacity(servo_angles.len());
    for &servo in servo_angles {
        let t = actuation::theta_from_servo(actuator, &config.prototype, servo, MappingMode::Calibrated)?;
        thetas.push(t.theta_deg);
    }
    servo_angles
        .iter()
        .zip(thetas)
        .map(|(&servo, theta)| {
            Ok(TestbedEntry {
                servo_deg: servo,
                theta_deg: theta,
                outcome: contact_map(config, actuator, servo, theta),
            })
        })
        .collect()
}

fn contact_map(config: &TestbedConfig, actuator: &ActuatorConfig, servo: f64, theta: f64) -> Result<ContactMap> {
    let share = config.plate_weight() / config.contact_locations.len() as f64;
    let lateral = config.cable_tension_per_mm * actuation::cable_displacement(actuator, servo)?;
    let eq = force::vertical_force(&config.load_case(share, lateral), &config.prototype, theta)?;
    let unit_force = share + eq.vertical_force;
    let area = contact_area_factor(theta);
    let height = fold::dimensions(&config.prototype, theta)?.h + config.thickness_offset_mm;
    Ok(ContactMap {
        servo_deg: servo,
        theta_deg: theta,
        height_mm: height,
        lateral_force_n: lateral,
        unit_force_n: unit_force,
        actuation_force_n: eq.vertical_force,
        locations: config
            .contact_locations
            .iter()
            .map(|loc| LocationForce {
                id: loc.id,
                cable_connected: loc.cable_connected,
                area_factor: area,
                // a sensor cannot read tension
                force_n: area * unit_force.max(0.0),
            })
            .collect(),
    })
}

/// Reported structure height at a servo angle, thickness offset included.
pub fn height_report(config: &TestbedConfig, actuator: &ActuatorConfig, servo_deg: f64) -> Result<f64> {
    config.validate()?;
    let theta = actuation::theta_from_servo(actuator, &config.prototype, servo_deg, MappingMode::Calibrated)?;
    Ok(fold::dimensions(&config.prototype, theta.theta_deg)?.h + config.thickness_offset_mm)
}

/// Maps intensity levels 1-4 to servo commands at 40, 80, 120 and 160 degrees.
pub fn intensity_schedule(levels: &[u8]) -> Result<Vec<ActuationCommand>> {
    if levels.is_empty() {
        return Err(Error::Empty("levels"));
    }
    levels
        .iter()
        .map(|&level| match level {
            1..=4 => Ok(ActuationCommand {
                servo_deg: LEVEL_STEP_DEG * level as f64,
                voltage: REFERENCE_VOLTAGE,
            }),
            other => Err(Error::UnknownLevel(other)),
        })
        .collect()
}
