//! Servo, extension wheel and cable.
//!
//! The servo winds the cable on a wheel; the cable contracts the structure
//! and lowers the fold angle. Two mappings from servo angle to fold angle are
//! offered:
//!
//! * [`MappingMode::Calibrated`] interpolates a table of measured
//!   `(servo, theta)` pairs, extrapolating linearly past the last one.
//! * [`MappingMode::Geometric`] assumes the cable shortens by the contraction
//!   of `n_active` units, `n_active * 2p * (sin(theta_0/2) - sin(theta/2))`,
//!   and solves that for `theta` by bisection.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::angle::sin_deg;
use crate::error::{check, Error, Result};
use crate::fold::FoldParams;

/// Smallest fold angle the calibrated extrapolation may return, degrees.
pub const MIN_THETA_DEG: f64 = 1e-6;

const BISECTION_TOL_DEG: f64 = 1e-10;
const VOLTAGE_MATCH_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CalibrationPoint {
    pub servo_deg: f64,
    pub theta_deg: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ActuatorConfig {
    pub wheel_diameter: f64,
    /// Allowed servo travel `[min, max]`, degrees.
    pub servo_range: [f64; 2],
    /// Supply voltage of the reference profile.
    pub reference_voltage: f64,
    /// Seconds per 180 degree sweep at the reference voltage.
    pub sweep_time_s: f64,
    /// Servo current at the reference voltage, A.
    pub servo_current_a: f64,
    pub boost_voltage: f64,
    pub fast_sweep_time_s: f64,
    /// Servo current at the boost voltage, A.
    pub boost_current_a: f64,
    pub controller_power_w: f64,
    pub calibration: Vec<CalibrationPoint>,
    /// Units contracted by one cable path (geometric mode).
    pub n_active: u32,
}

impl Default for ActuatorConfig {
    fn default() -> Self {
        Self {
            wheel_diameter: 40.0,
            servo_range: [0.0, 180.0],
            reference_voltage: 5.0,
            sweep_time_s: 0.48,
            servo_current_a: 1.9,
            boost_voltage: 8.4,
            fast_sweep_time_s: 0.39,
            // (23.645 W - 0.125 W) / 8.4 V
            boost_current_a: 2.8,
            controller_power_w: 5.0 * 0.025,
            calibration: vec![
                CalibrationPoint {
                    servo_deg: 0.0,
                    theta_deg: 130.0,
                },
                CalibrationPoint {
                    servo_deg: 60.0,
                    theta_deg: 100.0,
                },
                CalibrationPoint {
                    servo_deg: 120.0,
                    theta_deg: 58.0,
                },
            ],
            n_active: 3,
        }
    }
}

impl ActuatorConfig {
    pub fn validate(&self) -> Result<()> {
        check(
            self.wheel_diameter > 0.0,
            "wheel_diameter",
            self.wheel_diameter,
            "(0, inf)",
        )?;
        let [lo, hi] = self.servo_range;
        check(lo >= 0.0, "servo_range", lo, "[0, max servo angle)")?;
        check(hi > lo, "servo_range", hi, "(min servo angle, inf)")?;
        for (name, v) in [
            ("reference_voltage", self.reference_voltage),
            ("boost_voltage", self.boost_voltage),
            ("sweep_time_s", self.sweep_time_s),
            ("fast_sweep_time_s", self.fast_sweep_time_s),
        ] {
            check(v > 0.0, name, v, "(0, inf)")?;
        }
        for (name, v) in [
            ("servo_current_a", self.servo_current_a),
            ("boost_current_a", self.boost_current_a),
            ("controller_power_w", self.controller_power_w),
        ] {
            check(v >= 0.0, name, v, "[0, inf)")?;
        }
        let first = self.calibration.first().ok_or(Error::Empty("calibration"))?;
        check(
            first.servo_deg == 0.0,
            "calibration",
            first.servo_deg,
            "a first servo value of 0",
        )?;
        for pair in self.calibration.windows(2) {
            check(
                pair[1].servo_deg > pair[0].servo_deg,
                "calibration",
                pair[1].servo_deg,
                "strictly increasing servo values",
            )?;
            check(
                pair[1].theta_deg < pair[0].theta_deg,
                "calibration",
                pair[1].theta_deg,
                "strictly decreasing theta values",
            )?;
        }
        for point in &self.calibration {
            check(
                point.theta_deg > 0.0 && point.theta_deg <= 180.0,
                "calibration",
                point.theta_deg,
                "theta values in (0, 180]",
            )?;
        }
        Ok(())
    }

    fn wheel_radius(&self) -> f64 {
        self.wheel_diameter / 2.0
    }

    fn check_servo(&self, servo_deg: f64) -> Result<()> {
        let [lo, hi] = self.servo_range;
        check(
            servo_deg >= lo && servo_deg <= hi,
            "servo_deg",
            servo_deg,
            "the servo range",
        )
    }

    /// `(sweep time for 180 degrees, servo current)` at `voltage`.
    fn profile(&self, voltage: f64) -> Result<(f64, f64)> {
        if (voltage - self.reference_voltage).abs() < VOLTAGE_MATCH_TOL {
            Ok((self.sweep_time_s, self.servo_current_a))
        } else if (voltage - self.boost_voltage).abs() < VOLTAGE_MATCH_TOL {
            Ok((self.fast_sweep_time_s, self.boost_current_a))
        } else {
            Err(Error::UnknownVoltage { volts: voltage })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MappingMode {
    Geometric,
    #[default]
    Calibrated,
}

impl fmt::Display for MappingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MappingMode::Geometric => "geometric",
            MappingMode::Calibrated => "calibrated",
        })
    }
}

impl FromStr for MappingMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "geometric" => Ok(MappingMode::Geometric),
            "calibrated" => Ok(MappingMode::Calibrated),
            other => Err(format!(
                "unknown mapping mode `{other}` (expected geometric or calibrated)"
            )),
        }
    }
}

/// A servo target at a given supply voltage.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ActuationCommand {
    pub servo_deg: f64,
    pub voltage: f64,
}

/// Fold angle produced by a servo angle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ServoTheta {
    pub theta_deg: f64,
    /// The calibrated extrapolation left `(0, 180]` and was clamped.
    pub clamped: bool,
}

/// Cable length wound onto the wheel, mm.
pub fn cable_displacement(config: &ActuatorConfig, servo_deg: f64) -> Result<f64> {
    config.validate()?;
    config.check_servo(servo_deg)?;
    Ok(config.wheel_radius() * servo_deg.to_radians())
}

/// Largest cable shortening the structure can absorb in geometric mode, mm.
pub fn max_contraction(config: &ActuatorConfig, params: &FoldParams) -> f64 {
    config.n_active as f64 * 2.0 * params.p * sin_deg(params.theta_neutral / 2.0)
}

fn contraction(config: &ActuatorConfig, params: &FoldParams, theta: f64) -> f64 {
    config.n_active as f64 * 2.0 * params.p * (sin_deg(params.theta_neutral / 2.0) - sin_deg(theta / 2.0))
}

pub fn theta_from_servo(
    config: &ActuatorConfig,
    params: &FoldParams,
    servo_deg: f64,
    mode: MappingMode,
) -> Result<ServoTheta> {
    config.validate()?;
    config.check_servo(servo_deg)?;
    match mode {
        MappingMode::Calibrated => Ok(calibrated_theta(&config.calibration, servo_deg)),
        MappingMode::Geometric => {
            params.validate()?;
            check(config.n_active >= 1, "n_active", config.n_active as f64, "[1, inf)")?;
            let displacement = config.wheel_radius() * servo_deg.to_radians();
            Ok(ServoTheta {
                theta_deg: geometric_theta(config, params, displacement)?,
                clamped: false,
            })
        }
    }
}

/// Index of the table segment used for `x`; the last segment also covers extrapolation.
fn segment(points: &[CalibrationPoint], servo_deg: f64) -> usize {
    let last = points.len() - 2;
    points[1..=last]
        .iter()
        .position(|p| servo_deg < p.servo_deg)
        .unwrap_or(last)
}

fn calibrated_theta(points: &[CalibrationPoint], servo_deg: f64) -> ServoTheta {
    if points.len() == 1 {
        return ServoTheta {
            theta_deg: points[0].theta_deg,
            clamped: false,
        };
    }
    let k = segment(points, servo_deg);
    let (a, b) = (points[k], points[k + 1]);
    let theta = if servo_deg == b.servo_deg {
        b.theta_deg
    } else {
        a.theta_deg + (servo_deg - a.servo_deg) * (b.theta_deg - a.theta_deg) / (b.servo_deg - a.servo_deg)
    };
    let clamped_theta = theta.clamp(MIN_THETA_DEG, 180.0);
    ServoTheta {
        theta_deg: clamped_theta,
        clamped: clamped_theta != theta,
    }
}

fn geometric_theta(config: &ActuatorConfig, params: &FoldParams, displacement: f64) -> Result<f64> {
    let max = max_contraction(config, params);
    if displacement >= max {
        return Err(Error::ContractionExceeded {
            displacement_mm: displacement,
            max_mm: max,
        });
    }
    if displacement == 0.0 {
        return Ok(params.theta_neutral);
    }
    // contraction(theta) - displacement falls from positive near 0 to -displacement at theta_0.
    let (mut lo, mut hi) = (0.0, params.theta_neutral);
    while hi - lo > BISECTION_TOL_DEG {
        let mid = 0.5 * (lo + hi);
        if contraction(config, params, mid) > displacement {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Interval of fold angles the servo can reach, `[min, max]` degrees.
pub fn reachable_theta(config: &ActuatorConfig, params: &FoldParams, mode: MappingMode) -> Result<[f64; 2]> {
    let [lo, hi] = config.servo_range;
    let at = |s: f64| -> Result<f64> {
        match mode {
            MappingMode::Geometric => {
                let d = config.wheel_radius() * s.to_radians();
                if d >= max_contraction(config, params) {
                    Ok(0.0)
                } else {
                    geometric_theta(config, params, d)
                }
            }
            MappingMode::Calibrated => Ok(calibrated_theta(&config.calibration, s).theta_deg),
        }
    };
    Ok([at(hi)?, at(lo)?])
}

/// Servo angle that yields `theta`.
pub fn servo_for_theta(config: &ActuatorConfig, params: &FoldParams, theta: f64, mode: MappingMode) -> Result<f64> {
    config.validate()?;
    crate::fold::check_theta(theta)?;
    let unreachable = |config: &ActuatorConfig| -> Error {
        match reachable_theta(config, params, mode) {
            Ok([min_deg, max_deg]) => Error::ThetaUnreachable {
                theta_deg: theta,
                min_deg,
                max_deg,
            },
            Err(e) => e,
        }
    };
    let servo = match mode {
        MappingMode::Calibrated => {
            let points = &config.calibration;
            if points.len() == 1 {
                if theta == points[0].theta_deg {
                    return Ok(points[0].servo_deg);
                }
                return Err(unreachable(config));
            }
            if theta > points[0].theta_deg {
                return Err(unreachable(config));
            }
            // first segment whose lower theta bound reaches theta; the last one extrapolates
            let last = points.len() - 2;
            let k = points[1..=last]
                .iter()
                .position(|p| theta >= p.theta_deg)
                .unwrap_or(last);
            let (a, b) = (points[k], points[k + 1]);
            if theta == a.theta_deg {
                a.servo_deg
            } else if theta == b.theta_deg {
                b.servo_deg
            } else {
                a.servo_deg + (theta - a.theta_deg) * (b.servo_deg - a.servo_deg) / (b.theta_deg - a.theta_deg)
            }
        }
        MappingMode::Geometric => {
            params.validate()?;
            check(config.n_active >= 1, "n_active", config.n_active as f64, "[1, inf)")?;
            if theta > params.theta_neutral {
                return Err(unreachable(config));
            }
            (contraction(config, params, theta) / config.wheel_radius()).to_degrees()
        }
    };
    let [lo, hi] = config.servo_range;
    if servo < lo || servo > hi {
        return Err(unreachable(config));
    }
    Ok(servo)
}

/// Time to sweep `delta_servo_deg` at `voltage`, linear in the angle.
pub fn actuation_time(config: &ActuatorConfig, delta_servo_deg: f64, voltage: f64) -> Result<f64> {
    check(delta_servo_deg >= 0.0, "delta_servo_deg", delta_servo_deg, "[0, inf)")?;
    let (sweep, _) = config.profile(voltage)?;
    Ok(delta_servo_deg / 180.0 * sweep)
}

/// Total electrical power: servo at `voltage` plus the controller.
pub fn power_draw(config: &ActuatorConfig, voltage: f64) -> Result<f64> {
    let (_, current) = config.profile(voltage)?;
    Ok(voltage * current + config.controller_power_w)
}
