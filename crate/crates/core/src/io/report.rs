use std::fmt::Write;

use super::config::SystemConfig;
use super::sig6;
use crate::actuation;
use crate::error::Result;
use crate::fold::{self, DimensionTable};
use crate::force::{self, EquilibriumResult, LoadCase};
use crate::testbed::{self, TestbedEntry};

/// Measured prototype power at 5 V, W.
pub const REFERENCE_POWER_W: f64 = 9.625;
/// Measured prototype power at 8.4 V, W.
pub const REFERENCE_BOOST_POWER_W: f64 = 23.645;
/// Measured 180 degree sweep time at 5 V, s.
pub const REFERENCE_LATENCY_S: f64 = 0.48;
/// Measured 180 degree sweep time at 8.4 V, s.
pub const REFERENCE_BOOST_LATENCY_S: f64 = 0.39;
/// Measured height change between rest and a 160 degree actuation, mm.
pub const REFERENCE_HEIGHT_CHANGE_MM: f64 = 12.0;

#[derive(Debug, Clone, PartialEq)]
pub struct ForceSection {
    pub theta: f64,
    pub case: LoadCase,
    pub result: EquilibriumResult,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatencySample {
    pub voltage: f64,
    pub delta_servo_deg: f64,
    pub seconds: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerSample {
    pub voltage: f64,
    pub watts: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeightSection {
    pub servo_deg: f64,
    pub neutral_mm: f64,
    pub actuated_mm: f64,
}

/// Experiment outputs to render. Absent sections are omitted.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub config: Option<SystemConfig>,
    pub sweep: Option<DimensionTable>,
    pub force: Option<ForceSection>,
    pub testbed: Option<Vec<TestbedEntry>>,
    pub latency: Option<Vec<LatencySample>>,
    pub power: Option<Vec<PowerSample>>,
    pub height: Option<HeightSection>,
}

/// Runs the standard experiment set for `config`.
pub fn run_experiments(config: &SystemConfig) -> Result<Report> {
    let fold = &config.fold;
    let act = &config.actuator;
    let sweep = fold::sweep(fold, 90.0, 180.0, 1.0, &[45.0, 60.0, 70.0])?;
    let force = force::vertical_force(&config.load_case, fold, fold.theta_neutral)
        .map(|result| ForceSection {
            theta: fold.theta_neutral,
            case: config.load_case,
            result,
        })
        .ok();
    let testbed = testbed::simulate_testbed(&config.testbed, act, &testbed::PRESSURE_RUN_ANGLES)?;
    let mut latency = Vec::new();
    let mut power = Vec::new();
    for voltage in [act.reference_voltage, act.boost_voltage] {
        latency.push(LatencySample {
            voltage,
            delta_servo_deg: 180.0,
            seconds: actuation::actuation_time(act, 180.0, voltage)?,
        });
        power.push(PowerSample {
            voltage,
            watts: actuation::power_draw(act, voltage)?,
        });
    }
    let height = HeightSection {
        servo_deg: 160.0,
        neutral_mm: testbed::height_report(&config.testbed, act, 0.0)?,
        actuated_mm: testbed::height_report(&config.testbed, act, 160.0)?,
    };
    Ok(Report {
        config: Some(config.clone()),
        sweep: Some(sweep),
        force,
        testbed: Some(testbed),
        latency: Some(latency),
        power: Some(power),
        height: Some(height),
    })
}

fn deviation(simulated: f64, reference: f64) -> String {
    format!("{:+.2}%", (simulated - reference) / reference * 100.0)
}

fn reference_for(voltage: f64, reference: f64, boost: f64) -> Option<f64> {
    if voltage == 5.0 {
        Some(reference)
    } else if voltage == 8.4 {
        Some(boost)
    } else {
        None
    }
}

/// Plain-text report. An empty [`Report`] renders as the header alone.
pub fn write_report(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "orifold report");
    let _ = writeln!(out, "units: lengths mm, angles deg, forces N, time s, power W");

    if let Some(config) = &report.config {
        let f = &config.fold;
        let _ = writeln!(out, "\n[config]");
        let _ = writeln!(
            out,
            "fold: p={} beta={} n={} m={} theta_neutral={}",
            sig6(f.p),
            sig6(f.beta),
            f.n,
            f.m,
            sig6(f.theta_neutral)
        );
        let a = &config.actuator;
        let _ = writeln!(
            out,
            "actuator: wheel_diameter={} servo_range=[{}, {}] n_active={} calibration={}",
            sig6(a.wheel_diameter),
            sig6(a.servo_range[0]),
            sig6(a.servo_range[1]),
            a.n_active,
            a.calibration
                .iter()
                .map(|c| format!("({}, {})", sig6(c.servo_deg), sig6(c.theta_deg)))
                .collect::<Vec<_>>()
                .join(" ")
        );
        let t = &config.testbed;
        let _ = writeln!(
            out,
            "testbed: plate_mass_kg={} locations={} thickness_offset_mm={} mu={} cable_tension_per_mm={}",
            sig6(t.plate_mass_kg),
            t.contact_locations.len(),
            sig6(t.thickness_offset_mm),
            sig6(t.mu),
            sig6(t.cable_tension_per_mm)
        );
    }

    if let Some(table) = &report.sweep {
        let _ = writeln!(out, "\n[sweep]");
        let mut betas: Vec<f64> = table.rows.iter().map(|r| r.beta).collect();
        betas.sort_by(f64::total_cmp);
        betas.dedup();
        for beta in betas {
            let rows: Vec<_> = table.for_beta(beta).collect();
            let range = |get: fn(&fold::DimensionRow) -> f64| {
                let lo = rows.iter().map(|r| get(r)).fold(f64::INFINITY, f64::min);
                let hi = rows.iter().map(|r| get(r)).fold(f64::NEG_INFINITY, f64::max);
                format!("[{}, {}]", sig6(lo), sig6(hi))
            };
            let _ = writeln!(
                out,
                "beta={} rows={} h={} l={} w={} w_range={}",
                sig6(beta),
                rows.len(),
                range(|r| r.h),
                range(|r| r.l),
                range(|r| r.w),
                sig6(table.width_range(beta).unwrap_or(0.0))
            );
        }
    }

    if let Some(f) = &report.force {
        let r = &f.result;
        let _ = writeln!(out, "\n[force]");
        let _ = writeln!(
            out,
            "theta={} lateral_force={} mu={} beam_mass={} -> vertical_force={} base_normal={} wall={} base_friction={}{}",
            sig6(f.theta),
            sig6(f.case.lateral_force),
            sig6(f.case.mu),
            sig6(f.case.beam_mass),
            sig6(r.vertical_force),
            sig6(r.reactions.base_normal),
            sig6(r.reactions.wall),
            sig6(r.reactions.base_friction),
            if r.negative { " (negative)" } else { "" }
        );
    }

    if let Some(entries) = &report.testbed {
        let _ = writeln!(out, "\n[testbed]");
        for e in entries {
            match &e.outcome {
                Ok(map) => {
                    for l in &map.locations {
                        let _ = writeln!(
                            out,
                            "servo={} theta={} location={} connected={} force={}",
                            sig6(e.servo_deg),
                            sig6(e.theta_deg),
                            l.id,
                            l.cable_connected,
                            sig6(l.force_n)
                        );
                    }
                }
                Err(err) => {
                    let _ = writeln!(
                        out,
                        "servo={} theta={} error: {err}",
                        sig6(e.servo_deg),
                        sig6(e.theta_deg)
                    );
                }
            }
        }
    }

    if let Some(samples) = &report.latency {
        let _ = writeln!(out, "\n[latency]");
        for s in samples {
            let _ = write!(
                out,
                "{} V, {} deg: {} s",
                sig6(s.voltage),
                sig6(s.delta_servo_deg),
                sig6(s.seconds)
            );
            if let Some(reference) = reference_for(s.voltage, REFERENCE_LATENCY_S, REFERENCE_BOOST_LATENCY_S)
                .filter(|_| s.delta_servo_deg == 180.0)
            {
                let _ = write!(out, " (reference {reference} s, {})", deviation(s.seconds, reference));
            }
            out.push('\n');
        }
    }

    if let Some(samples) = &report.power {
        let _ = writeln!(out, "\n[power]");
        for s in samples {
            let _ = write!(out, "{} V: {} W", sig6(s.voltage), s.watts);
            if let Some(reference) = reference_for(s.voltage, REFERENCE_POWER_W, REFERENCE_BOOST_POWER_W) {
                let _ = write!(out, " (reference {reference} W, {})", deviation(s.watts, reference));
            }
            out.push('\n');
        }
    }

    if let Some(h) = &report.height {
        let change = h.actuated_mm - h.neutral_mm;
        let _ = writeln!(out, "\n[height]");
        let _ = writeln!(
            out,
            "servo 0 deg: {} mm, servo {} deg: {} mm, change {} mm (reference {REFERENCE_HEIGHT_CHANGE_MM} mm, {})",
            sig6(h.neutral_mm),
            sig6(h.servo_deg),
            sig6(h.actuated_mm),
            sig6(change),
            deviation(change, REFERENCE_HEIGHT_CHANGE_MM)
        );
    }
    out
}
