use std::fmt::Write;

use super::sig6;
use crate::actuation::{self, ActuationCommand, ActuatorConfig, MappingMode};
use crate::error::{Error, Result};
use crate::fold::{DimensionTable, Dimensions, FoldParams};
use crate::force::{EquilibriumResult, LoadCase};
use crate::testbed::TestbedEntry;

pub const SWEEP_HEADER: &str = "beta_deg,theta_deg,h_mm,l_mm,w_mm";
pub const TESTBED_HEADER: &str = "servo_deg,theta_deg,location,cable_connected,area_factor,height_mm,force_n,status";

fn row(out: &mut String, fields: &[String]) {
    out.push_str(&fields.join(","));
    out.push('\n');
}

/// Sweep table, ordered by beta then theta.
pub fn write_sweep_csv(table: &DimensionTable) -> String {
    let mut rows = table.rows.clone();
    rows.sort_by(|a, b| a.beta.total_cmp(&b.beta).then(a.theta.total_cmp(&b.theta)));
    let mut out = format!("{SWEEP_HEADER}\n");
    for r in &rows {
        row(&mut out, &[r.beta, r.theta, r.h, r.l, r.w].map(sig6));
    }
    out
}

pub fn write_dims_csv(theta: f64, dims: &Dimensions) -> String {
    let mut out = String::from("theta_deg,phi_deg,h_mm,l_mm,w_mm\n");
    row(&mut out, &[theta, dims.phi, dims.h, dims.l, dims.w].map(sig6));
    out
}

pub fn write_force_csv(theta: f64, case: &LoadCase, result: &EquilibriumResult) -> String {
    let mut out = String::from(
        "theta_deg,lateral_force_n,load_n,vertical_force_n,margin_n,base_normal_n,wall_n,base_friction_n,h_mm,q_mm,negative\n",
    );
    let r = &result.reactions;
    let mut fields: Vec<String> = [
        theta,
        case.lateral_force,
        case.load_n,
        result.vertical_force,
        result.margin(case),
        r.base_normal,
        r.wall,
        r.base_friction,
        result.geometry.h,
        result.geometry.q,
    ]
    .map(sig6)
    .to_vec();
    fields.push(result.negative.to_string());
    row(&mut out, &fields);
    out
}

/// One evaluated servo command.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ActuationRow {
    pub servo_deg: f64,
    pub mode: MappingMode,
    pub voltage: f64,
    pub cable_mm: f64,
    pub theta_deg: f64,
    pub clamped: bool,
    pub time_s: f64,
    pub power_w: f64,
}

impl ActuationRow {
    /// Evaluates `command`, timing the move from the rest position.
    pub fn evaluate(
        config: &ActuatorConfig,
        params: &FoldParams,
        command: ActuationCommand,
        mode: MappingMode,
    ) -> Result<Self> {
        let theta = actuation::theta_from_servo(config, params, command.servo_deg, mode)?;
        Ok(Self {
            servo_deg: command.servo_deg,
            mode,
            voltage: command.voltage,
            cable_mm: actuation::cable_displacement(config, command.servo_deg)?,
            theta_deg: theta.theta_deg,
            clamped: theta.clamped,
            time_s: actuation::actuation_time(config, command.servo_deg - config.servo_range[0], command.voltage)?,
            power_w: actuation::power_draw(config, command.voltage)?,
        })
    }
}

pub fn write_actuation_csv(rows: &[ActuationRow]) -> String {
    let mut out = String::from("servo_deg,mode,voltage_v,cable_mm,theta_deg,clamped,time_s,power_w\n");
    for r in rows {
        row(
            &mut out,
            &[
                sig6(r.servo_deg),
                r.mode.to_string(),
                sig6(r.voltage),
                sig6(r.cable_mm),
                sig6(r.theta_deg),
                r.clamped.to_string(),
                sig6(r.time_s),
                sig6(r.power_w),
            ],
        );
    }
    out
}

fn status(err: &Error) -> &'static str {
    match err {
        Error::Singular { .. } => "singular",
        _ => "error",
    }
}

/// One line per servo angle and contact location.
pub fn write_testbed_csv(entries: &[TestbedEntry], locations: &[crate::testbed::ContactLocation]) -> String {
    let mut out = format!("{TESTBED_HEADER}\n");
    for e in entries {
        match &e.outcome {
            Ok(map) => {
                for l in &map.locations {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{},{},ok",
                        sig6(e.servo_deg),
                        sig6(e.theta_deg),
                        l.id,
                        l.cable_connected,
                        sig6(l.area_factor),
                        sig6(map.height_mm),
                        sig6(l.force_n),
                    );
                }
            }
            Err(err) => {
                for l in locations {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},,,,{}",
                        sig6(e.servo_deg),
                        sig6(e.theta_deg),
                        l.id,
                        l.cable_connected,
                        status(err),
                    );
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fold::{dimensions, sweep, FoldParams};

    #[test]
    fn sweep_csv_layout() {
        let t = sweep(&FoldParams::default(), 90.0, 180.0, 45.0, &[70.0]).unwrap();
        let text = write_sweep_csv(&t);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[0], SWEEP_HEADER);
        assert_eq!(lines[3].split(',').nth(2), Some("0.00000"));
    }

    #[test]
    fn sweep_rows_sorted() {
        let t = sweep(&FoldParams::default(), 90.0, 180.0, 45.0, &[70.0, 45.0]).unwrap();
        let text = write_sweep_csv(&t);
        let betas: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
        assert_eq!(
            betas,
            ["45.0000", "45.0000", "45.0000", "70.0000", "70.0000", "70.0000"]
        );
    }

    #[test]
    fn dims_row() {
        let d = dimensions(&FoldParams::default(), 130.0).unwrap();
        assert_eq!(
            write_dims_csv(130.0, &d),
            "theta_deg,phi_deg,h_mm,l_mm,w_mm\n130.000,143.884,9.29760,166.330,125.498\n"
        );
    }
}
