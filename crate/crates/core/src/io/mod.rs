//! Configuration parsing and text emitters.
//!
//! Every emitter is a pure function from model output to a `String`;
//! identical inputs give byte-identical text. Files are written by callers.

mod config;
mod csv;
mod obj;
mod report;
mod svg;

pub use self::config::{ConfigError, SystemConfig, CONFIG_VERSION};
pub use self::csv::{
    write_actuation_csv, write_dims_csv, write_force_csv, write_sweep_csv, write_testbed_csv, ActuationRow,
    SWEEP_HEADER, TESTBED_HEADER,
};
pub use self::obj::write_mesh_obj;
pub use self::report::{
    run_experiments, write_report, ForceSection, HeightSection, LatencySample, PowerSample, Report,
    REFERENCE_HEIGHT_CHANGE_MM, REFERENCE_LATENCY_S, REFERENCE_POWER_W,
};
pub use self::svg::write_crease_svg;

/// Formats `v` with six significant digits in fixed notation.
pub fn sig6(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return if v.is_finite() {
            "0.00000".to_string()
        } else {
            v.to_string()
        };
    }
    let exp = v.abs().log10().floor() as i32;
    let decimals = (5 - exp).clamp(0, 15) as usize;
    format!("{v:.decimals$}")
}
