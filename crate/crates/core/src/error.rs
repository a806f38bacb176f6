use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failures raised by the kinematic, force and actuation models.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("`{param}` = {value} is outside {expected}")]
    Domain {
        param: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("height {h} mm unreachable for facet length p = {p} mm")]
    HeightUnreachable { h: f64, p: f64 },

    #[error("equilibrium is singular at theta = {theta_deg} deg (critical angle {critical_theta_deg} deg)")]
    Singular { theta_deg: f64, critical_theta_deg: f64 },

    #[error("target force achieved without cable tension (required lateral force {required_n} N)")]
    NoTensionNeeded { required_n: f64 },

    #[error("lateral force has no vertical effect at theta = {theta_deg} deg")]
    FlatState { theta_deg: f64 },

    #[error("cable displacement {displacement_mm} mm exceeds the maximum contraction {max_mm} mm")]
    ContractionExceeded { displacement_mm: f64, max_mm: f64 },

    #[error("theta = {theta_deg} deg unreachable; reachable interval is [{min_deg}, {max_deg}] deg")]
    ThetaUnreachable { theta_deg: f64, min_deg: f64, max_deg: f64 },

    #[error("no servo profile configured for {volts} V")]
    UnknownVoltage { volts: f64 },

    #[error("unknown intensity level {0}")]
    UnknownLevel(u8),

    #[error("{0} must not be empty")]
    Empty(&'static str),
}

pub(crate) fn check(cond: bool, param: &'static str, value: f64, expected: &'static str) -> Result<()> {
    if cond && value.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain { param, value, expected })
    }
}
