use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::actuation::ActuatorConfig;
use crate::error::Error;
use crate::fold::FoldParams;
use crate::force::LoadCase;
use crate::testbed::TestbedConfig;

/// Schema version accepted by [`SystemConfig::from_json`].
pub const CONFIG_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("invalid `{field}`: {rule}")]
    Invariant { field: String, rule: String },
}

/// Everything a run needs. Angles in degrees, lengths in mm, masses in kg.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SystemConfig {
    pub version: u32,
    pub fold: FoldParams,
    pub actuator: ActuatorConfig,
    pub testbed: TestbedConfig,
    pub load_case: LoadCase,
}

impl Default for SystemConfig {
    fn default() -> Self {
        Self {
            version: CONFIG_VERSION,
            fold: FoldParams::default(),
            actuator: ActuatorConfig::default(),
            testbed: TestbedConfig::default(),
            load_case: LoadCase::default(),
        }
    }
}

fn invariant(section: &str, err: Error) -> ConfigError {
    match err {
        Error::Domain { param, value, expected } => ConfigError::Invariant {
            field: format!("{section}.{param}"),
            rule: format!("{value} is outside {expected}"),
        },
        Error::Empty(what) => ConfigError::Invariant {
            field: format!("{section}.{what}"),
            rule: "must not be empty".into(),
        },
        other => ConfigError::Invariant {
            field: section.to_string(),
            rule: other.to_string(),
        },
    }
}

impl SystemConfig {
    /// Parses and validates a JSON document. Missing fields take the
    /// prototype defaults; unknown keys are rejected.
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        let mut config: SystemConfig = serde_json::from_str(text).map_err(|e| {
            use serde_json::error::Category;
            match e.classify() {
                Category::Data => ConfigError::Schema(e.to_string()),
                _ => ConfigError::Parse {
                    line: e.line(),
                    column: e.column(),
                    message: e.to_string(),
                },
            }
        })?;
        config.testbed.prototype = config.fold;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.version != CONFIG_VERSION {
            return Err(ConfigError::Invariant {
                field: "version".into(),
                rule: format!("unsupported version {} (expected {CONFIG_VERSION})", self.version),
            });
        }
        self.fold.validate().map_err(|e| invariant("fold", e))?;
        self.actuator.validate().map_err(|e| invariant("actuator", e))?;
        self.testbed.validate().map_err(|e| invariant("testbed", e))?;
        self.load_case.validate().map_err(|e| invariant("load_case", e))
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("config serializes");
        text.push('\n');
        text
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_document_gives_prototype() {
        let c = SystemConfig::from_json("{}").unwrap();
        assert_eq!(c, SystemConfig::default());
        assert_eq!((c.fold.n, c.fold.m, c.fold.p, c.fold.beta), (4, 3, 22.0, 70.0));
        assert_eq!(c.actuator.wheel_diameter, 40.0);
        assert_eq!(c.fold.theta_neutral, 130.0);
    }

    #[test]
    fn beta_out_of_range() {
        match SystemConfig::from_json(r#"{"fold":{"beta":95}}"#) {
            Err(ConfigError::Invariant { field, .. }) => assert_eq!(field, "fold.beta"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_keys_rejected() {
        match SystemConfig::from_json(r#"{"fold":{"x":22}}"#) {
            Err(ConfigError::Schema(msg)) => assert!(msg.contains("unknown field `x`"), "{msg}"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            SystemConfig::from_json(r#"{"extra":1}"#),
            Err(ConfigError::Schema(_))
        ));
        assert!(matches!(
            SystemConfig::from_json(r#"{"testbed":{"prototype":{}}}"#),
            Err(ConfigError::Schema(_))
        ));
    }

    #[test]
    fn syntax_errors_carry_position() {
        match SystemConfig::from_json("{\n  \"fold\": {\"p\": 22,,}\n}") {
            Err(ConfigError::Parse { line, column, .. }) => {
                assert_eq!(line, 2);
                assert!(column > 0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn round_trip() {
        let c = SystemConfig::from_json(r#"{"fold":{"p":22}}"#).unwrap();
        let again = SystemConfig::from_json(&c.to_json()).unwrap();
        assert_eq!(c, again);
        assert_eq!(c.to_json(), again.to_json());
    }

    #[test]
    fn testbed_follows_fold() {
        let c = SystemConfig::from_json(r#"{"fold":{"p":30,"n":5}}"#).unwrap();
        assert_eq!(c.testbed.prototype, c.fold);
    }

    #[test]
    fn other_invariants_are_named() {
        let bad = r#"{"actuator":{"calibration":[{"servo_deg":0,"theta_deg":130},{"servo_deg":60,"theta_deg":140}]}}"#;
        match SystemConfig::from_json(bad) {
            Err(ConfigError::Invariant { field, .. }) => assert_eq!(field, "actuator.calibration"),
            other => panic!("{other:?}"),
        }
        assert!(SystemConfig::from_json(r#"{"version":2}"#).is_err());
        assert!(SystemConfig::from_json(r#"{"load_case":{"gravity":0}}"#).is_err());
    }
}
