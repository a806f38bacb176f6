//! `orifold` command line. Data goes to stdout (or `-o`), diagnostics to
//! stderr. Exit status: 0 success, 1 domain/config/io error, 2 usage error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use orifold::actuation::{ActuationCommand, MappingMode};
use orifold::fold;
use orifold::force::{self, LoadCase};
use orifold::io::{self, ActuationRow, ConfigError, SystemConfig};
use orifold::testbed;

#[derive(Parser)]
#[command(name = "orifold", version, about = "Miura-Ori haptic structure simulator")]
struct Cli {
    /// JSON system configuration. Defaults describe the 3x4 prototype.
    #[arg(long, global = true, env = "ORIFOLD_CONFIG")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Overall dimensions at one fold angle.
    Dims {
        /// Fold angle, degrees. Defaults to the neutral angle.
        #[arg(long)]
        theta: Option<f64>,
    },
    /// Dimension table over a theta grid for several sector angles.
    Sweep {
        #[arg(long, default_value_t = 90.0)]
        theta_min: f64,
        #[arg(long, default_value_t = 180.0)]
        theta_max: f64,
        #[arg(long, default_value_t = 1.0)]
        step: f64,
        /// Comma-separated sector angles, degrees.
        #[arg(long, value_delimiter = ',', default_value = "45,60,70")]
        betas: Vec<f64>,
    },
    /// Vertical force of one half-unit in static equilibrium.
    Force {
        #[arg(long)]
        theta: Option<f64>,
        /// Lateral cable force, N.
        #[arg(long)]
        fl: Option<f64>,
        #[arg(long)]
        mu: Option<f64>,
        /// Beam mass, kg.
        #[arg(long)]
        mass: Option<f64>,
        /// External load on the beam, N.
        #[arg(long)]
        load: Option<f64>,
    },
    /// Fold angle, timing and power for servo commands.
    Actuate {
        /// Servo angle, degrees. Repeat or comma-separate for several.
        #[arg(long, value_delimiter = ',', required = true)]
        servo: Vec<f64>,
        #[arg(long, default_value_t = MappingMode::Calibrated)]
        mode: MappingMode,
        /// Supply voltage. Defaults to the actuator reference voltage.
        #[arg(long)]
        voltage: Option<f64>,
    },
    /// Simulated contact forces at every sensor location.
    Testbed {
        #[arg(long, value_delimiter = ',', default_value = "0,30,60,90,120")]
        angles: Vec<f64>,
    },
    /// Folded mesh as OBJ.
    Mesh {
        #[arg(long)]
        theta: Option<f64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Flat crease pattern as SVG.
    Crease {
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Runs the standard experiments and writes a text report.
    Report {
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

enum Failure {
    Domain(orifold::Error),
    Config(ConfigError),
    Io(String),
}

impl From<orifold::Error> for Failure {
    fn from(e: orifold::Error) -> Self {
        Failure::Domain(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Domain(e) => write!(f, "error[domain]: {e}"),
            Failure::Config(e) => write!(f, "error[config]: {e}"),
            Failure::Io(e) => write!(f, "error[io]: {e}"),
        }
    }
}

fn load_config(path: Option<&Path>) -> Result<SystemConfig, Failure> {
    let Some(path) = path else {
        return Ok(SystemConfig::default());
    };
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    SystemConfig::from_json(&text).map_err(Failure::Config)
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let config = load_config(cli.config.as_deref())?;
    let params = config.fold;
    match cli.command {
        Command::Dims { theta } => {
            let theta = theta.unwrap_or(params.theta_neutral);
            emit(&io::write_dims_csv(theta, &fold::dimensions(&params, theta)?), None)
        }
        Command::Sweep {
            theta_min,
            theta_max,
            step,
            betas,
        } => {
            let table = fold::sweep(&params, theta_min, theta_max, step, &betas)?;
            emit(&io::write_sweep_csv(&table), None)
        }
        Command::Force {
            theta,
            fl,
            mu,
            mass,
            load,
        } => {
            let base = config.load_case;
            let case = LoadCase {
                lateral_force: fl.unwrap_or(base.lateral_force),
                mu: mu.unwrap_or(base.mu),
                beam_mass: mass.unwrap_or(base.beam_mass),
                load_n: load.unwrap_or(base.load_n),
                ..base
            };
            let theta = theta.unwrap_or(params.theta_neutral);
            let result = force::vertical_force(&case, &params, theta)?;
            emit(&io::write_force_csv(theta, &case, &result), None)
        }
        Command::Actuate { servo, mode, voltage } => {
            let voltage = voltage.unwrap_or(config.actuator.reference_voltage);
            let rows = servo
                .into_iter()
                .map(|servo_deg| {
                    ActuationRow::evaluate(&config.actuator, &params, ActuationCommand { servo_deg, voltage }, mode)
                })
                .collect::<orifold::Result<Vec<_>>>()?;
            emit(&io::write_actuation_csv(&rows), None)
        }
        Command::Testbed { angles } => {
            let entries = testbed::simulate_testbed(&config.testbed, &config.actuator, &angles)?;
            emit(
                &io::write_testbed_csv(&entries, &config.testbed.contact_locations),
                None,
            )
        }
        Command::Mesh { theta, output } => {
            let theta = theta.unwrap_or(params.theta_neutral);
            emit(
                &io::write_mesh_obj(&fold::folded_mesh(&params, theta)?),
                output.as_deref(),
            )
        }
        Command::Crease { output } => emit(
            &io::write_crease_svg(&fold::crease_pattern(&params)?),
            output.as_deref(),
        ),
        Command::Report { output } => emit(&io::write_report(&io::run_experiments(&config)?), output.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let text = failure.to_string();
            eprintln!("{}", text.replace('\n', " "));
            ExitCode::from(1)
        }
    }
}
