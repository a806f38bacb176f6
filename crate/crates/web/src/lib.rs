//! Browser bindings for the orifold simulator.
//!
//! Each exported function takes plain numbers, returns JSON or SVG text, and
//! reports domain errors as a thrown `Error`. The `*_json` functions below
//! hold the logic so it can be tested without a browser.

use orifold::actuation::ActuatorConfig;
use orifold::fold::{self, FoldParams};
use orifold::testbed::{self, TestbedConfig};
use serde::Serialize;
use wasm_bindgen::prelude::*;

fn params(p: f64, beta: f64, n: u32, m: u32) -> FoldParams {
    FoldParams {
        p,
        beta,
        n,
        m,
        ..Default::default()
    }
}

#[derive(Serialize)]
struct FoldState {
    theta: f64,
    phi: f64,
    h: f64,
    l: f64,
    w: f64,
    vertices: Vec<[f64; 3]>,
    faces: Vec<[usize; 4]>,
}

/// Dimensions and folded mesh at `theta`.
pub fn fold_state_json(p: f64, beta: f64, n: u32, m: u32, theta: f64) -> Result<String, String> {
    let params = params(p, beta, n, m);
    let dims = fold::dimensions(&params, theta).map_err(|e| e.to_string())?;
    let mesh = fold::folded_mesh(&params, theta).map_err(|e| e.to_string())?;
    let state = FoldState {
        theta,
        phi: dims.phi,
        h: dims.h,
        l: dims.l,
        w: dims.w,
        vertices: mesh.vertices,
        faces: mesh.faces,
    };
    serde_json::to_string(&state).map_err(|e| e.to_string())
}

pub fn crease_svg_text(p: f64, beta: f64, n: u32, m: u32) -> Result<String, String> {
    let pattern = fold::crease_pattern(&params(p, beta, n, m)).map_err(|e| e.to_string())?;
    Ok(orifold::io::write_crease_svg(&pattern))
}

#[derive(Serialize)]
struct TestbedRow {
    servo: f64,
    theta: f64,
    height: Option<f64>,
    /// Per-location forces in sensor order, absent when singular.
    forces: Option<Vec<f64>>,
    connected: Vec<bool>,
    error: Option<String>,
}

/// Contact forces for the default prototype with the given plate mass.
pub fn testbed_json(plate_mass_kg: f64, servo_angles: &[f64]) -> Result<String, String> {
    let config = TestbedConfig {
        plate_mass_kg,
        ..Default::default()
    };
    let connected: Vec<bool> = config.contact_locations.iter().map(|l| l.cable_connected).collect();
    let entries =
        testbed::simulate_testbed(&config, &ActuatorConfig::default(), servo_angles).map_err(|e| e.to_string())?;
    let rows: Vec<TestbedRow> = entries
        .into_iter()
        .map(|e| match e.outcome {
            Ok(map) => TestbedRow {
                servo: e.servo_deg,
                theta: e.theta_deg,
                height: Some(map.height_mm),
                forces: Some(map.locations.iter().map(|l| l.force_n).collect()),
                connected: connected.clone(),
                error: None,
            },
            Err(err) => TestbedRow {
                servo: e.servo_deg,
                theta: e.theta_deg,
                height: None,
                forces: None,
                connected: connected.clone(),
                error: Some(err.to_string()),
            },
        })
        .collect();
    serde_json::to_string(&rows).map_err(|e| e.to_string())
}

#[wasm_bindgen(js_name = foldState)]
pub fn fold_state(p: f64, beta: f64, n: u32, m: u32, theta: f64) -> Result<String, JsError> {
    fold_state_json(p, beta, n, m, theta).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = creaseSvg)]
pub fn crease_svg(p: f64, beta: f64, n: u32, m: u32) -> Result<String, JsError> {
    crease_svg_text(p, beta, n, m).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = testbedForces)]
pub fn testbed_forces(plate_mass_kg: f64, servo_angles: Vec<f64>) -> Result<String, JsError> {
    testbed_json(plate_mass_kg, &servo_angles).map_err(|e| JsError::new(&e))
}
