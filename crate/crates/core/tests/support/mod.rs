//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use nalgebra::{Matrix3, Vector3};

/// Solves the three balance equations directly for `(N, R_a, R_b)` with
/// `F_a = mu R_a` substituted. Lever arms in mm.
pub fn equilibrium_direct(mass: f64, mu: f64, lateral: f64, gravity: f64, p: f64, theta_deg: f64) -> Option<[f64; 3]> {
    let half = (theta_deg / 2.0).to_radians();
    let (h, q) = (p * half.cos(), p * half.sin());
    let mg = mass * gravity;
    // rows: sum Fx, sum Fy, sum M; columns: N, R_a, R_b
    let a = Matrix3::new(
        0.0, mu, -1.0, //
        -1.0, 1.0, 0.0, //
        q, 0.0, -h,
    );
    let b = Vector3::new(-lateral, mg, -lateral * h / 2.0 - mg * q / 2.0);
    a.lu().solve(&b).map(|x| [x[0], x[1], x[2]])
}

/// Closed-form inverse of the geometric contraction relation.
pub fn geometric_theta_closed_form(n_active: u32, p: f64, theta_neutral: f64, displacement: f64) -> f64 {
    let s = (theta_neutral / 2.0).to_radians().sin() - displacement / (n_active as f64 * 2.0 * p);
    2.0 * s.asin().to_degrees()
}

pub fn rel_close(actual: f64, expected: f64, tol: f64) -> bool {
    (actual - expected).abs() <= tol * expected.abs().max(f64::MIN_POSITIVE) || actual == expected
}
