mod support;

use orifold::actuation::{self, ActuatorConfig, MappingMode};
use orifold::fold::{self, FoldParams};
use orifold::force::{self, LoadCase};
use orifold::io::SystemConfig;
use orifold::testbed::{self, TestbedConfig};
use proptest::prelude::*;
use support::{equilibrium_direct, geometric_theta_closed_form, rel_close};

fn fold_params() -> impl Strategy<Value = FoldParams> {
    (1.0..100.0f64, 1.0..89.0f64, 1u32..8, 1u32..8, 10.0..=180.0f64).prop_map(|(p, beta, n, m, theta_neutral)| {
        FoldParams {
            p,
            beta,
            n,
            m,
            theta_neutral,
        }
    })
}

fn load_case() -> impl Strategy<Value = LoadCase> {
    (0.0..0.5f64, 0.0..1.5f64, 0.0..20.0f64).prop_map(|(beam_mass, mu, lateral_force)| LoadCase {
        beam_mass,
        mu,
        lateral_force,
        ..Default::default()
    })
}

fn away_from_singularity(mu: f64, theta: f64) -> bool {
    ((theta / 2.0).to_radians().tan() - mu).abs() > 1e-2
}

proptest! {
    #[test]
    fn height_decreases_and_phi_is_bounded(params in fold_params(), a in 1.0..179.0f64, gap in 0.01..10.0f64) {
        let b = (a + gap).min(180.0);
        let da = fold::dimensions(&params, a).unwrap();
        let db = fold::dimensions(&params, b).unwrap();
        prop_assert!(db.h < da.h);
        prop_assert!(db.phi < da.phi);
        prop_assert!(db.l > da.l);
        for d in [da, db] {
            prop_assert!(d.phi >= 2.0 * params.beta - 1e-9 && d.phi <= 180.0);
            prop_assert!(d.h >= 0.0 && d.l >= 0.0 && d.w >= 0.0);
        }
    }

    #[test]
    fn dimension_invariances(params in fold_params(), theta in 1.0..=180.0f64, beta in 1.0..89.0f64, n in 1u32..9, m in 1u32..9) {
        let base = fold::dimensions(&params, theta).unwrap();
        let other_beta = fold::dimensions(&FoldParams { beta, n, m, ..params }, theta).unwrap();
        prop_assert_eq!(base.h, other_beta.h);
        let other_m = fold::dimensions(&FoldParams { m, ..params }, theta).unwrap();
        prop_assert_eq!(base.l, other_m.l);
        let other_n = fold::dimensions(&FoldParams { n, ..params }, theta).unwrap();
        prop_assert_eq!(base.w, other_n.w);
    }

    #[test]
    fn height_round_trip(params in fold_params(), theta in 0.5..179.5f64) {
        let h = fold::dimensions(&params, theta).unwrap().h;
        let back = fold::theta_from_height(&params, h).unwrap();
        prop_assert!((back - theta).abs() < 1e-9, "{} vs {}", back, theta);
        let again = fold::dimensions(&params, back).unwrap().h;
        prop_assert!(rel_close(again, h, 1e-9));
    }

    #[test]
    fn mesh_box_matches_dimensions(params in fold_params(), theta in 0.5..=180.0f64) {
        let d = fold::dimensions(&params, theta).unwrap();
        let e = fold::folded_mesh(&params, theta).unwrap().bounding_box().extents();
        prop_assert!(rel_close(e[0], d.l, 1e-6));
        prop_assert!(rel_close(e[1], d.w, 1e-6));
        prop_assert!(rel_close(e[2], d.h, 1e-6));
    }

    #[test]
    fn vertical_force_matches_direct_solve(case in load_case(), theta in 1.0..=179.0f64) {
        prop_assume!(away_from_singularity(case.mu, theta));
        let params = FoldParams::default();
        let r = force::vertical_force(&case, &params, theta).unwrap();
        let [n, ra, rb] = equilibrium_direct(case.beam_mass, case.mu, case.lateral_force, case.gravity, params.p, theta).unwrap();
        prop_assert!(rel_close(r.vertical_force, n, 1e-9) || (r.vertical_force - n).abs() < 1e-12);
        prop_assert!((r.reactions.base_normal - ra).abs() <= 1e-9 * ra.abs().max(1.0));
        prop_assert!((r.reactions.wall - rb).abs() <= 1e-9 * rb.abs().max(1.0));
        prop_assert_eq!(r.reactions.base_friction, case.mu * r.reactions.base_normal);
        let res = force::residuals(&case, &r.geometry, r.vertical_force, &r.reactions);
        prop_assert!(res.max_abs() < 1e-9 * (1.0 + n.abs()) * params.p, "{:?}", res);
    }

    #[test]
    fn vertical_force_increases_with_lateral_force(case in load_case(), theta in 1.0..=179.0f64, extra in 0.01..5.0f64) {
        prop_assume!((theta / 2.0).to_radians().tan() > case.mu + 1e-2);
        let params = FoldParams::default();
        let a = force::vertical_force(&case, &params, theta).unwrap().vertical_force;
        let bigger = LoadCase { lateral_force: case.lateral_force + extra, ..case };
        let b = force::vertical_force(&bigger, &params, theta).unwrap().vertical_force;
        prop_assert!(b > a);
    }

    #[test]
    fn lateral_force_round_trip(case in load_case(), theta in 1.0..179.0f64) {
        prop_assume!(away_from_singularity(case.mu, theta));
        let params = FoldParams::default();
        let r = force::vertical_force(&case, &params, theta).unwrap();
        prop_assume!(r.vertical_force >= 0.0);
        match force::lateral_force_for_target(&case, theta, r.vertical_force) {
            Ok(f) => prop_assert!((f - case.lateral_force).abs() <= 1e-9 * case.lateral_force.max(1.0), "{} vs {}", f, case.lateral_force),
            Err(orifold::Error::NoTensionNeeded { required_n }) => prop_assert!(required_n > -1e-9),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn displacement_is_linear(servo in 0.0..=180.0f64, d in 1.0..100.0f64, k in 0.1..1.0f64) {
        let c = ActuatorConfig { wheel_diameter: d, ..Default::default() };
        let c2 = ActuatorConfig { wheel_diameter: 2.0 * d, ..Default::default() };
        let full = actuation::cable_displacement(&c, servo).unwrap();
        prop_assert!(rel_close(actuation::cable_displacement(&c2, servo).unwrap(), 2.0 * full, 1e-12));
        prop_assert!(rel_close(actuation::cable_displacement(&c, k * servo).unwrap(), k * full, 1e-12));
    }

    #[test]
    fn servo_mapping_is_monotone(a in 0.0..=180.0f64, b in 0.0..=180.0f64, n_active in 2u32..6) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let config = ActuatorConfig { n_active, ..Default::default() };
        let params = FoldParams::default();
        for mode in [MappingMode::Calibrated, MappingMode::Geometric] {
            let t_lo = actuation::theta_from_servo(&config, &params, lo, mode).unwrap().theta_deg;
            let t_hi = actuation::theta_from_servo(&config, &params, hi, mode).unwrap().theta_deg;
            prop_assert!(t_hi <= t_lo + 1e-9);
        }
    }

    #[test]
    fn geometric_bisection_matches_closed_form(servo in 0.0..=180.0f64, n_active in 3u32..6, p in 15.0..40.0f64) {
        let config = ActuatorConfig { n_active, ..Default::default() };
        let params = FoldParams { p, ..Default::default() };
        let displacement = actuation::cable_displacement(&config, servo).unwrap();
        let theta = actuation::theta_from_servo(&config, &params, servo, MappingMode::Geometric).unwrap().theta_deg;
        let reference = geometric_theta_closed_form(n_active, p, params.theta_neutral, displacement);
        prop_assert!((theta - reference).abs() < 1e-6, "{} vs {}", theta, reference);
    }

    #[test]
    fn servo_theta_round_trips(servo in 0.0..=180.0f64, n_active in 2u32..6) {
        let config = ActuatorConfig { n_active, ..Default::default() };
        let params = FoldParams::default();
        for mode in [MappingMode::Calibrated, MappingMode::Geometric] {
            let theta = actuation::theta_from_servo(&config, &params, servo, mode).unwrap().theta_deg;
            let back = actuation::servo_for_theta(&config, &params, theta, mode).unwrap();
            let theta_again = actuation::theta_from_servo(&config, &params, back, mode).unwrap().theta_deg;
            prop_assert!((theta_again - theta).abs() < 1e-6, "{mode}: {} vs {}", theta_again, theta);
        }
    }

    #[test]
    fn testbed_even_distribution_and_conservation(servo in 0.0..=150.0f64, plate in 0.1..3.0f64, gain in 0.0..0.1f64) {
        let config = TestbedConfig { plate_mass_kg: plate, cable_tension_per_mm: gain, ..Default::default() };
        let entry = testbed::simulate_testbed(&config, &ActuatorConfig::default(), &[servo]).unwrap().remove(0);
        let map = entry.outcome.unwrap();
        prop_assume!(map.unit_force_n >= 0.0);
        let first = map.locations[0];
        for l in &map.locations {
            prop_assert_eq!(l.force_n / first.force_n, l.area_factor / first.area_factor);
        }
        let recovered: f64 = map.locations.iter().map(|l| l.force_n / l.area_factor).sum();
        let expected = config.plate_weight() + map.locations.len() as f64 * map.actuation_force_n;
        prop_assert!(rel_close(recovered, expected, 1e-9), "{} vs {}", recovered, expected);
    }

    #[test]
    fn config_round_trip(p in 5.0..50.0f64, beta in 1.0..89.0f64, n in 1u32..9, m in 1u32..9, mass in 0.0..5.0f64, gain in 0.0..1.0f64) {
        let mut config = SystemConfig::default();
        config.fold = FoldParams { p, beta, n, m, ..config.fold };
        config.testbed.prototype = config.fold;
        config.testbed.plate_mass_kg = mass;
        config.testbed.cable_tension_per_mm = gain;
        config.testbed.contact_locations.retain(|l| l.unit < n * m);
        prop_assume!(!config.testbed.contact_locations.is_empty());
        let parsed = SystemConfig::from_json(&config.to_json()).unwrap();
        prop_assert_eq!(&parsed, &config);
    }
}

#[test]
fn total_plate_force_grows_past_sixty_degrees() {
    let angles: Vec<f64> = (60..=165).map(f64::from).collect();
    let entries = testbed::simulate_testbed(&TestbedConfig::default(), &ActuatorConfig::default(), &angles).unwrap();
    let totals: Vec<f64> = entries
        .iter()
        .map(|e| e.outcome.as_ref().unwrap().total_force())
        .collect();
    for w in totals.windows(2) {
        assert!(w[1] >= w[0], "{w:?}");
    }
}

#[test]
fn level_schedule_is_a_bijection() {
    let commands = testbed::intensity_schedule(&[1, 2, 3, 4]).unwrap();
    let angles: Vec<f64> = commands.iter().map(|c| c.servo_deg).collect();
    assert_eq!(angles, vec![40.0, 80.0, 120.0, 160.0]);
    for (level, angle) in [1u8, 2, 3, 4].into_iter().zip(angles) {
        assert_eq!(angle / testbed::LEVEL_STEP_DEG, level as f64);
    }
}

#[test]
fn massless_frictionless_limit() {
    let params = FoldParams::default();
    for theta in [30.0, 75.0, 100.0, 150.0] {
        let cot = 1.0 / (theta / 2.0f64).to_radians().tan();
        let mut last_err = f64::INFINITY;
        for mass in [1e-1, 1e-3, 1e-5, 0.0] {
            let case = LoadCase {
                beam_mass: mass,
                mu: 0.0,
                lateral_force: 4.0,
                ..Default::default()
            };
            let n = force::vertical_force(&case, &params, theta).unwrap().vertical_force;
            let err = (n - 2.0 * cot).abs();
            assert!(err <= last_err);
            last_err = err;
        }
        assert!(last_err < 1e-12);
    }
}
