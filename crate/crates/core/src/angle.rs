//! Degree-based trigonometry.
//!
//! Cosines are evaluated as `sin(90° - x)` so that the flat state (`x = 90°`)
//! yields an exact zero instead of `6.1e-17`.

pub(crate) fn sin_deg(x: f64) -> f64 {
    x.to_radians().sin()
}

pub(crate) fn cos_deg(x: f64) -> f64 {
    (90.0 - x).to_radians().sin()
}

pub(crate) fn acos_deg(x: f64) -> f64 {
    x.clamp(-1.0, 1.0).acos().to_degrees()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cos_is_exact_at_right_angle() {
        assert_eq!(cos_deg(90.0), 0.0);
        assert_eq!(sin_deg(90.0), 1.0);
        assert!((cos_deg(60.0) - 0.5).abs() < 1e-15);
    }
}
