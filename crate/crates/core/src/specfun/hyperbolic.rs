use crate::error::{domain, Result};
use crate::C64;

fn one_minus_sq(a: C64) -> f64 {
    let r = a.norm();
    (1.0 - r) * (1.0 + r)
}

/// Hyperbolic distance in the unit disk, ρ(a,b) = 2 arsinh(|a−b| / √((1−|a|²)(1−|b|²))).
pub fn hyp_dist_ball(a: C64, b: C64) -> Result<f64> {
    if !(a.norm() < 1.0 && b.norm() < 1.0) {
        return domain(format!("hyp_dist_ball needs points in the open unit disk, got {a}, {b}"));
    }
    let d = (a - b).norm() / (one_minus_sq(a) * one_minus_sq(b)).sqrt();
    Ok(2.0 * d.asinh())
}

/// Euclidean center and radius of the hyperbolic disk of radius `big_r` about `x`.
pub fn hyp_disk_euclidean(x: C64, big_r: f64) -> Result<(C64, f64)> {
    if !(x.norm() < 1.0) {
        return domain(format!("center {x} is not in the unit disk"));
    }
    if !(big_r > 0.0) || !big_r.is_finite() {
        return domain(format!("hyperbolic radius must be positive, got {big_r}"));
    }
    let t = (0.5 * big_r).tanh();
    let s = x.norm_sqr();
    let denom = 1.0 - s * t * t;
    let center = x * ((1.0 - t) * (1.0 + t) / denom);
    let radius = one_minus_sq(x) * t / denom;
    Ok((center, radius))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_values() {
        assert_eq!(hyp_dist_ball(C64::new(0.0, 0.0), C64::new(0.0, 0.0)).unwrap(), 0.0);
        let d = hyp_dist_ball(C64::new(0.0, 0.0), C64::new(0.5, 0.0)).unwrap();
        assert!((d - 3f64.ln()).abs() < 1e-15);
        assert!(hyp_dist_ball(C64::new(1.0, 0.0), C64::new(0.0, 0.0)).is_err());
    }

    #[test]
    fn rotation_invariance() {
        let a = C64::new(0.3, -0.4);
        let b = C64::new(-0.2, 0.65);
        let rot = C64::from_polar(1.0, 1.3);
        let d1 = hyp_dist_ball(a, b).unwrap();
        let d2 = hyp_dist_ball(rot * a, rot * b).unwrap();
        assert!((d1 - d2).abs() < 1e-14);
    }

    #[test]
    fn disk_points_at_distance_r() {
        let x = C64::new(0.3, 0.0);
        let (c, r) = hyp_disk_euclidean(x, 1.0).unwrap();
        for k in 0..64 {
            let w = c + C64::from_polar(r, k as f64 * std::f64::consts::TAU / 64.0);
            assert!((hyp_dist_ball(x, w).unwrap() - 1.0).abs() < 1e-12);
        }
        let (c0, r0) = hyp_disk_euclidean(C64::new(0.0, 0.0), 2.0).unwrap();
        assert_eq!(c0, C64::new(0.0, 0.0));
        assert!((r0 - 1f64.tanh()).abs() < 1e-16);
        let (_, tiny) = hyp_disk_euclidean(x, 1e-8).unwrap();
        assert!(tiny < 1e-8);
    }
}
