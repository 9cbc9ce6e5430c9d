//! Closed-form moduli and capacities with known exact expressions.

use std::f64::consts::{FRAC_2_PI, PI};

use super::elliptic::{ellip_e, ellip_k, mu, mu_inv};
use super::hypergeometric::{beta, gauss_2f1};
use crate::error::{domain, CapError, Result};
use crate::roots;
use crate::C64;

/// Capacity of the ring condenser (B², {|z| ≤ a}).
pub fn ring_cap(a: f64) -> Result<f64> {
    if !(a > 0.0 && a < 1.0) {
        return domain(format!("ring radius must lie in (0, 1), got {a}"));
    }
    Ok(2.0 * PI / (1.0 / a).ln())
}

/// Modulus of the convex quadrilateral with vertices 0, 1, A, B and interior
/// angles bπ, (c−b)π, (1−a)π, (1+a−c)π.
///
/// The complex equation for r is split: the magnitude equation is solved by
/// bracketed root finding, and the argument of A − 1 is checked against
/// (b + 1 − c)π afterwards.
pub fn convex_quad_modulus(a: f64, b: f64, c: f64, big_a: C64) -> Result<f64> {
    const SLACK: f64 = 1e-12;
    if !(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0) {
        return domain(format!("need 0 < a, b < 1, got a = {a}, b = {b}"));
    }
    if c < (a + b).max(1.0) - SLACK || c > 1.0 + a.min(b) + SLACK {
        return domain(format!("c = {c} outside [max(a+b,1), 1+min(a,b)]"));
    }
    let expected_arg = (b + 1.0 - c) * PI;
    let actual_arg = (big_a - 1.0).arg();
    let mut diff = (actual_arg - expected_arg) % (2.0 * PI);
    if diff > PI {
        diff -= 2.0 * PI;
    } else if diff < -PI {
        diff += 2.0 * PI;
    }
    if diff.abs() > 1e-8 {
        return domain(format!(
            "arg(A − 1) = {actual_arg} does not match the angle data ({expected_arg})"
        ));
    }
    let l_abs = beta(c - b, 1.0 - a)? / beta(b, c - b)?;
    let target = ((big_a - 1.0).norm() / l_abs).ln();
    let s = c - a - b;
    let log_g = |r: f64| -> f64 {
        let r2 = r * r;
        let y = (1.0 - r) * (1.0 + r);
        let num = gauss_2f1(c - a, c - b, c + 1.0 - a - b, y);
        let den = gauss_2f1(a, b, c, r2);
        match (num, den) {
            (Ok(n), Ok(d)) => s * y.ln() + n.ln() - d.ln(),
            _ => f64::NAN,
        }
    };
    let r = roots::bracketed(|r| (log_g(r) - target, None), 1e-6, 1.0 - 1e-9).map_err(|e| {
        CapError::Numerical(format!("convex quadrilateral: no feasible r in (0,1): {e}"))
    })?;
    Ok(FRAC_2_PI * mu(r)?)
}

/// Modulus of the convex quadrilateral (G; z₁, z₂, z₃, z₄) given its vertices in
/// counterclockwise order.
///
/// The closed form needs the angle sums at the first two vertex pairs to be at
/// least π; a cyclic relabelling always achieves this, and an odd shift
/// inverts the modulus.
pub fn convex_quad_modulus_from_vertices(z: [C64; 4]) -> Result<f64> {
    let mut angles = [0.0; 4];
    for k in 0..4 {
        let prev = z[(k + 3) % 4] - z[k];
        let next = z[(k + 1) % 4] - z[k];
        if prev.norm() == 0.0 || next.norm() == 0.0 {
            return domain("repeated quadrilateral vertex");
        }
        let ang = (prev / next).arg();
        if !(ang > 0.0 && ang < PI) {
            return domain("vertices must form a convex counterclockwise quadrilateral");
        }
        angles[k] = ang / PI;
    }
    let tol = 1e-12;
    let shift = (0..4)
        .find(|&s| {
            angles[s] + angles[(s + 1) % 4] >= 1.0 - tol
                && angles[(s + 1) % 4] + angles[(s + 2) % 4] >= 1.0 - tol
        })
        .ok_or_else(|| CapError::Numerical("no admissible vertex labelling".into()))?;
    let w: Vec<C64> = (0..4).map(|j| z[(j + shift) % 4]).collect();
    let beta0 = angles[shift];
    let beta1 = angles[(shift + 1) % 4];
    let beta2 = angles[(shift + 2) % 4];
    let to_unit = |p: C64| (p - w[0]) / (w[1] - w[0]);
    let (a, b) = (1.0 - beta2, beta0);
    let c = (beta0 + beta1).min(1.0 + a.min(b));
    let h = convex_quad_modulus(a, b, c, to_unit(w[2]))?;
    Ok(if shift % 2 == 1 { 1.0 / h } else { h })
}

/// The Duren–Pfaltzgraff function ψ(r) = 2(ℰ(r) − (1−r)𝒦(r)) / (ℰ(r′) − r𝒦(r′)).
pub fn psi_duren_pfaltzgraff(r: f64) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return domain(format!("psi needs 0 < r < 1, got {r}"));
    }
    let rp = ((1.0 - r) * (1.0 + r)).sqrt();
    let num = 2.0 * (ellip_e(r)? - (1.0 - r) * ellip_k(r)?);
    let den = ellip_e(rp)? - r * ellip_k(rp)?;
    Ok(num / den)
}

/// Exterior modulus of the rectangle with vertices 1, 0, ik, 1 + ik.
pub fn exterior_rect_modulus(k: f64) -> Result<f64> {
    if !(k > 0.0) || !k.is_finite() {
        return domain(format!("rectangle height must be positive, got {k}"));
    }
    let target = (1.0 / k).ln();
    let f = |r: f64| {
        let v = psi_duren_pfaltzgraff(r).map(f64::ln).unwrap_or(f64::NAN);
        (v - target, None)
    };
    let r = roots::bracketed(f, 1e-6, 1.0 - 1e-6)
        .map_err(|e| CapError::Numerical(format!("psi inverse failed for k = {k}: {e}")))?;
    Ok(mu(r)? / PI)
}

/// Exact modulus of the trapezoid with vertices 0, 1, 1 + iL, i(L − 1).
pub fn trapezoid_modulus_exact(l: f64) -> Result<f64> {
    if !(l > 1.0) || !l.is_finite() {
        return domain(format!("trapezoid needs L > 1, got {l}"));
    }
    let lambda = mu_inv(PI / (2.0 * (2.0 * l - 1.0)))?;
    let lambda_p = ((1.0 - lambda) * (1.0 + lambda)).sqrt();
    let t = 2.0 * lambda * lambda_p;
    let k = (1.0 - t) / (1.0 + t);
    Ok(PI / (2.0 * mu(k)?))
}

/// Exact capacity of the condenser ((−1,1)², [−a,a]²).
pub fn square_in_square_cap_exact(a: f64) -> Result<f64> {
    if !(a > 0.0 && a < 1.0) {
        return domain(format!("square half-width must lie in (0, 1), got {a}"));
    }
    let c = (1.0 - a) / (1.0 + a);
    let u = mu_inv(PI * c / 2.0)?;
    let v = mu_inv(PI / (2.0 * c))?;
    let ratio = v / u;
    Ok(4.0 / PI * mu(ratio * ratio)?)
}

/// Radius of the circle through −a, is and a.
pub fn lens_arc_radius(a: f64, s: f64) -> Result<f64> {
    if !(a > 0.0 && s > 0.0 && s <= a) {
        return domain(format!("lens needs 0 < s <= a, got a = {a}, s = {s}"));
    }
    Ok((s * s + a * a) / (2.0 * s))
}

/// Approximate capacity of the lens-shaped plate condenser in the unit disk.
pub fn lens_cap_estimate(a: f64, s: f64, r: f64) -> Result<f64> {
    if !(a > 0.0 && a < 1.0) || !(s >= 0.0 && s <= a) || !(r > 0.0) {
        return domain(format!("invalid lens parameters a = {a}, s = {s}, r = {r}"));
    }
    let theta = (a / (r - s)).atan();
    let arg = 2.0 * (PI - theta) / (PI * a);
    if !(arg > 1.0) {
        return domain(format!("lens estimate undefined: log argument {arg} <= 1"));
    }
    Ok(2.0 * PI / arg.ln())
}
