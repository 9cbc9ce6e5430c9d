use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{domain, Result};
use crate::roots;

const MAX_AGM_STEPS: usize = 64;

/// Arithmetic-geometric mean of two positive numbers.
pub fn agm(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) || !a.is_finite() || !b.is_finite() {
        return domain(format!("agm needs positive finite arguments, got ({a}, {b})"));
    }
    let (mut a, mut b) = (a, b);
    for _ in 0..MAX_AGM_STEPS {
        if (a - b).abs() <= 4.0 * f64::EPSILON * a {
            break;
        }
        let an = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = an;
    }
    Ok(a)
}

fn complement(r: f64) -> f64 {
    ((1.0 - r) * (1.0 + r)).sqrt()
}

/// Complete elliptic integral of the first kind 𝒦(r), modulus convention.
pub fn ellip_k(r: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return domain(format!("ellip_k needs 0 <= r < 1, got {r}"));
    }
    Ok(PI / (2.0 * agm(1.0, complement(r))?))
}

/// Complete elliptic integral of the second kind ℰ(r) via the AGM companion sum.
pub fn ellip_e(r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&r) {
        return domain(format!("ellip_e needs 0 <= r <= 1, got {r}"));
    }
    if r == 1.0 {
        return Ok(1.0);
    }
    let mut a = 1.0;
    let mut b = complement(r);
    let mut weight = 0.5;
    let mut sum = weight * r * r;
    for _ in 0..MAX_AGM_STEPS {
        let c = 0.5 * (a - b);
        let an = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = an;
        weight *= 2.0;
        sum += weight * c * c;
        if c.abs() <= 4.0 * f64::EPSILON * a {
            break;
        }
    }
    Ok(PI / (2.0 * a) * (1.0 - sum))
}

/// Modulus of the Grötzsch ring, μ(r) = (π/2)𝒦(r′)/𝒦(r).
pub fn mu(r: f64) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return domain(format!("mu needs 0 < r < 1, got {r}"));
    }
    Ok(FRAC_PI_2 * agm(1.0, complement(r))? / agm(1.0, r)?)
}

/// Inverse of [`mu`].
///
/// For x ≥ π/2 the root is sought in u = log r, bracketed by
/// log(1/r) < μ(r) < log(4/r). Smaller x use μ(r)μ(r′) = π²/4. For x well
/// below 1 the answer is within an ulp of 1, and the residual |μ(r) − x| is
/// then limited by the spacing of doubles near 1 rather than by the solver.
pub fn mu_inv(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!("mu_inv needs a positive finite argument, got {x}"));
    }
    if x < FRAC_PI_2 {
        let s = mu_inv(PI * PI / (4.0 * x))?;
        return Ok(complement(s));
    }
    if x > 740.0 {
        return domain(format!("mu_inv({x}) underflows double precision"));
    }
    let f = |u: f64| {
        let r = u.exp();
        let rp = complement(r);
        let k = PI / (2.0 * agm(1.0, rp).unwrap_or(f64::NAN));
        let value = FRAC_PI_2 * agm(1.0, rp).unwrap_or(f64::NAN) / agm(1.0, r).unwrap_or(f64::NAN);
        let slope = -PI * PI / (4.0 * rp * rp * k * k);
        (value - x, Some(slope))
    };
    let hi = 4.0f64.ln() - x + 0.01;
    let u = roots::bracketed(f, -x, hi)?;
    Ok(u.exp())
}

/// Capacity of the Grötzsch condenser (B², [0, r]).
pub fn grotzsch_cap(r: f64) -> Result<f64> {
    Ok(2.0 * PI / mu(r)?)
}
