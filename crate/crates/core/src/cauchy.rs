//! Cauchy-integral evaluation inside the domain from boundary samples.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{CapError, Result};
use crate::geometry::DiscretizedBoundary;
use crate::C64;

pub use crate::fourier::{spectral_derivative, spectral_derivative_real};

/// Values at the requested points, with a flag for each point that lies
/// closer to the boundary than the quadrature resolves reliably.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluated {
    pub values: Vec<C64>,
    pub near_boundary: Vec<bool>,
}

impl Evaluated {
    pub fn any_near_boundary(&self) -> bool {
        self.near_boundary.iter().any(|&b| b)
    }
}

/// Advisory distance 2π·diam/n below which results are flagged.
pub fn advisory_distance(d: &DiscretizedBoundary) -> f64 {
    std::f64::consts::TAU * d.boundary().diameter() / d.n() as f64
}

/// f(z) for the analytic f with boundary values `g` at the nodes.
///
/// Bounded domains use the quotient Σ g_j a_j / Σ a_j with
/// a_j = η′_j/(η_j − z), which is exact for constants. Unbounded domains
/// (f(∞) = 0, boundary oriented clockwise) use Σ g_j a_j / (Σ a_j + 2πi/w),
/// whose denominator tends to 2πi/w because Σ a_j → 0.
pub fn cauchy_eval(d: &DiscretizedBoundary, g: &[C64], points: &[C64]) -> Result<Evaluated> {
    if g.len() != d.total() {
        return Err(CapError::Config(format!(
            "{} boundary values for {} nodes",
            g.len(),
            d.total()
        )));
    }
    if let Some(z) = points.iter().find(|&&z| !d.contains(z)) {
        return Err(CapError::Domain(format!("point {z} is not in the domain")));
    }
    let limit = advisory_distance(d);
    let (values, near): (Vec<C64>, Vec<bool>) = points
        .par_iter()
        .map(|&z| {
            let (v, dist) = quotient(d, g, z);
            (v, dist < limit)
        })
        .unzip();
    Ok(Evaluated { values, near_boundary: near })
}

/// f(z) at a point z of the boundary itself, corners included.
///
/// Uses the same quotient as [`cauchy_eval`]: it is the trapezoidal rule for
/// ∮ (f(η) − f(z))/(η − z) dη = 0 (bounded) or 2πi f(z) (unbounded), whose
/// integrand stays bounded at z, so no jump term or corner angle enters.
pub fn boundary_value(d: &DiscretizedBoundary, g: &[C64], z: C64) -> C64 {
    quotient(d, g, z).0
}

/// The Cauchy quotient at z and the distance from z to the nearest node.
fn quotient(d: &DiscretizedBoundary, g: &[C64], z: C64) -> (C64, f64) {
    let mut num = C64::new(0.0, 0.0);
    let mut den = C64::new(0.0, 0.0);
    let mut dist = f64::INFINITY;
    for j in 0..d.total() {
        let diff = d.z[j] - z;
        let r = diff.norm();
        if r == 0.0 {
            return (g[j], 0.0);
        }
        dist = dist.min(r);
        let a = d.dz[j] / diff;
        num += g[j] * a;
        den += a;
    }
    if !d.is_bounded() {
        den += C64::new(0.0, 2.0 * PI / d.weight());
    }
    (num / den, dist)
}

/// Inverse of a disk map from its boundary correspondence ζ_j = Φ(η_j).
///
/// Bounded: Φ⁻¹(w) = (1/2πi)∮ η ζ′/(ζ − w) dt. Unbounded (Φ(∞) = 0):
/// Φ⁻¹(w) = (1/w)(1/2πi)∮ ζ η ζ′/(ζ − w) dt. Both are evaluated in quotient
/// form with ζ′ from spectral differentiation of each component's samples.
pub fn inverse_disk_map_eval(d: &DiscretizedBoundary, zeta: &[C64], w: &[C64], bounded: bool) -> Result<Evaluated> {
    if d.components() != 1 || zeta.len() != d.total() {
        return Err(CapError::Config("inverse map needs one component and one ζ per node".into()));
    }
    if let Some(bad) = zeta.iter().find(|v| (v.norm() - 1.0).abs() > 1e-8) {
        return Err(CapError::Numerical(format!("boundary image {bad} is off the unit circle")));
    }
    if let Some(&p) = w.iter().find(|p| p.norm() >= 1.0) {
        return Err(CapError::Domain(format!("{p} is not in the unit disk")));
    }
    if !bounded && w.iter().any(|p| p.norm() == 0.0) {
        return Err(CapError::Domain("w = 0 is the image of ∞".into()));
    }
    let dzeta = spectral_derivative(zeta);
    let data: Vec<C64> = if bounded {
        d.z.clone()
    } else {
        d.z.iter().zip(zeta).map(|(z, s)| z * s).collect()
    };
    let limit = 1.0 - 10.0 / d.n() as f64;
    let (values, near): (Vec<C64>, Vec<bool>) = w
        .par_iter()
        .map(|&p| {
            let mut num = C64::new(0.0, 0.0);
            let mut den = C64::new(0.0, 0.0);
            for j in 0..zeta.len() {
                let a = dzeta[j] / (zeta[j] - p);
                num += data[j] * a;
                den += a;
            }
            let v = num / den;
            (if bounded { v } else { v / p }, p.norm() >= limit)
        })
        .unzip();
    Ok(Evaluated { values, near_boundary: near })
}
