//! Hyperbolic distance, geodesics and circles in simply connected domains.

use super::{InvariantResult, Samples};
use crate::error::{CapError, Result};
use crate::geometry::ParametrizedBoundary;
use crate::maps::{disk_map_bounded, ConformalMap, SolveOptions};
use crate::specfun::hyp_dist_ball;
use crate::C64;

fn centered_map(b: &ParametrizedBoundary, x: C64, opts: SolveOptions) -> Result<ConformalMap> {
    if !b.is_bounded() || b.len() != 1 {
        return Err(CapError::Domain("hyperbolic geometry needs a bounded simply connected domain".into()));
    }
    disk_map_bounded(b, Some(x), opts)
}

/// ρ_G(x, y) = ρ_{B²}(Φ(x), Φ(y)) with the disk map centred at x, so that
/// Φ(x) = 0.
pub fn hyperbolic_distance(b: &ParametrizedBoundary, x: C64, y: C64, opts: SolveOptions) -> Result<InvariantResult> {
    let map = centered_map(b, x, opts)?;
    if !b.contains(y) {
        return Err(CapError::Domain(format!("{y} is not in the domain")));
    }
    let w = map.eval(&[y])?.values[0];
    Ok(InvariantResult::new(hyp_dist_ball(C64::new(0.0, 0.0), w)?, map.nu_deviation(), opts.n))
}

/// Points along the hyperbolic geodesic from x to y, equally spaced in
/// hyperbolic arc length. With Φ(x) = 0 the disk geodesic is a radius.
pub fn hyperbolic_geodesic(
    b: &ParametrizedBoundary,
    x: C64,
    y: C64,
    opts: SolveOptions,
    samples: usize,
) -> Result<Samples<C64>> {
    if samples < 2 {
        return Err(CapError::Config("a geodesic needs at least two samples".into()));
    }
    if x == y {
        return Err(CapError::Domain("geodesic endpoints must differ".into()));
    }
    let map = centered_map(b, x, opts)?;
    let wy = map.eval(&[y])?.values[0];
    let dist = hyp_dist_ball(C64::new(0.0, 0.0), wy)?;
    let dir = wy / wy.norm();
    let w: Vec<C64> = (0..samples)
        .map(|k| dir * (0.5 * dist * k as f64 / (samples - 1) as f64).tanh())
        .collect();
    Ok(Samples { values: map.inverse(&w)?.values, nu_deviation: map.nu_deviation() })
}

/// Points of the hyperbolic circle of radius `r` about `center`: the preimage
/// of |w| = tanh(r/2) under the disk map centred there.
pub fn hyperbolic_circle(
    b: &ParametrizedBoundary,
    center: C64,
    r: f64,
    opts: SolveOptions,
    samples: usize,
) -> Result<Samples<C64>> {
    if !(r > 0.0) {
        return Err(CapError::Config("radius must be positive".into()));
    }
    if samples < 3 {
        return Err(CapError::Config("a circle needs at least three samples".into()));
    }
    let map = centered_map(b, center, opts)?;
    let (_, radius) = crate::specfun::hyp_disk_euclidean(C64::new(0.0, 0.0), r)?;
    let w: Vec<C64> = (0..samples)
        .map(|k| C64::from_polar(radius, std::f64::consts::TAU * k as f64 / samples as f64))
        .collect();
    Ok(Samples { values: map.inverse(&w)?.values, nu_deviation: map.nu_deviation() })
}
