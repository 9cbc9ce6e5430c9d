//! Harmonic measure of boundary arcs of simply connected domains and the
//! harmonic-measure distribution function.

use std::f64::consts::{PI, TAU};

use super::Samples;
use crate::error::{CapError, Result};
use crate::geometry::ParametrizedBoundary;
use crate::maps::{disk_map_bounded, disk_map_unbounded, ConformalMap, SolveOptions};
use crate::C64;

/// Harmonic measure of a union of boundary arcs via the disk map.
#[derive(Debug, Clone)]
pub struct HarmonicMeasureSc {
    map: ConformalMap,
}

impl HarmonicMeasureSc {
    /// Disk map with Φ(α) = 0 for bounded domains (α defaults to the base
    /// point), or Φ(∞) = 0 for unbounded ones.
    pub fn new(b: &ParametrizedBoundary, alpha: Option<C64>, opts: SolveOptions) -> Result<Self> {
        let map = if b.is_bounded() {
            disk_map_bounded(b, alpha, opts)?
        } else {
            disk_map_unbounded(b, None, opts)?
        };
        Ok(Self { map })
    }

    pub fn map(&self) -> &ConformalMap {
        &self.map
    }

    /// ω(z, L, G) for arcs L_j from `endpoints[2j]` to `endpoints[2j+1]`,
    /// the endpoints listed in the direction of the boundary.
    pub fn eval(&self, endpoints: &[C64], points: &[C64]) -> Result<Vec<f64>> {
        let w: Vec<C64> = endpoints.iter().map(|&z| self.map.eval_boundary(0, z)).collect();
        let phi = self.map.eval(points)?.values;
        omega_disk(&w, &phi)
    }
}

/// Harmonic measure in the unit disk at the points `phi` of the arcs between
/// consecutive pairs of the unit-circle points `w` (counterclockwise order).
///
/// β is placed in the middle of the gap between the last and the first
/// endpoint, then each term is arg(X + cot((θ_j − β)/2)) with
/// X = i(1 + e^{−iβ}Φ)/(1 − e^{−iβ}Φ) in the upper half-plane, so every
/// argument lies in (0, π).
pub(crate) fn omega_disk(w: &[C64], phi: &[C64]) -> Result<Vec<f64>> {
    if w.is_empty() || w.len() % 2 != 0 {
        return Err(CapError::Config("arc endpoints come in pairs".into()));
    }
    let raw: Vec<f64> = w.iter().map(|v| v.arg()).collect();
    let last = *raw.last().unwrap();
    let gap = (raw[0] - last).rem_euclid(TAU);
    let gap = if gap == 0.0 { TAU } else { gap };
    let beta = raw[0] - 0.5 * gap;
    let theta: Vec<f64> = raw.iter().map(|&t| beta + (t - beta).rem_euclid(TAU)).collect();
    if theta.windows(2).any(|p| !(p[1] > p[0])) || !(theta[theta.len() - 1] < beta + TAU) {
        return Err(CapError::Domain("arc endpoints collide or are out of order".into()));
    }
    let rot = C64::from_polar(1.0, -beta);
    Ok(phi
        .iter()
        .map(|&p| {
            let u = rot * p;
            let x = C64::new(0.0, 1.0) * (1.0 + u) / (1.0 - u);
            let sum: f64 = theta
                .iter()
                .enumerate()
                .map(|(j, &t)| {
                    let sign = if j % 2 == 0 { -1.0 } else { 1.0 };
                    sign * (x + 1.0 / (0.5 * (t - beta)).tan()).arg()
                })
                .sum();
            sum / PI
        })
        .collect())
}

pub fn harmonic_measure_sc(
    b: &ParametrizedBoundary,
    endpoints: &[C64],
    points: &[C64],
    opts: SolveOptions,
) -> Result<Vec<f64>> {
    HarmonicMeasureSc::new(b, None, opts)?.eval(endpoints, points)
}

/// Arcs of the boundary inside the closed disk |z − z0| ≤ r, as
/// (entry, exit) points in boundary order. Returns None when the curve lies
/// entirely on one side; Some(true/false) says which.
fn arcs_in_disk(b: &ParametrizedBoundary, z0: C64, r: f64, samples: usize) -> (Vec<C64>, Option<bool>) {
    let comp = &b.components()[0];
    let g = |tau: f64| (comp.eval(tau).z - z0).norm() - r;
    // Points within 1e-10 of the circle count as outside, so tangencies do not
    // produce zero-length arcs.
    let inside = |v: f64| v < -1e-10;
    let taus: Vec<f64> = (0..samples).map(|j| TAU * j as f64 / samples as f64).collect();
    let flags: Vec<bool> = taus.iter().map(|&t| inside(g(t))).collect();
    if flags.iter().all(|&f| f) {
        return (Vec::new(), Some(true));
    }
    if flags.iter().all(|&f| !f) {
        return (Vec::new(), Some(false));
    }
    let refine = |lo: f64, hi: f64, entering: bool| {
        let (mut lo, mut hi) = (lo, hi);
        while hi - lo > 1e-12 {
            let mid = 0.5 * (lo + hi);
            if inside(g(mid)) == entering {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        comp.eval(0.5 * (lo + hi)).z
    };
    // Start at an outside sample so that arcs come out as entry/exit pairs.
    let start = flags.iter().position(|&f| !f).unwrap();
    let mut pts = Vec::new();
    for s in 0..samples {
        let j = (start + s) % samples;
        let k = (j + 1) % samples;
        if flags[j] != flags[k] {
            let hi = if k == 0 { TAU } else { taus[k] };
            pts.push(refine(taus[j], hi, flags[k]));
        }
    }
    (pts, None)
}

/// h(r) = ω(z₀, Γ ∩ B̄(z₀, r), G) on a grid of radii, for a simply connected
/// domain (bounded, or unbounded with z₀ ∈ G).
pub fn h_function(b: &ParametrizedBoundary, z0: C64, radii: &[f64], opts: SolveOptions) -> Result<Samples<f64>> {
    if b.len() != 1 {
        return Err(CapError::Domain("the h-function needs a simply connected domain".into()));
    }
    if !b.contains(z0) {
        return Err(CapError::Domain(format!("base point {z0} is not in the domain")));
    }
    if b.distance_to_boundary(z0) < 1e-12 {
        return Err(CapError::Domain("base point lies on the boundary".into()));
    }
    if radii.iter().any(|&r| !(r > 0.0)) {
        return Err(CapError::Config("radii must be positive".into()));
    }
    if radii.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(CapError::Config("radii must be strictly ascending".into()));
    }
    let hm = HarmonicMeasureSc::new(b, if b.is_bounded() { Some(z0) } else { None }, opts)?;
    let phi0 = if b.is_bounded() { C64::new(0.0, 0.0) } else { hm.map.eval(&[z0])?.values[0] };
    let samples = (4 * opts.n).max(4096);
    let values = radii
        .iter()
        .map(|&r| {
            let (pts, whole) = arcs_in_disk(b, z0, r, samples);
            match whole {
                Some(true) => Ok(1.0),
                Some(false) => Ok(0.0),
                None => {
                    let w: Vec<C64> = pts.iter().map(|&z| hm.map.eval_boundary(0, z)).collect();
                    Ok(omega_disk(&w, &[phi0])?[0].clamp(0.0, 1.0))
                }
            }
        })
        .collect::<Result<_>>()?;
    Ok(Samples { values, nu_deviation: hm.map.nu_deviation() })
}
