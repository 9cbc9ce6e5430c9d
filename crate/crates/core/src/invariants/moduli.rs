//! Reduced moduli and moduli of quadrilaterals.

use std::f64::consts::TAU;

use super::InvariantResult;
use crate::error::{CapError, Result};
use crate::geometry::ParametrizedBoundary;
use crate::maps::{disk_map_bounded, disk_map_unbounded, modulus_from_disk_points, slit_disk_map, SolveOptions};
use crate::C64;

/// m(G, α) = −(1/2π) log Φ′(α) = ν/2π for bounded G, and m(G, ∞) = ν/2π for
/// unbounded G (Φ′(∞) = e^{−ν}).
pub fn reduced_modulus(b: &ParametrizedBoundary, alpha: Option<C64>, opts: SolveOptions) -> Result<InvariantResult> {
    let map = if b.is_bounded() {
        disk_map_bounded(b, alpha, opts)?
    } else {
        disk_map_unbounded(b, None, opts)?
    };
    Ok(InvariantResult::new(map.nu()[0] / TAU, map.nu_deviation(), opts.n))
}

/// m(G, α) = ν₀/2π for the map onto the disk with circular slits.
pub fn generalized_reduced_modulus(
    b: &ParametrizedBoundary,
    alpha: Option<C64>,
    opts: SolveOptions,
) -> Result<InvariantResult> {
    let map = slit_disk_map(b, alpha, opts)?;
    Ok(InvariantResult::new(map.nu()[0] / TAU, map.nu_deviation(), opts.n))
}

fn check_vertices(b: &ParametrizedBoundary, z: &[C64; 4]) -> Result<()> {
    if !b.is_bounded() || b.len() != 1 {
        return Err(CapError::Domain("a quadrilateral needs a bounded simply connected domain".into()));
    }
    let scale = b.diameter();
    for i in 0..4 {
        for j in i + 1..4 {
            if (z[i] - z[j]).norm() <= 1e-12 * scale {
                return Err(CapError::Domain("quadrilateral vertices must be distinct".into()));
            }
        }
        if b.distance_to_boundary(z[i]) > 1e-6 * scale.max(1.0) {
            return Err(CapError::Domain(format!("vertex {} is not on the boundary", z[i])));
        }
    }
    Ok(())
}

fn modulus_with(b: &ParametrizedBoundary, z: [C64; 4], alpha: Option<C64>, opts: SolveOptions) -> Result<(f64, f64)> {
    let map = disk_map_bounded(b, alpha, opts)?;
    let w = z.map(|v| map.eval_boundary(0, v));
    crate::maps::check_disk_order(&w)?;
    Ok((modulus_from_disk_points(w)?, map.nu_deviation()))
}

/// Modulus of the quadrilateral (G; z₁, z₂, z₃, z₄) from the absolute cross
/// ratio of the vertex images on the unit circle.
pub fn quad_modulus(b: &ParametrizedBoundary, z: [C64; 4], opts: SolveOptions) -> Result<InvariantResult> {
    check_vertices(b, &z)?;
    let (h, dev) = modulus_with(b, z, None, opts)?;
    Ok(InvariantResult::new(h, dev, opts.n))
}

/// |mod(G; z₁, z₂, z₃, z₄) · mod(G; z₄, z₁, z₂, z₃) − 1|.
///
/// With a single disk map this product is 1 up to rounding for any
/// concyclic images (Ptolemy), so the conjugate modulus is computed from a
/// second map with a different base point. The result then measures how well
/// the two discretized maps agree.
pub fn quad_reciprocity_check(b: &ParametrizedBoundary, z: [C64; 4], opts: SolveOptions) -> Result<f64> {
    check_vertices(b, &z)?;
    let alpha = b.alpha().ok_or_else(|| CapError::Domain("missing base point".into()))?;
    let (h1, _) = modulus_with(b, z, Some(alpha), opts)?;
    let centroid = z.iter().sum::<C64>() / 4.0;
    let mut beta = alpha + (centroid - alpha) * 0.25;
    if !b.contains(beta) || (beta - alpha).norm() < 1e-3 * b.diameter() {
        beta = alpha + C64::new(0.05, 0.05) * b.diameter();
        if !b.contains(beta) {
            beta = alpha;
        }
    }
    let (h2, _) = modulus_with(b, [z[3], z[0], z[1], z[2]], Some(beta), opts)?;
    Ok((h1 * h2 - 1.0).abs())
}
