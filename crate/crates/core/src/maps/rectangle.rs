//! Map of a quadrilateral onto the rectangle with corners 0, 1, 1+ih, ih.

use std::f64::consts::PI;

use super::mobius::{disk_automorphism_three_points, Mobius};
use super::{disk_map_bounded, ConformalMap, SolveOptions};
use crate::cauchy::Evaluated;
use crate::error::{CapError, Result};
use crate::geometry::{build_boundary, BoundaryComponent, ParametrizedBoundary};
use crate::specfun::mu;
use crate::C64;

/// Modulus h = (2/π) μ(1/√k) of four points in counterclockwise order on the
/// unit circle, with k = |w₁−w₃||w₂−w₄| / (|w₁−w₂||w₃−w₄|).
pub fn modulus_from_disk_points(w: [C64; 4]) -> Result<f64> {
    let k = (w[0] - w[2]).norm() * (w[1] - w[3]).norm() / ((w[0] - w[1]).norm() * (w[2] - w[3]).norm());
    if !(k.is_finite() && k > 1.0) {
        return Err(CapError::Domain(format!("quadrilateral vertices are degenerate (k = {k})")));
    }
    Ok(2.0 / PI * mu(1.0 / k.sqrt())?)
}

/// Checks that unit-circle points are distinct and in counterclockwise order.
pub fn check_disk_order(w: &[C64]) -> Result<()> {
    let turn = |a: C64, b: C64| (b / a).arg().rem_euclid(std::f64::consts::TAU);
    let steps: Vec<f64> = (0..w.len()).map(|i| turn(w[i], w[(i + 1) % w.len()])).collect();
    let total: f64 = steps.iter().sum();
    if steps.iter().any(|&s| s < 1e-12) || (total - std::f64::consts::TAU).abs() > 1e-6 {
        return Err(CapError::Domain("vertices must be distinct and in positive boundary order".into()));
    }
    Ok(())
}

/// ψ = Ψ₁⁻¹ ∘ Ψ₂⁻¹ ∘ Φ₁, where Φ₁ maps the quadrilateral to the disk, Ψ₁ maps
/// the rectangle R(h) to the disk and Ψ₂ is the disk automorphism matching
/// three vertex images.
#[derive(Debug, Clone)]
pub struct RectangleMap {
    h: f64,
    phi1: ConformalMap,
    psi1: ConformalMap,
    psi2: Mobius,
    vertex_images: [C64; 4],
}

impl RectangleMap {
    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn disk_map(&self) -> &ConformalMap {
        &self.phi1
    }

    pub fn rectangle_disk_map(&self) -> &ConformalMap {
        &self.psi1
    }

    pub fn automorphism(&self) -> Mobius {
        self.psi2
    }

    /// Φ₁ at the four vertices.
    pub fn vertex_disk_images(&self) -> [C64; 4] {
        self.vertex_images
    }

    /// ψ at interior points.
    pub fn eval(&self, points: &[C64]) -> Result<Evaluated> {
        let w = self.phi1.eval(points)?;
        let inv = self.psi2.inverse();
        let pulled: Vec<C64> = w.values.iter().map(|&v| inv.apply(v)).collect();
        let mut out = self.psi1.inverse(&pulled)?;
        for (flag, near) in out.near_boundary.iter_mut().zip(&w.near_boundary) {
            *flag |= *near;
        }
        Ok(out)
    }

    /// ψ at the four vertices, computed through the boundary correspondence.
    pub fn vertex_values(&self) -> Result<[C64; 4]> {
        let inv = self.psi2.inverse();
        let mut out = [C64::new(0.0, 0.0); 4];
        for (o, w) in out.iter_mut().zip(self.vertex_images) {
            let v = inv.apply(w);
            *o = self.psi1.inverse_boundary(v / v.norm())?;
        }
        Ok(out)
    }
}

/// Rectangle R(h) with corners 0, 1, 1+ih, ih.
pub fn rectangle_boundary(h: f64) -> Result<ParametrizedBoundary> {
    let corners = [C64::new(0.0, 0.0), C64::new(1.0, 0.0), C64::new(1.0, h), C64::new(0.0, h)];
    build_boundary(vec![BoundaryComponent::polygon(&corners)?], true, Some(C64::new(0.5, 0.5 * h)))
}

/// Builds ψ for the quadrilateral (G; z₁, z₂, z₃, z₄), the vertices given in
/// positive order on the boundary of a bounded simply connected domain, so
/// that ψ(z₁) = 0, ψ(z₂) = 1, ψ(z₃) = 1+ih, ψ(z₄) = ih.
pub fn rectangle_map(b: &ParametrizedBoundary, z: [C64; 4], opts: SolveOptions) -> Result<RectangleMap> {
    let phi1 = disk_map_bounded(b, None, opts)?;
    let w = z.map(|v| phi1.eval_boundary(0, v));
    check_disk_order(&w)?;
    let h = modulus_from_disk_points(w)?;
    let rect = rectangle_boundary(h)?;
    let psi1 = disk_map_bounded(&rect, None, opts)?;
    let corners = [C64::new(0.0, 0.0), C64::new(1.0, 0.0), C64::new(1.0, h)];
    let wt = corners.map(|v| psi1.eval_boundary(0, v));
    let psi2 = disk_automorphism_three_points(wt, [w[0], w[1], w[2]])?;
    Ok(RectangleMap { h, phi1, psi1, psi2, vertex_images: w })
}
