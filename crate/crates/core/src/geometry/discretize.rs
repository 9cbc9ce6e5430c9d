//! Nyström nodes on each boundary component.

use std::f64::consts::TAU;
use std::ops::Range;

use super::boundary::{winding_number, ParametrizedBoundary};
use super::grading::graded_reparam_jet;
use crate::error::{geometry, CapError, Result};
use crate::C64;

/// Default grading exponent p of the corner substitution.
pub const GRADING_P: u32 = 3;

/// Grading exponents accepted by [`discretize_graded`]. Beyond 5 the nodes
/// next to a corner collapse onto it in double precision at n ≈ 2¹¹.
pub const GRADING_RANGE: std::ops::RangeInclusive<u32> = 2..=5;

/// Choice of the coefficient function A(t) in the generalized Neumann kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Coefficient {
    /// A(t) = η(t) − α, for bounded domains.
    Shifted(C64),
    /// A(t) = 1, for unbounded domains.
    Unit,
}

/// Node data for the trapezoidal Nyström method, n nodes per component.
#[derive(Debug, Clone)]
pub struct DiscretizedBoundary {
    boundary: ParametrizedBoundary,
    n: usize,
    coefficient: Coefficient,
    /// Parameter values t_j (before grading).
    pub t: Vec<f64>,
    pub z: Vec<C64>,
    pub dz: Vec<C64>,
    pub d2z: Vec<C64>,
    pub a: Vec<C64>,
    pub da: Vec<C64>,
    graded: Vec<bool>,
}

/// Discretizes `b` with `n` nodes per component and the default coefficient:
/// η − α for bounded domains, 1 for unbounded ones.
pub fn discretize(b: &ParametrizedBoundary, n: usize) -> Result<DiscretizedBoundary> {
    discretize_graded(b, n, default_coefficient(b), GRADING_P)
}

/// η − α for bounded domains with a base point, 1 otherwise.
pub fn default_coefficient(b: &ParametrizedBoundary) -> Coefficient {
    match b.alpha() {
        Some(alpha) if b.is_bounded() => Coefficient::Shifted(alpha),
        _ => Coefficient::Unit,
    }
}

pub fn discretize_with(
    b: &ParametrizedBoundary,
    n: usize,
    coefficient: Coefficient,
) -> Result<DiscretizedBoundary> {
    discretize_graded(b, n, coefficient, GRADING_P)
}

/// Discretization with grading exponent `p` on components with corners.
pub fn discretize_graded(
    b: &ParametrizedBoundary,
    n: usize,
    coefficient: Coefficient,
    p: u32,
) -> Result<DiscretizedBoundary> {
    if n < 8 || n % 2 != 0 {
        return Err(CapError::Config(format!("n must be even and at least 8, got {n}")));
    }
    if !GRADING_RANGE.contains(&p) {
        return Err(CapError::Config(format!("grading exponent must lie in 2..=5, got {p}")));
    }
    let total = n * b.len();
    let mut d = DiscretizedBoundary {
        boundary: b.clone(),
        n,
        coefficient,
        t: Vec::with_capacity(total),
        z: Vec::with_capacity(total),
        dz: Vec::with_capacity(total),
        d2z: Vec::with_capacity(total),
        a: Vec::new(),
        da: Vec::new(),
        graded: Vec::with_capacity(b.len()),
    };
    let h = TAU / n as f64;
    for (k, comp) in b.components().iter().enumerate() {
        let corners = comp.corners();
        let shift = if corners.is_empty() { 0.0 } else { 0.5 };
        d.graded.push(!corners.is_empty());
        for j in 0..n {
            let t = h * (j as f64 + shift);
            let g = graded_reparam_jet(t, &corners, p);
            debug_assert!(corners.iter().all(|&c| (g.value - c).abs() > 0.0));
            let p = comp.eval(g.value);
            let dz = p.dz * g.d1;
            if !(dz.norm() > 0.0) || !dz.is_finite() {
                return geometry(format!("vanishing tangent at node {j} of component {k}"));
            }
            d.t.push(t);
            d.z.push(p.z);
            d.dz.push(dz);
            d.d2z.push(p.d2z * (g.d1 * g.d1) + p.dz * g.d2);
        }
    }
    for k in 0..b.len() {
        let r = k * n..(k + 1) * n;
        let z = &d.z[r];
        if (0..n).any(|j| z[j] == z[(j + 1) % n]) {
            return Err(CapError::Config(format!(
                "grading exponent {p} collapses nodes onto a corner of component {k} at n = {n}"
            )));
        }
    }
    d.fill_coefficient();
    Ok(d)
}

impl DiscretizedBoundary {
    fn fill_coefficient(&mut self) {
        match self.coefficient {
            Coefficient::Shifted(alpha) => {
                self.a = self.z.iter().map(|&z| z - alpha).collect();
                self.da = self.dz.clone();
            }
            Coefficient::Unit => {
                self.a = vec![C64::new(1.0, 0.0); self.z.len()];
                self.da = vec![C64::new(0.0, 0.0); self.z.len()];
            }
        }
    }

    /// Same nodes with a different coefficient function.
    pub fn with_coefficient(&self, coefficient: Coefficient) -> Self {
        let mut d = self.clone();
        d.coefficient = coefficient;
        d.fill_coefficient();
        d
    }

    pub fn boundary(&self) -> &ParametrizedBoundary {
        &self.boundary
    }

    pub fn coefficient(&self) -> Coefficient {
        self.coefficient
    }

    /// Nodes per component.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn total(&self) -> usize {
        self.z.len()
    }

    pub fn components(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_bounded(&self) -> bool {
        self.boundary.is_bounded()
    }

    /// Trapezoidal weight 2π/n.
    pub fn weight(&self) -> f64 {
        TAU / self.n as f64
    }

    pub fn range(&self, k: usize) -> Range<usize> {
        k * self.n..(k + 1) * self.n
    }

    pub fn component_of(&self, i: usize) -> usize {
        i / self.n
    }

    pub fn is_graded(&self, k: usize) -> bool {
        self.graded[k]
    }

    /// Approximate arc length between node i and its neighbours.
    pub fn spacing(&self, i: usize) -> f64 {
        self.dz[i].norm() * self.weight()
    }

    /// Whether z lies in the domain, judged by winding numbers of the node
    /// polygons.
    pub fn contains(&self, z: C64) -> bool {
        let bounded = self.is_bounded();
        (0..self.components()).all(|k| {
            let w = winding_number(&self.z[self.range(k)], z);
            if bounded && k == 0 {
                w != 0
            } else {
                w == 0
            }
        })
    }

    /// Distance from z to the nearest node and that node's local spacing.
    pub fn nearest_node(&self, z: C64) -> (f64, f64) {
        let mut best = (f64::INFINITY, 0);
        for (i, &w) in self.z.iter().enumerate() {
            let d = (w - z).norm();
            if d < best.0 {
                best = (d, i);
            }
        }
        // Spacing of the neighbouring panel matters near graded corners.
        let i = best.1;
        let r = self.range(self.component_of(i));
        let next = if i + 1 == r.end { r.start } else { i + 1 };
        let prev = if i == r.start { r.end - 1 } else { i - 1 };
        let gap = (self.z[next] - self.z[i]).norm().max((self.z[i] - self.z[prev]).norm());
        (best.0, gap)
    }

    /// True if z is closer to the boundary than `factor` local node spacings.
    pub fn near_boundary(&self, z: C64, factor: f64) -> bool {
        let (d, gap) = self.nearest_node(z);
        d < factor * gap
    }
}
