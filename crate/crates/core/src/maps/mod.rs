//! Canonical conformal maps built from solutions of the integral equation.
//!
//! Every map solves one integral equation with a logarithmic right-hand side
//! γ. The boundary values of the auxiliary analytic function
//! f = (γ + ν + iρ)/A give Φ on the boundary, and the Cauchy formula gives Φ
//! inside.

mod mobius;
mod rectangle;

use serde::{Deserialize, Serialize};

use crate::bie::{density_at, Backend, BieSolution, BieSolver};
use crate::cauchy::{cauchy_eval, inverse_disk_map_eval, Evaluated};
use crate::error::{CapError, Result};
use crate::geometry::{discretize_graded, Coefficient, GRADING_P, DiscretizedBoundary, ParametrizedBoundary};
use crate::C64;

pub use mobius::{disk_automorphism_three_points, mobius_three_points, Mobius};
pub use rectangle::{check_disk_order, modulus_from_disk_points, rectangle_boundary, rectangle_map, RectangleMap};

/// Discretization settings shared by all solves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveOptions {
    /// Nodes per boundary component.
    pub n: usize,
    pub backend: Backend,
    /// Grading exponent p at corners.
    #[serde(default = "default_grading")]
    pub grading: u32,
}

fn default_grading() -> u32 {
    GRADING_P
}

impl SolveOptions {
    pub fn new(n: usize) -> Self {
        Self { n, backend: Backend::Gmres, grading: GRADING_P }
    }

    pub fn with_grading(mut self, p: u32) -> Self {
        self.grading = p;
        self
    }

    pub fn with_backend(mut self, backend: Backend) -> Self {
        self.backend = backend;
        self
    }
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self::new(1024)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    UnitDisk,
    Annulus,
    SlitDisk,
    Rectangle,
}

/// Which formula turns f into Φ.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Normalization {
    /// Φ = c (z−α) e^{(z−α) f}, Φ(α) = 0, Φ′(α) > 0.
    Bounded { alpha: C64 },
    /// Φ = c e^{f}/(z − z₀), Φ(∞) = 0.
    Unbounded { z0: C64 },
    /// Φ = c ((z−z₁)/(α−z₁)) e^{(z−α) f}, Φ(α) > 0.
    AnnulusBounded { alpha: C64, z1: C64 },
    /// Φ = c ((z−z₁)/(z−z₀)) e^{f}, Φ(∞) > 0.
    AnnulusUnbounded { z0: C64, z1: C64 },
}

impl Normalization {
    fn gamma(&self, z: C64) -> f64 {
        match *self {
            Self::Bounded { alpha } => -(z - alpha).norm().ln(),
            Self::Unbounded { z0 } => (z - z0).norm().ln(),
            Self::AnnulusBounded { alpha, z1 } => -((z - z1) / (alpha - z1)).norm().ln(),
            Self::AnnulusUnbounded { z0, z1 } => -((z - z1) / (z - z0)).norm().ln(),
        }
    }

    fn coefficient(&self) -> Coefficient {
        match *self {
            Self::Bounded { alpha } | Self::AnnulusBounded { alpha, .. } => Coefficient::Shifted(alpha),
            _ => Coefficient::Unit,
        }
    }

    fn phi(&self, z: C64, f: C64, c: f64) -> C64 {
        match *self {
            Self::Bounded { alpha } => (z - alpha) * ((z - alpha) * f).exp() * c,
            Self::Unbounded { z0 } => f.exp() * c / (z - z0),
            Self::AnnulusBounded { alpha, z1 } => ((z - z1) / (alpha - z1)) * ((z - alpha) * f).exp() * c,
            Self::AnnulusUnbounded { z0, z1 } => ((z - z1) / (z - z0)) * f.exp() * c,
        }
    }
}

/// A conformal map Φ of the domain onto a canonical domain, represented by its
/// boundary correspondence and evaluated inside by the Cauchy formula.
#[derive(Debug, Clone)]
pub struct ConformalMap {
    target: Target,
    normalization: Normalization,
    d: DiscretizedBoundary,
    sol: BieSolution,
    f: Vec<C64>,
    image: Vec<C64>,
    c: f64,
}

impl ConformalMap {
    fn build(
        target: Target,
        normalization: Normalization,
        b: &ParametrizedBoundary,
        opts: SolveOptions,
    ) -> Result<Self> {
        let d = discretize_graded(b, opts.n, normalization.coefficient(), opts.grading)?;
        let gamma: Vec<f64> = d.z.iter().map(|&z| normalization.gamma(z)).collect();
        let sol = BieSolver::new(&d, opts.backend)?.solve(&gamma)?;
        let n = d.n();
        let c = (-sol.nu[0]).exp();
        let mut f = Vec::with_capacity(d.total());
        let mut image = Vec::with_capacity(d.total());
        for i in 0..d.total() {
            let fi = C64::new(gamma[i] + sol.nu[i / n], sol.rho[i]) / d.a[i];
            f.push(fi);
            image.push(normalization.phi(d.z[i], fi, c));
        }
        Ok(Self { target, normalization, d, sol, f, image, c })
    }

    pub fn target(&self) -> Target {
        self.target
    }

    /// Normalization constant c = e^{−ν₀}.
    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn nu(&self) -> &[f64] {
        &self.sol.nu
    }

    pub fn nu_deviation(&self) -> f64 {
        self.sol.nu_deviation
    }

    pub fn n(&self) -> usize {
        self.d.n()
    }

    /// Annulus inner radius q = e^{ν₁−ν₀}.
    pub fn q(&self) -> Option<f64> {
        (self.target == Target::Annulus).then(|| (self.sol.nu[1] - self.sol.nu[0]).exp())
    }

    /// Slit radii R_k = e^{ν_k−ν₀}, k = 1..m (empty for other targets).
    pub fn slit_radii(&self) -> Vec<f64> {
        if self.target != Target::SlitDisk {
            return Vec::new();
        }
        self.sol.nu[1..].iter().map(|v| (v - self.sol.nu[0]).exp()).collect()
    }

    pub fn discretization(&self) -> &DiscretizedBoundary {
        &self.d
    }

    pub fn solution(&self) -> &BieSolution {
        &self.sol
    }

    /// Φ(η(t_j)) at the nodes.
    pub fn boundary_image(&self) -> &[C64] {
        &self.image
    }

    /// Boundary values of the auxiliary function f at the nodes.
    pub fn f_boundary(&self) -> &[C64] {
        &self.f
    }

    /// Φ at interior points.
    pub fn eval(&self, points: &[C64]) -> Result<Evaluated> {
        let mut out = cauchy_eval(&self.d, &self.f, points)?;
        for (v, &z) in out.values.iter_mut().zip(points) {
            *v = self.normalization.phi(z, *v, self.c);
        }
        Ok(out)
    }

    /// Φ at a boundary point of component `k` that need not be a node.
    pub fn eval_boundary(&self, k: usize, z: C64) -> C64 {
        let g = self.normalization.gamma(z);
        let rho = density_at(&self.d, &self.sol, z);
        let a = match self.normalization.coefficient() {
            Coefficient::Shifted(alpha) => z - alpha,
            Coefficient::Unit => C64::new(1.0, 0.0),
        };
        let f = C64::new(g + self.sol.nu[k], rho) / a;
        self.normalization.phi(z, f, self.c)
    }

    /// Φ⁻¹ of a point ω on the unit circle, for disk maps of bounded simply
    /// connected domains. Brackets arg Φ along the curve parameter and refines
    /// by bisection.
    pub fn inverse_boundary(&self, omega: C64) -> Result<C64> {
        if self.target != Target::UnitDisk || self.d.components() != 1 {
            return Err(CapError::Config("boundary inverse needs a disk map".into()));
        }
        let comp = &self.d.boundary().components()[0];
        let g = |tau: f64| (self.eval_boundary(0, comp.eval(tau).z) / omega).arg();
        let samples = 512;
        let taus: Vec<f64> = (0..=samples).map(|j| std::f64::consts::TAU * j as f64 / samples as f64).collect();
        let vals: Vec<f64> = taus.iter().map(|&t| g(t)).collect();
        for j in 0..samples {
            let (a, b) = (vals[j], vals[j + 1]);
            if a == 0.0 {
                return Ok(comp.eval(taus[j]).z);
            }
            if a < 0.0 && b >= 0.0 && b - a < 1.0 {
                let (mut lo, mut hi) = (taus[j], taus[j + 1]);
                for _ in 0..200 {
                    let mid = 0.5 * (lo + hi);
                    if mid <= lo || mid >= hi {
                        break;
                    }
                    if g(mid) < 0.0 {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                return Ok(comp.eval(0.5 * (lo + hi)).z);
            }
        }
        Err(CapError::Numerical(format!("could not invert the boundary map at {omega}")))
    }

    /// Φ⁻¹ at points of the unit disk (disk maps only).
    pub fn inverse(&self, w: &[C64]) -> Result<Evaluated> {
        if self.target != Target::UnitDisk {
            return Err(CapError::Config("inverse evaluation is available for disk maps only".into()));
        }
        let bounded = matches!(self.normalization, Normalization::Bounded { .. });
        if bounded {
            // Φ⁻¹(0) = α exactly; the quotient form is fine elsewhere.
            let mut out = inverse_disk_map_eval(&self.d, &self.image, w, true)?;
            if let Normalization::Bounded { alpha } = self.normalization {
                for (v, p) in out.values.iter_mut().zip(w) {
                    if p.norm() == 0.0 {
                        *v = alpha;
                    }
                }
            }
            Ok(out)
        } else {
            inverse_disk_map_eval(&self.d, &self.image, w, false)
        }
    }
}

fn require(b: &ParametrizedBoundary, components: Option<usize>, bounded: bool, what: &str) -> Result<()> {
    if b.is_bounded() != bounded {
        let kind = if bounded { "bounded" } else { "unbounded" };
        return Err(CapError::Domain(format!("{what} needs a {kind} domain")));
    }
    if let Some(m) = components {
        if b.len() != m {
            return Err(CapError::Domain(format!(
                "{what} needs {m} boundary component(s), got {}",
                b.len()
            )));
        }
    }
    Ok(())
}

fn base_point(b: &ParametrizedBoundary, alpha: Option<C64>) -> Result<C64> {
    match alpha {
        Some(a) => {
            if !b.contains(a) {
                return Err(CapError::Domain(format!("base point {a} is not in the domain")));
            }
            Ok(a)
        }
        None => b.alpha().ok_or_else(|| CapError::Domain("no base point given".into())),
    }
}

/// Φ of a bounded simply connected domain onto the unit disk with
/// Φ(α) = 0, Φ′(α) > 0. `alpha` defaults to the boundary's base point.
pub fn disk_map_bounded(b: &ParametrizedBoundary, alpha: Option<C64>, opts: SolveOptions) -> Result<ConformalMap> {
    require(b, Some(1), true, "disk_map_bounded")?;
    let alpha = base_point(b, alpha)?;
    ConformalMap::build(Target::UnitDisk, Normalization::Bounded { alpha }, b, opts)
}

/// Φ of an unbounded simply connected domain onto the unit disk with
/// Φ(∞) = 0, Φ′(∞) > 0. `z0` (inside the complement) defaults to the
/// component's auxiliary point.
pub fn disk_map_unbounded(b: &ParametrizedBoundary, z0: Option<C64>, opts: SolveOptions) -> Result<ConformalMap> {
    require(b, Some(1), false, "disk_map_unbounded")?;
    let z0 = z0.or(b.interior_point(0)).ok_or_else(|| CapError::Domain("no interior point".into()))?;
    if b.contains(z0) {
        return Err(CapError::Domain(format!("{z0} must lie inside the boundary curve")));
    }
    ConformalMap::build(Target::UnitDisk, Normalization::Unbounded { z0 }, b, opts)
}

/// Φ of a doubly connected domain onto q < |w| < 1, component 0 going to the
/// unit circle. Bounded: Φ(α) > 0 with α the boundary's base point and z₁
/// the auxiliary point of the hole. Unbounded: Φ(∞) > 0 with z₀, z₁ the
/// auxiliary points of the two components.
pub fn annulus_map(b: &ParametrizedBoundary, opts: SolveOptions) -> Result<ConformalMap> {
    require(b, Some(2), b.is_bounded(), "annulus_map")?;
    let missing = || CapError::Domain("missing auxiliary point".into());
    let z1 = b.interior_point(1).ok_or_else(missing)?;
    let normalization = if b.is_bounded() {
        Normalization::AnnulusBounded { alpha: base_point(b, None)?, z1 }
    } else {
        Normalization::AnnulusUnbounded { z0: b.interior_point(0).ok_or_else(missing)?, z1 }
    };
    let map = ConformalMap::build(Target::Annulus, normalization, b, opts)?;
    let q = map.q().unwrap_or(f64::NAN);
    if !(q > 0.0 && q < 1.0) {
        return Err(CapError::Numerical(format!("annulus modulus {q} is outside (0, 1)")));
    }
    Ok(map)
}

/// Φ of a bounded multiply connected domain onto the unit disk with circular
/// slits, Φ(α) = 0, Φ′(α) > 0.
pub fn slit_disk_map(b: &ParametrizedBoundary, alpha: Option<C64>, opts: SolveOptions) -> Result<ConformalMap> {
    require(b, None, true, "slit_disk_map")?;
    let alpha = base_point(b, alpha)?;
    let target = if b.len() == 1 { Target::UnitDisk } else { Target::SlitDisk };
    ConformalMap::build(target, Normalization::Bounded { alpha }, b, opts)
}
