//! Generalized condensers and harmonic measures of boundary components.
//!
//! Both reduce to the same family of solves: for each hole k the density for
//! γ_k = log|η − α_k|, followed by a small linear system in the piecewise
//! constants ν_{j,k}.

use std::f64::consts::TAU;

use super::InvariantResult;
use crate::bie::{BieSolution, BieSolver};
use crate::cauchy::cauchy_eval;
use crate::error::{CapError, Result};
use crate::geometry::{default_coefficient, discretize_graded, DiscretizedBoundary, ParametrizedBoundary};
use crate::linalg::solve_rows;
use crate::maps::SolveOptions;
use crate::C64;

/// Condenser (Ω, E, δ): component 0 of the boundary is ∂Ω, components 1..m
/// are the plates ∂E_k held at levels δ_k.
#[derive(Debug, Clone)]
pub struct CondenserSpec {
    pub boundary: ParametrizedBoundary,
    pub levels: Vec<f64>,
}

impl CondenserSpec {
    pub fn new(boundary: ParametrizedBoundary, levels: Vec<f64>) -> Result<Self> {
        if !boundary.is_bounded() {
            return Err(CapError::Domain("a condenser needs a bounded domain".into()));
        }
        if boundary.len() < 2 {
            return Err(CapError::Domain("a condenser needs at least one plate".into()));
        }
        if levels.len() != boundary.len() - 1 {
            return Err(CapError::Config(format!(
                "{} levels for {} plates",
                levels.len(),
                boundary.len() - 1
            )));
        }
        if levels.iter().any(|v| !v.is_finite()) {
            return Err(CapError::Config("levels must be finite".into()));
        }
        Ok(Self { boundary, levels })
    }

    /// All plates at level 1.
    pub fn unit_levels(boundary: ParametrizedBoundary) -> Result<Self> {
        let m = boundary.len().saturating_sub(1);
        Self::new(boundary, vec![1.0; m])
    }
}

/// Solutions for γ_k = log|η − α_k|, k = 1..m, on one bounded boundary.
#[derive(Debug, Clone)]
struct LogBasis {
    d: DiscretizedBoundary,
    alpha: C64,
    holes: Vec<C64>,
    sols: Vec<BieSolution>,
}

impl LogBasis {
    fn solve(b: &ParametrizedBoundary, opts: SolveOptions) -> Result<Self> {
        let d = discretize_graded(b, opts.n, default_coefficient(b), opts.grading)?;
        let alpha = b.alpha().ok_or_else(|| CapError::Domain("missing base point".into()))?;
        let holes: Vec<C64> = (1..b.len())
            .map(|k| b.interior_point(k).ok_or_else(|| CapError::Domain(format!("no point inside component {k}"))))
            .collect::<Result<_>>()?;
        let solver = BieSolver::new(&d, opts.backend)?;
        let mut sols = Vec::with_capacity(holes.len());
        for &ak in &holes {
            let gamma: Vec<f64> = d.z.iter().map(|&z| (z - ak).norm().ln()).collect();
            sols.push(solver.solve(&gamma)?);
        }
        Ok(Self { d, alpha, holes, sols })
    }

    fn m(&self) -> usize {
        self.holes.len()
    }

    fn nu_deviation(&self) -> f64 {
        self.sols.iter().map(|s| s.nu_deviation).fold(0.0, f64::max)
    }

    /// Solves [ν_{j,k} | 1] (a, c) = rhs.
    fn constants(&self, rhs: &[f64]) -> Result<(Vec<f64>, f64)> {
        let m = self.m();
        let rows: Vec<Vec<f64>> = (0..=m)
            .map(|j| {
                let mut row: Vec<f64> = self.sols.iter().map(|s| s.nu[j]).collect();
                row.push(1.0);
                row
            })
            .collect();
        let mut x = solve_rows(&rows, rhs)?;
        let c = x.pop().unwrap_or(0.0);
        Ok((x, c))
    }

    /// Re[(z−α)f(z)] + c − Σ a_k log|z − α_k| with A f = Σ a_k (γ_k + ν_k + iρ_k).
    fn potential(&self, a: &[f64], c: f64, points: &[C64]) -> Result<Vec<f64>> {
        let n = self.d.n();
        let f: Vec<C64> = (0..self.d.total())
            .map(|i| {
                let mut v = C64::new(0.0, 0.0);
                for (ak, s) in a.iter().zip(&self.sols) {
                    v += C64::new(s.gamma[i] + s.nu[i / n], s.rho[i]) * *ak;
                }
                v / self.d.a[i]
            })
            .collect();
        let fz = cauchy_eval(&self.d, &f, points)?;
        Ok(points
            .iter()
            .zip(&fz.values)
            .map(|(&z, &fv)| {
                let logs: f64 = a.iter().zip(&self.holes).map(|(ak, &h)| ak * (z - h).norm().ln()).sum();
                ((z - self.alpha) * fv).re + c - logs
            })
            .collect())
    }
}

/// A solved condenser: capacity and potential.
#[derive(Debug, Clone)]
pub struct Condenser {
    basis: LogBasis,
    levels: Vec<f64>,
    a: Vec<f64>,
    c: f64,
}

impl Condenser {
    pub fn solve(spec: &CondenserSpec, opts: SolveOptions) -> Result<Self> {
        let basis = LogBasis::solve(&spec.boundary, opts)?;
        let mut rhs = vec![0.0];
        rhs.extend(&spec.levels);
        let (a, c) = basis.constants(&rhs)?;
        Ok(Self { basis, levels: spec.levels.clone(), a, c })
    }

    /// The constants a_k = (1/2π)∮_{Γ_k} ∂u/∂n ds.
    pub fn flux_constants(&self) -> &[f64] {
        &self.a
    }

    /// cap = 2π Σ δ_k a_k, with the contributions 2πδ_k a_k.
    pub fn capacity(&self) -> InvariantResult {
        let contributions: Vec<f64> = self.levels.iter().zip(&self.a).map(|(d, a)| TAU * d * a).collect();
        InvariantResult {
            value: contributions.iter().sum(),
            contributions,
            nu_deviation: self.basis.nu_deviation(),
            n: self.basis.d.n(),
        }
    }

    /// The potential u at interior points.
    pub fn potential(&self, points: &[C64]) -> Result<Vec<f64>> {
        self.basis.potential(&self.a, self.c, points)
    }

    pub fn discretization(&self) -> &DiscretizedBoundary {
        &self.basis.d
    }
}

pub fn condenser_capacity(spec: &CondenserSpec, opts: SolveOptions) -> Result<InvariantResult> {
    Ok(Condenser::solve(spec, opts)?.capacity())
}

pub fn condenser_potential(spec: &CondenserSpec, opts: SolveOptions, points: &[C64]) -> Result<Vec<f64>> {
    Condenser::solve(spec, opts)?.potential(points)
}

/// Harmonic measures σ_k of the boundary components of a bounded multiply
/// connected domain.
#[derive(Debug, Clone)]
pub struct HarmonicMeasures {
    basis: LogBasis,
    /// (a, c) for σ_k, k = 0..m.
    constants: Vec<(Vec<f64>, f64)>,
}

impl HarmonicMeasures {
    pub fn solve(b: &ParametrizedBoundary, opts: SolveOptions) -> Result<Self> {
        if !b.is_bounded() || b.len() < 2 {
            return Err(CapError::Domain("harmonic measures need a bounded multiply connected domain".into()));
        }
        let basis = LogBasis::solve(b, opts)?;
        let m = basis.m();
        let constants = (0..=m)
            .map(|k| {
                let rhs: Vec<f64> = (0..=m).map(|j| if j == k { 1.0 } else { 0.0 }).collect();
                basis.constants(&rhs)
            })
            .collect::<Result<_>>()?;
        Ok(Self { basis, constants })
    }

    pub fn components(&self) -> usize {
        self.basis.m() + 1
    }

    pub fn nu_deviation(&self) -> f64 {
        self.basis.nu_deviation()
    }

    /// σ_k at interior points. Each σ_k comes from its own boundary data, so
    /// Σ σ_k = 1 is a check on the solve rather than an identity.
    pub fn sigma(&self, k: usize, points: &[C64]) -> Result<Vec<f64>> {
        let m = self.basis.m();
        if k > m {
            return Err(CapError::Config(format!("component index {k} exceeds {m}")));
        }
        let (a, c) = &self.constants[k];
        self.basis.potential(a, *c, points)
    }
}

pub fn harmonic_measure_mc(b: &ParametrizedBoundary, k: usize, points: &[C64], opts: SolveOptions) -> Result<Vec<f64>> {
    HarmonicMeasures::solve(b, opts)?.sigma(k, points)
}

