//! The Nyström solve of (I − 𝐍)ρ = −𝐌γ and extraction of ν.


use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::operator::BieOperator;
use crate::error::{CapError, Result};
use crate::geometry::{Coefficient, DiscretizedBoundary};
use crate::linalg::{gmres, GmresReport};
use crate::cauchy::boundary_value;
use crate::C64;

pub const GMRES_TOL: f64 = 1e-14;
pub const GMRES_MAX_ITER: usize = 100;
/// A run that hits the iteration cap is still accepted below this residual.
pub const GMRES_ACCEPT: f64 = 1e-10;
/// Largest system the dense backend will factor.
pub const DENSE_LIMIT: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    /// Matrix-free GMRES without restart.
    #[default]
    Gmres,
    /// Dense LU of I − 𝐍, factored once per boundary.
    Dense,
}

/// Density ρ and the piecewise constant ν for one right-hand side γ.
#[derive(Debug, Clone, PartialEq)]
pub struct BieSolution {
    pub rho: Vec<f64>,
    /// One value per component: the arc-length weighted mean of the raw ν
    /// samples, which keeps the few nodes beside graded corners from biasing it.
    pub nu: Vec<f64>,
    /// Largest deviation of a raw ν sample from its component value.
    pub nu_deviation: f64,
    pub gamma: Vec<f64>,
    pub gmres: Option<GmresReport>,
}

impl BieSolution {
    /// ν expanded to one value per node.
    pub fn nu_at_nodes(&self, n: usize) -> Vec<f64> {
        self.nu.iter().flat_map(|&v| std::iter::repeat(v).take(n)).collect()
    }
}

/// Reusable solver for many right-hand sides on one boundary.
pub struct BieSolver<'a> {
    op: BieOperator<'a>,
    backend: Backend,
    lu: Option<nalgebra::LU<f64, nalgebra::Dyn, nalgebra::Dyn>>,
}

impl<'a> BieSolver<'a> {
    pub fn new(d: &'a DiscretizedBoundary, backend: Backend) -> Result<Self> {
        let op = BieOperator::new(d);
        let lu = match backend {
            Backend::Gmres => None,
            Backend::Dense => {
                let nn = op.len();
                if nn > DENSE_LIMIT {
                    return Err(CapError::Config(format!(
                        "dense backend is limited to {DENSE_LIMIT} nodes, got {nn}"
                    )));
                }
                let a = DMatrix::<f64>::identity(nn, nn) - op.assemble_n();
                Some(a.lu())
            }
        };
        Ok(Self { op, backend, lu })
    }

    pub fn operator(&self) -> &BieOperator<'a> {
        &self.op
    }

    pub fn boundary(&self) -> &DiscretizedBoundary {
        self.op.boundary()
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    /// Solves for ρ and ν given γ at the nodes.
    pub fn solve(&self, gamma: &[f64]) -> Result<BieSolution> {
        let d = self.boundary();
        if gamma.len() != d.total() {
            return Err(CapError::Config(format!(
                "gamma has {} samples, boundary has {} nodes",
                gamma.len(),
                d.total()
            )));
        }
        if gamma.iter().any(|g| !g.is_finite()) {
            return Err(CapError::Numerical("gamma contains non-finite values".into()));
        }
        let (ngamma, mgamma) = self.op.apply_both(gamma);
        let rhs: Vec<f64> = mgamma.iter().map(|v| -v).collect();
        let (rho, report) = match &self.lu {
            Some(lu) => {
                let x = lu
                    .solve(&nalgebra::DVector::from_column_slice(&rhs))
                    .ok_or_else(|| CapError::Numerical("dense factorization is singular".into()))?;
                (x.as_slice().to_vec(), None)
            }
            None => {
                let (x, report) = gmres(
                    |v| {
                        let nv = self.op.apply_n(v);
                        v.iter().zip(nv).map(|(a, b)| a - b).collect()
                    },
                    &rhs,
                    GMRES_TOL,
                    GMRES_MAX_ITER,
                );
                if !report.converged && report.final_residual() > GMRES_ACCEPT {
                    return Err(CapError::Solver {
                        message: format!(
                            "GMRES stopped after {} iterations at relative residual {:.3e}",
                            report.iterations,
                            report.final_residual()
                        ),
                        residuals: report.residuals,
                    });
                }
                (x, Some(report))
            }
        };
        let mrho = self.op.apply_m(&rho);
        let raw: Vec<f64> = (0..rho.len())
            .map(|i| 0.5 * (mrho[i] - (gamma[i] - ngamma[i])))
            .collect();
        let mut nu = Vec::with_capacity(d.components());
        let mut dev: f64 = 0.0;
        for k in 0..d.components() {
            let part = &raw[d.range(k)];
            let speed: Vec<f64> = d.dz[d.range(k)].iter().map(|v| v.norm()).collect();
            let mean = part.iter().zip(&speed).map(|(v, s)| v * s).sum::<f64>() / speed.iter().sum::<f64>();
            dev = part.iter().fold(dev, |m, v| m.max((v - mean).abs()));
            nu.push(mean);
        }
        Ok(BieSolution { rho, nu, nu_deviation: dev, gamma: gamma.to_vec(), gmres: report })
    }

    /// ρ at a boundary point; see [`density_at`].
    pub fn density_at(&self, sol: &BieSolution, z: C64) -> f64 {
        density_at(self.boundary(), sol, z)
    }
}

/// ρ at a boundary point z that need not be a node (corner vertices, for
/// example).
///
/// f = (γ + ν + iρ)/A is analytic, so its value at z comes from the
/// subtracted Cauchy quotient, which stays valid at corners where the
/// pointwise integral equation does not.
pub fn density_at(d: &DiscretizedBoundary, sol: &BieSolution, z: C64) -> f64 {
    let f: Vec<C64> = (0..d.total())
        .map(|j| C64::new(sol.gamma[j] + sol.nu[d.component_of(j)], sol.rho[j]) / d.a[j])
        .collect();
    let az = match d.coefficient() {
        Coefficient::Shifted(alpha) => z - alpha,
        Coefficient::Unit => C64::new(1.0, 0.0),
    };
    (az * boundary_value(d, &f, z)).im
}

/// One-shot solve with a fresh solver.
pub fn solve_bie(d: &DiscretizedBoundary, gamma: &[f64], backend: Backend) -> Result<BieSolution> {
    BieSolver::new(d, backend)?.solve(gamma)
}
