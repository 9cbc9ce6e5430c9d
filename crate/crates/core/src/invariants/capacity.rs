//! Logarithmic, hyperbolic and elliptic capacities.

use super::InvariantResult;
use crate::bie::BieSolver;
use crate::error::{CapError, Result};
use crate::geometry::{build_boundary, default_coefficient, discretize_graded, BoundaryComponent, ParametrizedBoundary};
use crate::linalg::solve_rows;
use crate::maps::{annulus_map, SolveOptions};
use crate::C64;

/// Logarithmic capacity κ of the compact set E whose complement is the
/// unbounded domain bounded by `b`.
///
/// Solves one equation per component with γ_j = −log|η − α_j| (A ≡ 1), then
/// the system ν_{i,·}·ℓ − log κ = 0 (i = 0..m), Σℓ_j = 1.
pub fn log_capacity(b: &ParametrizedBoundary, opts: SolveOptions) -> Result<InvariantResult> {
    if b.is_bounded() {
        return Err(CapError::Domain("logarithmic capacity needs the unbounded complement of E".into()));
    }
    let d = discretize_graded(b, opts.n, default_coefficient(b), opts.grading)?;
    let solver = BieSolver::new(&d, opts.backend)?;
    let m1 = b.len();
    let mut nu = Vec::with_capacity(m1);
    let mut dev: f64 = 0.0;
    for j in 0..m1 {
        let aj = b.interior_point(j).ok_or_else(|| CapError::Domain(format!("no point inside component {j}")))?;
        let gamma: Vec<f64> = d.z.iter().map(|&z| -(z - aj).norm().ln()).collect();
        let sol = solver.solve(&gamma)?;
        dev = dev.max(sol.nu_deviation);
        nu.push(sol.nu);
    }
    let mut rows: Vec<Vec<f64>> = (0..m1)
        .map(|i| {
            let mut row: Vec<f64> = (0..m1).map(|j| nu[j][i]).collect();
            row.push(-1.0);
            row
        })
        .collect();
    let mut last = vec![1.0; m1];
    last.push(0.0);
    rows.push(last);
    let mut rhs = vec![0.0; m1];
    rhs.push(1.0);
    let x = solve_rows(&rows, &rhs)?;
    Ok(InvariantResult::new(x[m1].exp(), dev, opts.n))
}

/// Hyperbolic capacity of a compact connected E inside the unit disk: the
/// modulus q of the annulus conformally equivalent to B² \ E. `alpha` is a
/// point of B² \ E (chosen automatically when absent).
pub fn hyperbolic_capacity(e: &BoundaryComponent, alpha: Option<C64>, opts: SolveOptions) -> Result<InvariantResult> {
    let disk = BoundaryComponent::circle(C64::new(0.0, 0.0), 1.0)?;
    let g = build_boundary(vec![disk, e.clone()], true, alpha)?;
    let map = annulus_map(&g, opts)?;
    Ok(InvariantResult::new(map.q().unwrap_or(f64::NAN), map.nu_deviation(), opts.n))
}

/// Elliptic capacity √q, q the modulus of the annulus equivalent to the
/// region between E and its antipodal set E* = {−1/ā : a ∈ E}.
pub fn elliptic_capacity(e: &BoundaryComponent, opts: SolveOptions) -> Result<InvariantResult> {
    let star = e.mobius_image(
        [C64::new(0.0, 0.0), C64::new(-1.0, 0.0), C64::new(1.0, 0.0), C64::new(0.0, 0.0)],
        true,
    )?;
    let outline = e.outline(1024);
    let origin_inside = crate::geometry::winding(&outline, C64::new(0.0, 0.0)) != 0;
    // If 0 ∈ E then ∞ ∈ E* and the region between them is bounded by ∂E*.
    let g = if origin_inside {
        build_boundary(vec![star, e.clone()], true, None)?
    } else {
        build_boundary(vec![e.clone(), star], false, None)?
    };
    let map = annulus_map(&g, opts)?;
    Ok(InvariantResult::new(map.q().unwrap_or(f64::NAN).sqrt(), map.nu_deviation(), opts.n))
}
