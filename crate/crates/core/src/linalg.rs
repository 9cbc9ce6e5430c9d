//! Linear solvers: restart-free GMRES for the Nyström systems and dense LU
//! (via nalgebra) for small systems and the direct backend.

use nalgebra::{DMatrix, DVector};

use crate::error::{CapError, Result};

/// Outcome of a GMRES run. `residuals[k]` is the relative residual after k
/// Arnoldi steps (entry 0 is 1 for a nonzero right-hand side).
#[derive(Debug, Clone, PartialEq)]
pub struct GmresReport {
    pub iterations: usize,
    pub residuals: Vec<f64>,
    pub converged: bool,
}

impl GmresReport {
    pub fn final_residual(&self) -> f64 {
        self.residuals.last().copied().unwrap_or(0.0)
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// GMRES without restart, modified Gram–Schmidt Arnoldi and Givens rotations,
/// starting from x = 0. Stops when the relative residual drops to `tol` or
/// after `max_iter` steps.
pub fn gmres(
    op: impl Fn(&[f64]) -> Vec<f64>,
    b: &[f64],
    tol: f64,
    max_iter: usize,
) -> (Vec<f64>, GmresReport) {
    let n = b.len();
    let beta = norm(b);
    if beta == 0.0 {
        let report = GmresReport { iterations: 0, residuals: vec![0.0], converged: true };
        return (vec![0.0; n], report);
    }
    let max_iter = max_iter.min(n);
    let mut v: Vec<Vec<f64>> = vec![b.iter().map(|x| x / beta).collect()];
    let mut h: Vec<Vec<f64>> = Vec::new(); // column k has k+2 entries
    let mut cs: Vec<f64> = Vec::new();
    let mut sn: Vec<f64> = Vec::new();
    let mut g = vec![beta];
    let mut residuals = vec![1.0];
    let mut converged = false;
    let mut k = 0;
    while k < max_iter {
        let mut w = op(&v[k]);
        let mut col = Vec::with_capacity(k + 2);
        for vi in &v {
            let hij = dot(&w, vi);
            for (wj, vj) in w.iter_mut().zip(vi) {
                *wj -= hij * vj;
            }
            col.push(hij);
        }
        let hnext = norm(&w);
        col.push(hnext);
        for i in 0..k {
            let (a, b) = (col[i], col[i + 1]);
            col[i] = cs[i] * a + sn[i] * b;
            col[i + 1] = -sn[i] * a + cs[i] * b;
        }
        let (a, b) = (col[k], col[k + 1]);
        let r = a.hypot(b);
        let (c, s) = if r == 0.0 { (1.0, 0.0) } else { (a / r, b / r) };
        cs.push(c);
        sn.push(s);
        col[k] = r;
        col[k + 1] = 0.0;
        let gk = g[k];
        g[k] = c * gk;
        g.push(-s * gk);
        h.push(col);
        k += 1;
        let res = g[k].abs() / beta;
        residuals.push(res);
        if res <= tol || hnext == 0.0 {
            converged = res <= tol || hnext == 0.0;
            break;
        }
        v.push(w.iter().map(|x| x / hnext).collect());
    }
    // Back substitution for the k×k triangular system.
    let mut y = vec![0.0; k];
    for i in (0..k).rev() {
        let mut s = g[i];
        for j in i + 1..k {
            s -= h[j][i] * y[j];
        }
        y[i] = s / h[i][i];
    }
    let mut x = vec![0.0; n];
    for (j, yj) in y.iter().enumerate() {
        for (xi, vi) in x.iter_mut().zip(&v[j]) {
            *xi += yj * vi;
        }
    }
    (x, GmresReport { iterations: k, residuals, converged })
}

/// Solves a dense system by LU with partial pivoting.
pub fn solve_dense(a: DMatrix<f64>, b: &[f64]) -> Result<Vec<f64>> {
    let n = a.nrows();
    if a.ncols() != n || b.len() != n {
        return Err(CapError::Numerical("dense solve: dimension mismatch".into()));
    }
    let scale = a.amax();
    let lu = a.lu();
    let u = lu.u();
    let pivot_min = (0..n).map(|i| u[(i, i)].abs()).fold(f64::INFINITY, f64::min);
    if !(pivot_min > 1e-14 * scale) {
        return Err(CapError::Numerical("dense solve: matrix is numerically singular".into()));
    }
    lu.solve(&DVector::from_column_slice(b))
        .map(|x| x.as_slice().to_vec())
        .ok_or_else(|| CapError::Numerical("dense solve failed".into()))
}

/// Solves a small system given by rows.
pub fn solve_rows(rows: &[Vec<f64>], b: &[f64]) -> Result<Vec<f64>> {
    let n = rows.len();
    let a = DMatrix::from_fn(n, n, |i, j| rows[i][j]);
    solve_dense(a, b)
}
