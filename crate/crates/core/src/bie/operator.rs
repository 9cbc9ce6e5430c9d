//! Matrix-free Nyström operators N and M.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use rayon::prelude::*;

use super::kernels::kernel_n;
use crate::fourier::FftPair;
use crate::geometry::{winding, Coefficient, DiscretizedBoundary};
use crate::C64;

/// Discretized N and M on a fixed boundary. Applying either costs O(N²) for
/// N nodes in total; rows are processed in parallel.
///
/// Both operators are applied in subtracted form,
/// (𝐊x)_i = Σ_{j≠i} w K_ij (x_j − x_i) + x_i (𝐊1)(s_i) + diagonal limit,
/// where 𝐍1 and 𝐌1 are known exactly from winding numbers. The subtracted
/// sums have bounded integrands, which keeps the rows next to graded corners
/// accurate; on smooth curves the rule stays spectrally accurate.
#[derive(Debug, Clone)]
pub struct BieOperator<'a> {
    d: &'a DiscretizedBoundary,
    /// w η′_j / A_j
    coef: Vec<C64>,
    /// Σ_{j≠i} w η′_j / (A_j (η_j − η_i))
    ones: Vec<C64>,
    /// (𝐍1)(s_i)
    n_one: Vec<f64>,
    fft: FftPair,
}

impl<'a> BieOperator<'a> {
    pub fn new(d: &'a DiscretizedBoundary) -> Self {
        let w = d.weight();
        let coef: Vec<C64> = (0..d.total()).map(|j| d.dz[j] * w / d.a[j]).collect();
        let ones = cauchy_sums(&d.z, &coef);
        let n_one = constant_image(d);
        Self { d, coef, ones, n_one, fft: FftPair::new(d.n()) }
    }

    pub fn boundary(&self) -> &DiscretizedBoundary {
        self.d
    }

    pub fn len(&self) -> usize {
        self.d.total()
    }

    pub fn is_empty(&self) -> bool {
        self.d.total() == 0
    }

    /// A_i Σ_{j≠i} c_j (x_j − x_i)/(η_j − η_i) with c_j = w η′_j / A_j.
    fn subtracted(&self, x: &[f64]) -> Vec<C64> {
        let cx: Vec<C64> = self.coef.iter().zip(x).map(|(c, &v)| c * v).collect();
        let s = cauchy_sums(&self.d.z, &cx);
        (0..x.len()).map(|i| self.d.a[i] * (s[i] - self.ones[i] * x[i])).collect()
    }

    /// 𝐍x at the nodes.
    pub fn apply_n(&self, x: &[f64]) -> Vec<f64> {
        let s = self.subtracted(x);
        (0..x.len()).map(|i| s[i].im / PI + self.n_one[i] * x[i]).collect()
    }

    /// 𝐌x at the nodes. 𝐌 annihilates constants; the diagonal limit of the
    /// subtracted integrand is x′(t_i), taken spectrally per component.
    pub fn apply_m(&self, x: &[f64]) -> Vec<f64> {
        self.apply_both(x).1
    }

    /// (𝐍x, 𝐌x) sharing one pass over the node pairs.
    pub fn apply_both(&self, x: &[f64]) -> (Vec<f64>, Vec<f64>) {
        let s = self.subtracted(x);
        let nx = (0..x.len()).map(|i| s[i].im / PI + self.n_one[i] * x[i]).collect();
        let mut mx: Vec<f64> = s.iter().map(|v| v.re / PI).collect();
        let scale = self.d.weight() / PI;
        for k in 0..self.d.components() {
            let r = self.d.range(k);
            let data: Vec<C64> = x[r.clone()].iter().map(|&v| C64::new(v, 0.0)).collect();
            let dx = self.fft.derivative(&data, 1);
            for (m, v) in mx[r].iter_mut().zip(&dx) {
                *m += scale * v.re;
            }
        }
        (nx, mx)
    }

    /// Dense matrix of 𝐍: w N(t_i, t_j) off the diagonal, and on the diagonal
    /// the value that makes row sums equal (𝐍1)(s_i).
    pub fn assemble_n(&self) -> DMatrix<f64> {
        let w = self.d.weight();
        let nn = self.len();
        let mut a = DMatrix::from_fn(nn, nn, |i, j| if i == j { 0.0 } else { w * kernel_n(self.d, i, j) });
        for i in 0..nn {
            a[(i, i)] = self.n_one[i] - (self.d.a[i] * self.ones[i]).im / PI;
        }
        a
    }
}

/// S_i = Σ_{j≠i} c_j / (η_j − η_i).
fn cauchy_sums(z: &[C64], c: &[C64]) -> Vec<C64> {
    (0..z.len())
        .into_par_iter()
        .map(|i| {
            let zi = z[i];
            let (mut sr, mut si) = (0.0, 0.0);
            for (j, (zj, c)) in z.iter().zip(c).enumerate() {
                if j == i {
                    continue;
                }
                let (dr, di) = (zj.re - zi.re, zj.im - zi.im);
                let inv = 1.0 / (dr * dr + di * di);
                sr += (c.re * dr + c.im * di) * inv;
                si += (c.im * dr - c.re * di) * inv;
            }
            C64::new(sr, si)
        })
        .collect()
}

/// (𝐍1)(s) at a smooth boundary point. With the domain on the left,
/// PV∮ dη/(η − η(s)) = ±iπ (+ bounded, − unbounded). For A = η − α the
/// partial fraction A(s)/(A(η)(η − η(s))) = 1/(η − η(s)) − 1/(η − α) adds
/// −2πi times the total winding number of the boundary about α.
fn constant_image(d: &DiscretizedBoundary) -> Vec<f64> {
    let sigma = if d.is_bounded() { 1.0 } else { -1.0 };
    let value = match d.coefficient() {
        Coefficient::Unit => sigma,
        Coefficient::Shifted(alpha) => {
            let wind: i32 = (0..d.components()).map(|k| winding(&d.z[d.range(k)], alpha)).sum();
            sigma - 2.0 * wind as f64
        }
    };
    vec![value; d.total()]
}
