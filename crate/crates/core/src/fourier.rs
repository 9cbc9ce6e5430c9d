//! FFT-based operations on periodic samples: differentiation, conjugation and
//! trigonometric interpolation.

use std::sync::Arc;

use rustfft::{Fft, FftPlanner};

use crate::C64;

/// Forward and inverse plans of one length.
#[derive(Clone)]
pub struct FftPair {
    n: usize,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

impl std::fmt::Debug for FftPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FftPair").field("n", &self.n).finish()
    }
}

impl FftPair {
    pub fn new(n: usize) -> Self {
        let mut planner = FftPlanner::new();
        Self { n, forward: planner.plan_fft_forward(n), inverse: planner.plan_fft_inverse(n) }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Applies a Fourier multiplier m(k), k the signed wavenumber, in place.
    /// The Nyquist mode of an even length is passed to `m` as +n/2.
    pub fn apply_multiplier(&self, data: &mut [C64], m: impl Fn(i64) -> C64) {
        assert_eq!(data.len(), self.n);
        self.forward.process(data);
        let n = self.n as i64;
        let scale = 1.0 / self.n as f64;
        for (j, v) in data.iter_mut().enumerate() {
            let j = j as i64;
            let k = if j <= n / 2 { j } else { j - n };
            *v *= m(k) * scale;
        }
        self.inverse.process(data);
    }

    /// Signed wavenumber multiplier for derivative of order `order`,
    /// with the Nyquist mode zeroed.
    pub fn derivative(&self, x: &[C64], order: u32) -> Vec<C64> {
        let mut data = x.to_vec();
        let n = self.n as i64;
        self.apply_multiplier(&mut data, |k| {
            if n % 2 == 0 && k == n / 2 {
                C64::new(0.0, 0.0)
            } else {
                C64::new(0.0, k as f64).powu(order)
            }
        });
        data
    }

    /// Periodic conjugation of real samples: multiplier −i·sign(k).
    /// cos t ↦ sin t; constants and the Nyquist mode are annihilated.
    pub fn conjugate(&self, x: &[f64]) -> Vec<f64> {
        let mut data: Vec<C64> = x.iter().map(|&v| C64::new(v, 0.0)).collect();
        let n = self.n as i64;
        self.apply_multiplier(&mut data, |k| {
            if k == 0 || (n % 2 == 0 && k == n / 2) {
                C64::new(0.0, 0.0)
            } else {
                C64::new(0.0, -(k.signum() as f64))
            }
        });
        data.iter().map(|v| v.re).collect()
    }
}

/// Derivative of periodic samples on an equispaced grid over [0, 2π).
///
/// Fourier multiplier ik with the Nyquist mode zeroed. The grid offset does
/// not matter, so half-shifted grids work as well.
pub fn spectral_derivative(x: &[C64]) -> Vec<C64> {
    FftPair::new(x.len()).derivative(x, 1)
}

/// Real-valued version of [`spectral_derivative`].
pub fn spectral_derivative_real(x: &[f64]) -> Vec<f64> {
    let data: Vec<C64> = x.iter().map(|&v| C64::new(v, 0.0)).collect();
    spectral_derivative(&data).iter().map(|v| v.re).collect()
}

/// Truncated Fourier series z(t) = Σ c_k e^{ikt}, evaluable with derivatives
/// at any real t.
#[derive(Debug, Clone)]
pub struct FourierSeries {
    terms: Vec<(f64, C64)>,
}

impl FourierSeries {
    /// Interpolates equispaced samples z(2πj/m). Coefficients below
    /// `drop_tol` times the largest are discarded. For even m the Nyquist
    /// coefficient is split evenly between ±m/2 so the interpolant stays real
    /// for real data.
    pub fn from_samples(samples: &[C64], drop_tol: f64) -> Self {
        let m = samples.len();
        let mut data = samples.to_vec();
        FftPlanner::new().plan_fft_forward(m).process(&mut data);
        let scale = 1.0 / m as f64;
        let max = data.iter().map(|c| c.norm()).fold(0.0, f64::max) * scale;
        let mut terms = Vec::new();
        for (j, c) in data.iter().enumerate() {
            let c = *c * scale;
            if c.norm() <= drop_tol * max {
                continue;
            }
            let j = j as i64;
            let mi = m as i64;
            if mi % 2 == 0 && j == mi / 2 {
                terms.push(((mi / 2) as f64, c * 0.5));
                terms.push((-(mi / 2) as f64, c * 0.5));
            } else {
                let k = if j < mi / 2 + mi % 2 { j } else { j - mi };
                terms.push((k as f64, c));
            }
        }
        Self { terms }
    }

    /// Ratio of the largest coefficient with |k| ≥ m/4 to the largest overall;
    /// a rough indicator of how well the samples resolve the curve.
    pub fn tail_ratio(&self, m: usize) -> f64 {
        let max = self.terms.iter().map(|(_, c)| c.norm()).fold(0.0, f64::max);
        let tail = self
            .terms
            .iter()
            .filter(|(k, _)| k.abs() >= (m / 4) as f64)
            .map(|(_, c)| c.norm())
            .fold(0.0, f64::max);
        if max == 0.0 {
            0.0
        } else {
            tail / max
        }
    }

    pub fn eval(&self, t: f64) -> (C64, C64, C64) {
        let mut z = C64::new(0.0, 0.0);
        let mut dz = z;
        let mut d2z = z;
        for &(k, c) in &self.terms {
            let e = C64::from_polar(1.0, k * t) * c;
            z += e;
            dz += e * C64::new(0.0, k);
            d2z -= e * (k * k);
        }
        (z, dz, d2z)
    }
}
