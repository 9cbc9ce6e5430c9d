//! Concrete 2π-periodic parametrizations.

use std::f64::consts::TAU;
use std::fmt;
use std::sync::Arc;

use crate::error::{geometry, Result};
use crate::fourier::FourierSeries;
use crate::C64;

/// Position and first two parameter derivatives of a curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    pub z: C64,
    pub dz: C64,
    pub d2z: C64,
}

/// A closed curve η̂(τ) with period 2π.
///
/// `eval` must accept any real τ. `corners` lists the parameters in [0, 2π)
/// where the tangent may jump; the curve is smooth elsewhere.
pub trait Curve: Send + Sync + fmt::Debug {
    fn kind(&self) -> &'static str;
    fn eval(&self, tau: f64) -> CurvePoint;
    fn corners(&self) -> Vec<f64> {
        Vec::new()
    }
}

fn wrap(tau: f64) -> f64 {
    let t = tau.rem_euclid(TAU);
    if t >= TAU {
        0.0
    } else {
        t
    }
}

#[derive(Debug, Clone)]
pub struct Circle {
    pub center: C64,
    pub radius: f64,
}

impl Curve for Circle {
    fn kind(&self) -> &'static str {
        "circle"
    }

    fn eval(&self, tau: f64) -> CurvePoint {
        let e = C64::from_polar(self.radius, tau);
        CurvePoint { z: self.center + e, dz: C64::i() * e, d2z: -e }
    }
}

/// Ellipse c + e^{iφ}(a cos τ + i b sin τ).
#[derive(Debug, Clone)]
pub struct Ellipse {
    pub center: C64,
    pub semi_x: f64,
    pub semi_y: f64,
    pub rotation: f64,
}

impl Curve for Ellipse {
    fn kind(&self) -> &'static str {
        "ellipse"
    }

    fn eval(&self, tau: f64) -> CurvePoint {
        let rot = C64::from_polar(1.0, self.rotation);
        let (s, c) = tau.sin_cos();
        let z = C64::new(self.semi_x * c, self.semi_y * s);
        let dz = C64::new(-self.semi_x * s, self.semi_y * c);
        CurvePoint { z: self.center + rot * z, dz: rot * dz, d2z: -rot * z }
    }
}

/// One piece of a piecewise boundary: straight segment or circular arc.
#[derive(Debug, Clone, Copy)]
enum Edge {
    Segment { from: C64, to: C64 },
    Arc { center: C64, radius: f64, start: f64, sweep: f64 },
}

impl Edge {
    /// Point and derivatives at local parameter σ ∈ [0, 1].
    fn eval(&self, sigma: f64) -> (C64, C64, C64) {
        match *self {
            Edge::Segment { from, to } => {
                let d = to - from;
                (from + d * sigma, d, C64::new(0.0, 0.0))
            }
            Edge::Arc { center, radius, start, sweep } => {
                let e = C64::from_polar(radius, start + sweep * sigma);
                (center + e, C64::i() * sweep * e, -(sweep * sweep) * e)
            }
        }
    }

    fn arc_through(from: C64, to: C64, through: C64) -> Result<Edge> {
        // Circumcenter of the three points.
        let (a, b, c) = (from, through, to);
        let d = 2.0 * (a.re * (b.im - c.im) + b.re * (c.im - a.im) + c.re * (a.im - b.im));
        if d.abs() < 1e-14 * (a - c).norm().max(1.0).powi(2) {
            return geometry(format!("arc points {from}, {through}, {to} are collinear"));
        }
        let (a2, b2, c2) = (a.norm_sqr(), b.norm_sqr(), c.norm_sqr());
        let ux = (a2 * (b.im - c.im) + b2 * (c.im - a.im) + c2 * (a.im - b.im)) / d;
        let uy = (a2 * (c.re - b.re) + b2 * (a.re - c.re) + c2 * (b.re - a.re)) / d;
        let center = C64::new(ux, uy);
        let radius = (from - center).norm();
        let start = (from - center).arg();
        let to_t = ((through - center).arg() - start).rem_euclid(TAU);
        let to_end = ((to - center).arg() - start).rem_euclid(TAU);
        let sweep = if to_t < to_end { to_end } else { to_end - TAU };
        Ok(Edge::Arc { center, radius, start, sweep })
    }
}

/// Closed chain of segments and circular arcs between vertices. Each edge
/// gets parameter length 2π/K, so vertex k sits at τ = 2πk/K.
#[derive(Debug, Clone)]
pub struct PiecewiseCurve {
    kind: &'static str,
    vertices: Vec<C64>,
    edges: Vec<Edge>,
}

impl PiecewiseCurve {
    pub fn polygon(vertices: &[C64]) -> Result<Self> {
        Self::polycircular(vertices, &vec![None; vertices.len()]).map(|mut c| {
            c.kind = "polygon";
            c
        })
    }

    /// `through[k]`, when present, makes edge k (vertex k to k+1) a circular
    /// arc through that point.
    pub fn polycircular(vertices: &[C64], through: &[Option<C64>]) -> Result<Self> {
        let k = vertices.len();
        if k < 2 || (k < 3 && through.iter().all(Option::is_none)) {
            return geometry("a piecewise curve needs at least 3 vertices (or 2 with an arc)");
        }
        if through.len() != k {
            return geometry(format!("{} vertices but {} edge descriptors", k, through.len()));
        }
        let scale = vertices.iter().map(|v| v.norm()).fold(1.0, f64::max);
        let mut edges = Vec::with_capacity(k);
        for i in 0..k {
            let from = vertices[i];
            let to = vertices[(i + 1) % k];
            if (to - from).norm() <= 1e-13 * scale {
                return geometry(format!("consecutive vertices {i} and {} coincide", (i + 1) % k));
            }
            edges.push(match through[i] {
                None => Edge::Segment { from, to },
                Some(p) => Edge::arc_through(from, to, p)?,
            });
        }
        Ok(Self { kind: "polycircular", vertices: vertices.to_vec(), edges })
    }

    pub fn vertices(&self) -> &[C64] {
        &self.vertices
    }
}

impl Curve for PiecewiseCurve {
    fn kind(&self) -> &'static str {
        self.kind
    }

    fn eval(&self, tau: f64) -> CurvePoint {
        let k = self.edges.len();
        let x = wrap(tau) * k as f64 / TAU;
        let i = (x.floor() as usize).min(k - 1);
        let sigma = x - i as f64;
        let (z, dz, d2z) = self.edges[i].eval(sigma);
        let s = k as f64 / TAU;
        CurvePoint { z, dz: dz * s, d2z: d2z * s * s }
    }

    fn corners(&self) -> Vec<f64> {
        let k = self.edges.len();
        (0..k).map(|i| TAU * i as f64 / k as f64).collect()
    }
}

/// Smooth curve represented by a truncated Fourier series, built either from
/// equispaced samples or from a closure.
#[derive(Debug, Clone)]
pub struct FourierCurve {
    series: FourierSeries,
}

impl FourierCurve {
    /// Trigonometric interpolant of samples z(2πj/m), j = 0..m.
    pub fn from_samples(samples: &[C64]) -> Result<Self> {
        if samples.len() < 8 {
            return geometry("need at least 8 samples for a sampled curve");
        }
        Ok(Self { series: FourierSeries::from_samples(samples, 1e-17) })
    }

    /// Samples `f` at `m` points and interpolates. Fails if the last quarter of
    /// the spectrum is not negligible, i.e. `m` does not resolve `f`.
    pub fn from_fn(f: impl Fn(f64) -> C64, m: usize) -> Result<Self> {
        let samples: Vec<C64> = (0..m).map(|j| f(TAU * j as f64 / m as f64)).collect();
        let curve = Self::from_samples(&samples)?;
        let tail = curve.series.tail_ratio(m);
        if tail > 1e-13 {
            return geometry(format!(
                "{m} samples do not resolve the curve (spectral tail {tail:.1e})"
            ));
        }
        Ok(curve)
    }
}

impl Curve for FourierCurve {
    fn kind(&self) -> &'static str {
        "samples"
    }

    fn eval(&self, tau: f64) -> CurvePoint {
        let (z, dz, d2z) = self.series.eval(tau);
        CurvePoint { z, dz, d2z }
    }
}

/// Image of a curve under w = (a u + b)/(c u + d), with u = z or u = z̄.
#[derive(Debug, Clone)]
pub struct MobiusCurve {
    inner: Arc<dyn Curve>,
    coeffs: [C64; 4],
    conjugate: bool,
}

impl MobiusCurve {
    pub fn new(inner: Arc<dyn Curve>, coeffs: [C64; 4], conjugate: bool) -> Result<Self> {
        let [a, b, c, d] = coeffs;
        if (a * d - b * c).norm() == 0.0 {
            return geometry("degenerate Möbius coefficients");
        }
        Ok(Self { inner, coeffs, conjugate })
    }
}

impl Curve for MobiusCurve {
    fn kind(&self) -> &'static str {
        self.inner.kind()
    }

    fn eval(&self, tau: f64) -> CurvePoint {
        let p = self.inner.eval(tau);
        let (u, du, d2u) =
            if self.conjugate { (p.z.conj(), p.dz.conj(), p.d2z.conj()) } else { (p.z, p.dz, p.d2z) };
        let [a, b, c, d] = self.coeffs;
        let det = a * d - b * c;
        let den = c * u + d;
        let t1 = det / (den * den);
        let t2 = -2.0 * c * det / (den * den * den);
        CurvePoint { z: (a * u + b) / den, dz: t1 * du, d2z: t2 * du * du + t1 * d2u }
    }

    fn corners(&self) -> Vec<f64> {
        self.inner.corners()
    }
}

/// Curve from user closures for η̂, η̂′ and η̂″.
#[derive(Clone)]
pub struct ClosureCurve {
    f: Arc<dyn Fn(f64) -> CurvePoint + Send + Sync>,
    corners: Vec<f64>,
}

impl ClosureCurve {
    pub fn new(f: impl Fn(f64) -> CurvePoint + Send + Sync + 'static, corners: Vec<f64>) -> Self {
        Self { f: Arc::new(f), corners }
    }
}

impl fmt::Debug for ClosureCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClosureCurve").field("corners", &self.corners).finish()
    }
}

impl Curve for ClosureCurve {
    fn kind(&self) -> &'static str {
        "custom"
    }

    fn eval(&self, tau: f64) -> CurvePoint {
        (self.f)(tau)
    }

    fn corners(&self) -> Vec<f64> {
        self.corners.clone()
    }
}
