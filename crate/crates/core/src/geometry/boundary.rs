//! Boundary components, orientation normalisation and validity checks.

use std::f64::consts::{PI, TAU};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::curves::{
    Circle, ClosureCurve, Curve, CurvePoint, Ellipse, FourierCurve, MobiusCurve, PiecewiseCurve,
};
use crate::error::{geometry, CapError, Result};
use crate::C64;

/// Samples per component used for winding numbers, distances and
/// intersection tests.
const OUTLINE_SAMPLES: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Ccw,
    Cw,
}

/// One closed Jordan curve of the boundary.
#[derive(Debug, Clone)]
pub struct BoundaryComponent {
    curve: Arc<dyn Curve>,
    reversed: bool,
    interior_point: Option<C64>,
}

impl BoundaryComponent {
    pub fn from_curve(curve: Arc<dyn Curve>) -> Self {
        Self { curve, reversed: false, interior_point: None }
    }

    pub fn circle(center: C64, radius: f64) -> Result<Self> {
        if !(radius > 0.0) {
            return geometry(format!("circle radius must be positive, got {radius}"));
        }
        Ok(Self::from_curve(Arc::new(Circle { center, radius })))
    }

    /// Ellipse c + e^{iφ}(a cos τ + i b sin τ).
    pub fn ellipse(center: C64, semi_x: f64, semi_y: f64, rotation: f64) -> Result<Self> {
        if !(semi_x > 0.0 && semi_y > 0.0) {
            return geometry("ellipse semi-axes must be positive");
        }
        Ok(Self::from_curve(Arc::new(Ellipse { center, semi_x, semi_y, rotation })))
    }

    pub fn polygon(vertices: &[C64]) -> Result<Self> {
        Ok(Self::from_curve(Arc::new(PiecewiseCurve::polygon(vertices)?)))
    }

    pub fn polycircular(vertices: &[C64], through: &[Option<C64>]) -> Result<Self> {
        Ok(Self::from_curve(Arc::new(PiecewiseCurve::polycircular(vertices, through)?)))
    }

    /// Smooth curve through equispaced samples (trigonometric interpolation).
    pub fn samples(points: &[C64]) -> Result<Self> {
        Ok(Self::from_curve(Arc::new(FourierCurve::from_samples(points)?)))
    }

    /// Smooth curve from a parametrization; derivatives are obtained from a
    /// trigonometric interpolant on `resolution` samples.
    pub fn parametric(f: impl Fn(f64) -> C64, resolution: usize) -> Result<Self> {
        Ok(Self::from_curve(Arc::new(FourierCurve::from_fn(f, resolution)?)))
    }

    /// Curve from closures supplying η̂, η̂′, η̂″ directly.
    pub fn closure(
        f: impl Fn(f64) -> CurvePoint + Send + Sync + 'static,
        corners: Vec<f64>,
    ) -> Self {
        Self::from_curve(Arc::new(ClosureCurve::new(f, corners)))
    }

    /// Image under w = (a u + b)/(c u + d), u = z or z̄. The point must map
    /// away from ∞. Anti-Möbius images reverse orientation, so the result
    /// should go back through [`build_boundary`].
    pub fn mobius_image(&self, coeffs: [C64; 4], conjugate: bool) -> Result<Self> {
        let inner = Arc::new(ReversedCurve { inner: self.curve.clone(), reversed: self.reversed });
        let curve = MobiusCurve::new(inner, coeffs, conjugate)?;
        let interior_point = self.interior_point.map(|p| {
            let u = if conjugate { p.conj() } else { p };
            (coeffs[0] * u + coeffs[1]) / (coeffs[2] * u + coeffs[3])
        });
        Ok(Self { curve: Arc::new(curve), reversed: false, interior_point })
    }

    /// Image under the similarity z ↦ a z + b.
    pub fn similarity(&self, a: C64, b: C64) -> Result<Self> {
        self.mobius_image([a, b, C64::new(0.0, 0.0), C64::new(1.0, 0.0)], false)
    }

    pub fn with_interior_point(mut self, p: C64) -> Self {
        self.interior_point = Some(p);
        self
    }

    pub fn interior_point(&self) -> Option<C64> {
        self.interior_point
    }

    pub fn kind(&self) -> &'static str {
        self.curve.kind()
    }

    pub fn is_reversed(&self) -> bool {
        self.reversed
    }

    /// η(τ) with the component's current orientation.
    pub fn eval(&self, tau: f64) -> CurvePoint {
        if self.reversed {
            let p = self.curve.eval(-tau);
            CurvePoint { z: p.z, dz: -p.dz, d2z: p.d2z }
        } else {
            self.curve.eval(tau)
        }
    }

    /// Corner parameters in [0, 2π), sorted, in the current orientation.
    pub fn corners(&self) -> Vec<f64> {
        let mut c: Vec<f64> = self
            .curve
            .corners()
            .into_iter()
            .map(|t| {
                let t = if self.reversed { -t } else { t };
                let w = t.rem_euclid(TAU);
                if w >= TAU {
                    0.0
                } else {
                    w
                }
            })
            .collect();
        c.sort_by(|a, b| a.partial_cmp(b).unwrap());
        c.dedup_by(|a, b| (*a - *b).abs() < 1e-14);
        c
    }

    pub fn reversed(&self) -> Self {
        Self { curve: self.curve.clone(), reversed: !self.reversed, interior_point: self.interior_point }
    }

    /// Polygonal outline in the current orientation, including every corner.
    pub fn outline(&self, samples: usize) -> Vec<C64> {
        let mut taus: Vec<f64> = (0..samples).map(|j| TAU * j as f64 / samples as f64).collect();
        taus.extend(self.corners());
        taus.sort_by(|a, b| a.partial_cmp(b).unwrap());
        taus.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
        taus.into_iter().map(|t| self.eval(t).z).collect()
    }

    pub fn orientation(&self) -> Orientation {
        if signed_area(&self.outline(OUTLINE_SAMPLES)) > 0.0 {
            Orientation::Ccw
        } else {
            Orientation::Cw
        }
    }
}

/// Curve wrapper that bakes in a parameter reversal, used when composing.
#[derive(Debug)]
struct ReversedCurve {
    inner: Arc<dyn Curve>,
    reversed: bool,
}

impl Curve for ReversedCurve {
    fn kind(&self) -> &'static str {
        self.inner.kind()
    }

    fn eval(&self, tau: f64) -> CurvePoint {
        if self.reversed {
            let p = self.inner.eval(-tau);
            CurvePoint { z: p.z, dz: -p.dz, d2z: p.d2z }
        } else {
            self.inner.eval(tau)
        }
    }

    fn corners(&self) -> Vec<f64> {
        let c = self.inner.corners();
        if self.reversed {
            c.into_iter().map(|t| (-t).rem_euclid(TAU)).collect()
        } else {
            c
        }
    }
}

pub(crate) fn signed_area(poly: &[C64]) -> f64 {
    let n = poly.len();
    0.5 * (0..n).map(|i| (poly[i].conj() * poly[(i + 1) % n]).im).sum::<f64>()
}

/// Winding number of a closed polygon around z.
pub fn winding_number(poly: &[C64], z: C64) -> i32 {
    let n = poly.len();
    let mut total = 0.0;
    for i in 0..n {
        let a = poly[i] - z;
        let b = poly[(i + 1) % n] - z;
        total += (b / a).arg();
    }
    (total / TAU).round() as i32
}

fn segment_distance(a: C64, b: C64, z: C64) -> f64 {
    let d = b - a;
    let len2 = d.norm_sqr();
    if len2 == 0.0 {
        return (z - a).norm();
    }
    let t = (((z - a) * d.conj()).re / len2).clamp(0.0, 1.0);
    (a + d * t - z).norm()
}

pub(crate) fn polygon_distance(poly: &[C64], z: C64) -> f64 {
    let n = poly.len();
    (0..n).map(|i| segment_distance(poly[i], poly[(i + 1) % n], z)).fold(f64::INFINITY, f64::min)
}

/// Proper crossing of two segments. Orientations within rounding of zero
/// count as collinear, so pieces of one straight edge never cross.
fn segments_cross(p1: C64, p2: C64, q1: C64, q2: C64) -> bool {
    let side = |a: C64, b: C64, p: C64| {
        let (u, v) = (b - a, p - a);
        let d = u.re * v.im - u.im * v.re;
        let tol = 1e-12 * u.norm() * v.norm();
        if d > tol {
            1
        } else if d < -tol {
            -1
        } else {
            0
        }
    };
    side(q1, q2, p1) * side(q1, q2, p2) < 0 && side(p1, p2, q1) * side(p1, p2, q2) < 0
}

fn polygons_cross(a: &[C64], b: &[C64]) -> bool {
    let (na, nb) = (a.len(), b.len());
    for i in 0..na {
        let (p1, p2) = (a[i], a[(i + 1) % na]);
        let (xmin, xmax) = (p1.re.min(p2.re), p1.re.max(p2.re));
        let (ymin, ymax) = (p1.im.min(p2.im), p1.im.max(p2.im));
        for j in 0..nb {
            let (q1, q2) = (b[j], b[(j + 1) % nb]);
            if q1.re.max(q2.re) < xmin
                || q1.re.min(q2.re) > xmax
                || q1.im.max(q2.im) < ymin
                || q1.im.min(q2.im) > ymax
            {
                continue;
            }
            if segments_cross(p1, p2, q1, q2) {
                return true;
            }
        }
    }
    false
}

fn self_crossing(a: &[C64]) -> bool {
    let n = a.len();
    for i in 0..n {
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            if segments_cross(a[i], a[(i + 1) % n], a[j], a[(j + 1) % n]) {
                return true;
            }
        }
    }
    false
}

/// Point inside the closed polygon farthest from it, found by refining a grid.
fn deep_interior_point(poly: &[C64]) -> Option<C64> {
    let centroid = {
        let area = signed_area(poly);
        let n = poly.len();
        let mut c = C64::new(0.0, 0.0);
        for i in 0..n {
            let (p, q) = (poly[i], poly[(i + 1) % n]);
            let w = p.re * q.im - q.re * p.im;
            c += (p + q) * w;
        }
        c / (6.0 * area)
    };
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for p in poly {
        xmin = xmin.min(p.re);
        xmax = xmax.max(p.re);
        ymin = ymin.min(p.im);
        ymax = ymax.max(p.im);
    }
    let inside = |z: C64| winding_number(poly, z) != 0;
    let mut best = if inside(centroid) { Some((polygon_distance(poly, centroid), centroid)) } else { None };
    let g = 40;
    for i in 1..g {
        for j in 1..g {
            let z = C64::new(
                xmin + (xmax - xmin) * i as f64 / g as f64,
                ymin + (ymax - ymin) * j as f64 / g as f64,
            );
            if inside(z) {
                let d = polygon_distance(poly, z);
                if best.map_or(true, |(bd, _)| d > bd) {
                    best = Some((d, z));
                }
            }
        }
    }
    best.map(|(_, z)| z)
}

/// Ordered boundary of a (possibly unbounded) multiply connected domain.
///
/// Bounded: component 0 is the outer curve, oriented counterclockwise, and
/// the holes are clockwise. Unbounded: every component is clockwise, so the
/// domain is on the left throughout.
#[derive(Debug, Clone)]
pub struct ParametrizedBoundary {
    components: Vec<BoundaryComponent>,
    bounded: bool,
    alpha: Option<C64>,
    outlines: Vec<Vec<C64>>,
    diameter: f64,
}

/// Checks the components, normalises orientation and fills in auxiliary points.
///
/// `alpha` is the base point in the domain for bounded domains; when absent a
/// deep interior point is chosen. Hole and unbounded-component interior
/// points come from the components or are chosen automatically.
pub fn build_boundary(
    components: Vec<BoundaryComponent>,
    bounded: bool,
    alpha: Option<C64>,
) -> Result<ParametrizedBoundary> {
    if components.is_empty() {
        return geometry("a boundary needs at least one component");
    }
    let mut comps = Vec::with_capacity(components.len());
    for (k, c) in components.into_iter().enumerate() {
        check_cusps(&c, k)?;
        let want = if bounded && k == 0 { Orientation::Ccw } else { Orientation::Cw };
        comps.push(if c.orientation() == want { c } else { c.reversed() });
    }
    let outlines: Vec<Vec<C64>> = comps.iter().map(|c| c.outline(OUTLINE_SAMPLES)).collect();
    for (k, o) in outlines.iter().enumerate() {
        if signed_area(o).abs() < 1e-300 {
            return geometry(format!("component {k} encloses no area"));
        }
        if self_crossing(o) {
            return geometry(format!("component {k} intersects itself"));
        }
    }
    for i in 0..outlines.len() {
        for j in i + 1..outlines.len() {
            if polygons_cross(&outlines[i], &outlines[j]) {
                return geometry(format!("components {i} and {j} intersect"));
            }
        }
    }
    // Nesting: holes inside the outer curve and outside each other.
    let first = |k: usize| outlines[k][0];
    for k in 0..outlines.len() {
        for j in 0..outlines.len() {
            if j == k {
                continue;
            }
            let inside = winding_number(&outlines[j], first(k)) != 0;
            let allowed = bounded && j == 0;
            if inside != allowed {
                return geometry(if allowed {
                    format!("component {k} is not enclosed by the outer component")
                } else {
                    format!("component {k} lies inside component {j}")
                });
            }
        }
    }
    for k in 0..comps.len() {
        if bounded && k == 0 {
            continue;
        }
        match comps[k].interior_point {
            Some(p) => {
                if winding_number(&outlines[k], p) == 0 {
                    return geometry(format!("auxiliary point {p} is not inside component {k}"));
                }
            }
            None => {
                let p = deep_interior_point(&outlines[k]).ok_or_else(|| {
                    CapError::Geometry(format!("no interior point found for component {k}"))
                })?;
                comps[k].interior_point = Some(p);
            }
        }
    }
    let diameter = outline_diameter(&outlines);
    let mut b = ParametrizedBoundary { components: comps, bounded, alpha: None, outlines, diameter };
    if bounded {
        let a = match alpha {
            Some(a) => a,
            None => b.default_interior_point()?,
        };
        if !b.contains(a) {
            return geometry(format!("base point {a} is not in the domain"));
        }
        b.alpha = Some(a);
    }
    Ok(b)
}

fn outline_diameter(outlines: &[Vec<C64>]) -> f64 {
    let pts: Vec<C64> = outlines.iter().flat_map(|o| o.iter().step_by(8).copied()).collect();
    let mut d: f64 = 0.0;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            d = d.max((pts[i] - pts[j]).norm());
        }
    }
    d
}

fn check_cusps(c: &BoundaryComponent, k: usize) -> Result<()> {
    let eps = 1e-9;
    for t in c.corners() {
        let before = c.eval(t - eps).dz;
        let after = c.eval(t + eps).dz;
        if before.norm() == 0.0 || after.norm() == 0.0 {
            return geometry(format!("degenerate tangent at corner {t} of component {k}"));
        }
        let turn = (after / before).arg();
        if turn.abs() > PI - 1e-8 {
            return geometry(format!("cusp at parameter {t} of component {k}"));
        }
    }
    Ok(())
}

impl ParametrizedBoundary {
    pub fn components(&self) -> &[BoundaryComponent] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_bounded(&self) -> bool {
        self.bounded
    }

    /// Base point α (bounded domains only).
    pub fn alpha(&self) -> Option<C64> {
        self.alpha
    }

    /// Auxiliary point inside component k (holes, or any component of an
    /// unbounded domain).
    pub fn interior_point(&self, k: usize) -> Option<C64> {
        self.components[k].interior_point
    }

    /// Copy with a different base point.
    pub fn with_alpha(&self, alpha: C64) -> Result<Self> {
        if !self.bounded {
            return geometry("a base point applies only to bounded domains");
        }
        if !self.contains(alpha) {
            return geometry(format!("base point {alpha} is not in the domain"));
        }
        let mut b = self.clone();
        b.alpha = Some(alpha);
        Ok(b)
    }

    /// Whether z lies in the domain, by winding numbers of the outlines.
    pub fn contains(&self, z: C64) -> bool {
        self.outlines.iter().enumerate().all(|(k, o)| {
            let w = winding_number(o, z);
            if self.bounded && k == 0 {
                w != 0
            } else {
                w == 0
            }
        })
    }

    /// Approximate distance from z to the boundary.
    pub fn distance_to_boundary(&self, z: C64) -> f64 {
        self.outlines.iter().map(|o| polygon_distance(o, z)).fold(f64::INFINITY, f64::min)
    }

    /// Index of the component nearest to z.
    pub fn nearest_component(&self, z: C64) -> usize {
        let mut best = (f64::INFINITY, 0);
        for (k, o) in self.outlines.iter().enumerate() {
            let d = polygon_distance(o, z);
            if d < best.0 {
                best = (d, k);
            }
        }
        best.1
    }

    /// Largest distance between outline points, a size scale.
    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    fn default_interior_point(&self) -> Result<C64> {
        let outer = &self.outlines[0];
        let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for p in outer {
            xmin = xmin.min(p.re);
            xmax = xmax.max(p.re);
            ymin = ymin.min(p.im);
            ymax = ymax.max(p.im);
        }
        let mut best: Option<(f64, C64)> = None;
        let g = 48;
        for i in 1..g {
            for j in 1..g {
                let z = C64::new(
                    xmin + (xmax - xmin) * i as f64 / g as f64,
                    ymin + (ymax - ymin) * j as f64 / g as f64,
                );
                if self.contains(z) {
                    let d = self.distance_to_boundary(z);
                    if best.map_or(true, |(bd, _)| d > bd) {
                        best = Some((d, z));
                    }
                }
            }
        }
        best.map(|(_, z)| z).ok_or_else(|| CapError::Geometry("could not find a point in the domain".into()))
    }

    /// Image under a similarity z ↦ a z + b (a ≠ 0), with α and the
    /// auxiliary points carried along.
    pub fn similarity(&self, a: C64, b: C64) -> Result<Self> {
        let comps = self
            .components
            .iter()
            .map(|c| c.similarity(a, b))
            .collect::<Result<Vec<_>>>()?;
        build_boundary(comps, self.bounded, self.alpha.map(|z| a * z + b))
    }

    /// Image under w = (a z + b)/(c z + d) for a Möbius map that keeps every
    /// component bounded and preserves the outer/hole structure.
    pub fn mobius(&self, coeffs: [C64; 4]) -> Result<Self> {
        let comps = self
            .components
            .iter()
            .map(|c| c.mobius_image(coeffs, false))
            .collect::<Result<Vec<_>>>()?;
        let alpha = self.alpha.map(|z| (coeffs[0] * z + coeffs[1]) / (coeffs[2] * z + coeffs[3]));
        build_boundary(comps, self.bounded, alpha)
    }
}
