//! Domains shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::E;

use cap_core::geometry::{build_boundary, BoundaryComponent, ParametrizedBoundary};
use cap_core::C64;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn circle(center: C64, r: f64) -> BoundaryComponent {
    BoundaryComponent::circle(center, r).unwrap()
}

pub fn square(half: f64) -> BoundaryComponent {
    let a = half;
    BoundaryComponent::polygon(&[c(-a, -a), c(a, -a), c(a, a), c(-a, a)]).unwrap()
}

/// B² with the concentric disk |z| ≤ a removed.
pub fn ring(a: f64) -> ParametrizedBoundary {
    build_boundary(vec![circle(c(0.0, 0.0), 1.0), circle(c(0.0, 0.0), a)], true, Some(c(0.5 * (1.0 + a), 0.0))).unwrap()
}

/// The square (−1,1)² with the square [−a,a]² removed.
pub fn square_in_square(a: f64) -> ParametrizedBoundary {
    build_boundary(vec![square(1.0), square(a)], true, Some(c(0.5 * (1.0 + a), 0.0))).unwrap()
}

/// Ellipse plate with semi-axes 0.75 and 0.5.
pub fn ellipse_plate() -> BoundaryComponent {
    BoundaryComponent::ellipse(c(0.0, 0.0), 0.75, 0.5, 0.0).unwrap()
}

/// Trapezoid with vertices 0, 1, 1+iL, i(L−1).
pub fn trapezoid_vertices(l: f64) -> [C64; 4] {
    [c(0.0, 0.0), c(1.0, 0.0), c(1.0, l), c(0.0, l - 1.0)]
}

pub fn polygon_domain(z: &[C64]) -> ParametrizedBoundary {
    build_boundary(vec![BoundaryComponent::polygon(z).unwrap()], true, None).unwrap()
}

/// Two segments on the imaginary axis joined by the semicircles through 2
/// and −1.
pub fn gear() -> (ParametrizedBoundary, [C64; 4]) {
    let z = [c(0.0, -1.0), c(0.0, -2.0), c(0.0, 2.0), c(0.0, 1.0)];
    let comp = BoundaryComponent::polycircular(&z, &[None, Some(c(2.0, 0.0)), None, Some(c(-1.0, 0.0))]).unwrap();
    (build_boundary(vec![comp], true, None).unwrap(), z)
}

/// (e^{cos t} cos² 2t + e^{sin t} sin² 2t) e^{it}.
pub fn amoeba_curve(t: f64) -> C64 {
    let r = t.cos().exp() * (2.0 * t).cos().powi(2) + t.sin().exp() * (2.0 * t).sin().powi(2);
    C64::from_polar(r, t)
}

pub fn amoeba() -> (ParametrizedBoundary, [C64; 4]) {
    let comp = BoundaryComponent::parametric(amoeba_curve, 4096).unwrap();
    let z = [c(E, 0.0), c(0.0, 1.0), c(-1.0 / E, 0.0), c(0.0, -1.0)];
    (build_boundary(vec![comp], true, None).unwrap(), z)
}

/// Interior (bounded) or exterior of cosh(r + it).
pub fn confocal_ellipse(r: f64, bounded: bool) -> ParametrizedBoundary {
    let comp = BoundaryComponent::ellipse(c(0.0, 0.0), r.cosh(), r.sinh(), 0.0).unwrap();
    let alpha = bounded.then(|| c(0.0, 0.0));
    build_boundary(vec![comp], bounded, alpha).unwrap()
}

/// Five disks: |z| ≤ 0.8 and unit disks about ±r, ±ir (complement).
pub fn five_disks(r: f64) -> ParametrizedBoundary {
    let comps = vec![
        circle(c(0.0, 0.0), 0.8),
        circle(c(r, 0.0), 1.0),
        circle(c(-r, 0.0), 1.0),
        circle(c(0.0, r), 1.0),
        circle(c(0.0, -r), 1.0),
    ];
    build_boundary(comps, false, None).unwrap()
}

/// Unit disk minus four small disks (connectivity 5).
pub fn circular_five() -> ParametrizedBoundary {
    let comps = vec![
        circle(c(0.0, 0.0), 1.0),
        circle(c(0.0, 0.0), 0.25),
        circle(c(0.6, 0.0), 0.2),
        circle(c(-0.3, 0.5), 0.2),
        circle(c(-0.3, -0.5), 0.2),
    ];
    build_boundary(comps, true, None).unwrap()
}

pub fn unit_disk() -> ParametrizedBoundary {
    build_boundary(vec![circle(c(0.0, 0.0), 1.0)], true, Some(c(0.0, 0.0))).unwrap()
}

pub fn rel(x: f64, exact: f64) -> f64 {
    ((x - exact) / exact).abs()
}
