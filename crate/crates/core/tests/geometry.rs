mod common;

use std::f64::consts::TAU;

use cap_core::geometry::*;
use cap_core::{CapError, C64};
use common::*;

#[test]
fn unit_circle_parametrization() {
    let b = unit_disk();
    let comp = &b.components()[0];
    for k in 0..16 {
        let t = TAU * k as f64 / 16.0;
        let p = comp.eval(t);
        assert!((p.z - C64::from_polar(1.0, t)).norm() < 1e-15);
        assert!((p.dz - c(0.0, 1.0) * C64::from_polar(1.0, t)).norm() < 1e-15);
    }
    let d = discretize(&b, 8).unwrap();
    assert_eq!(d.total(), 8);
    assert!(d.z.iter().all(|z| (z.norm() - 1.0).abs() < 1e-15));
}

#[test]
fn hole_ellipse_runs_clockwise() {
    let b = build_boundary(vec![circle(c(0.0, 0.0), 1.0), ellipse_plate()], true, Some(c(0.0, 0.75))).unwrap();
    let hole = &b.components()[1];
    assert_eq!(hole.orientation(), Orientation::Cw);
    for t in [0.3, 1.7, 4.0] {
        let want = c(0.75 * f64::cos(t), -0.5 * f64::sin(t));
        assert!((hole.eval(t).z - want).norm() < 1e-14);
    }
    assert_eq!(b.components()[0].orientation(), Orientation::Ccw);
}

#[test]
fn orientation_is_normalized() {
    // A clockwise outer square is flipped, a counterclockwise hole too.
    let cw = BoundaryComponent::polygon(&[c(-1.0, -1.0), c(-1.0, 1.0), c(1.0, 1.0), c(1.0, -1.0)]).unwrap();
    assert_eq!(cw.orientation(), Orientation::Cw);
    let b = build_boundary(vec![cw, circle(c(0.0, 0.0), 0.3)], true, Some(c(0.6, 0.0))).unwrap();
    assert_eq!(b.components()[0].orientation(), Orientation::Ccw);
    assert_eq!(b.components()[1].orientation(), Orientation::Cw);
    // Unbounded domains: every component clockwise.
    let u = five_disks(3.0);
    assert!(u.components().iter().all(|k| k.orientation() == Orientation::Cw));
}

#[test]
fn winding_numbers_about_auxiliary_points() {
    let b = square_in_square(0.5);
    let outline0 = b.components()[0].outline(400);
    assert_eq!(winding(&outline0, b.alpha().unwrap()), 1);
    let outline1 = b.components()[1].outline(400);
    assert_eq!(winding(&outline1, b.interior_point(1).unwrap()), -1);
}

#[test]
fn amoeba_matches_formula() {
    let (b, _) = amoeba();
    let comp = &b.components()[0];
    for k in 0..50 {
        let t = 0.1 + TAU * k as f64 / 50.0;
        assert!((comp.eval(t).z - amoeba_curve(t)).norm() < 1e-12);
    }
    assert!(comp.corners().is_empty());
}

#[test]
fn polygon_and_gear_corners() {
    let sq = square(1.0);
    assert_eq!(sq.corners().len(), 4);
    let (g, z) = gear();
    let comp = &g.components()[0];
    let corners = comp.corners();
    assert_eq!(corners.len(), 4);
    for t in corners {
        let p = comp.eval(t).z;
        assert!(z.iter().any(|v| (v - p).norm() < 1e-12), "{p}");
    }
}

#[test]
fn graded_square_spacing() {
    let b = build_boundary(vec![square(1.0)], true, Some(c(0.0, 0.0))).unwrap();
    let n = 128;
    let d = discretize(&b, n).unwrap();
    assert!(d.is_graded(0));
    assert!(d.dz.iter().all(|v| v.norm() > 0.0));
    let h = TAU / n as f64;
    // Nodes nearest a corner sit at distance ~ (h/2)^p in the parameter.
    let min_gap = (0..n).map(|i| (d.z[(i + 1) % n] - d.z[i]).norm()).fold(f64::INFINITY, f64::min);
    assert!(min_gap < 50.0 * h.powi(3), "{min_gap}");
    assert!(min_gap > 0.0);
    // No node lands on a corner.
    for v in [c(1.0, 1.0), c(-1.0, 1.0), c(-1.0, -1.0), c(1.0, -1.0)] {
        assert!(d.z.iter().all(|z| (z - v).norm() > 0.0));
    }
}

#[test]
fn grading_exponent_is_validated() {
    let b = build_boundary(vec![square(1.0)], true, Some(c(0.0, 0.0))).unwrap();
    let coef = default_coefficient(&b);
    for p in GRADING_RANGE {
        assert!(discretize_graded(&b, 64, coef, p).is_ok());
    }
    assert!(matches!(discretize_graded(&b, 64, coef, 1), Err(CapError::Config(_))));
    assert!(matches!(discretize_graded(&b, 64, coef, 6), Err(CapError::Config(_))));
}

#[test]
fn odd_or_small_n_rejected() {
    let b = unit_disk();
    assert!(discretize(&b, 31).is_err());
    assert!(discretize(&b, 6).is_err());
}

#[test]
fn refinement_consistency() {
    let b = build_boundary(vec![BoundaryComponent::ellipse(c(0.2, 0.1), 1.0, 0.4, 0.7).unwrap()], true, None).unwrap();
    let d1 = discretize(&b, 64).unwrap();
    let d2 = discretize(&b, 128).unwrap();
    for i in 0..64 {
        assert!((d1.z[i] - d2.z[2 * i]).norm() < 1e-15);
        assert!((d1.dz[i] - d2.dz[2 * i]).norm() < 1e-15);
    }
}

#[test]
fn coefficient_samples() {
    let b = ring(0.5);
    let d = discretize(&b, 32).unwrap();
    let alpha = b.alpha().unwrap();
    assert!(d.z.iter().zip(&d.a).all(|(z, a)| (a - (z - alpha)).norm() < 1e-15));
    let u = five_disks(3.0);
    let du = discretize(&u, 32).unwrap();
    assert!(du.a.iter().all(|a| *a == c(1.0, 0.0)));
}

#[test]
fn invalid_geometry_is_rejected() {
    let err = |r: cap_core::Result<ParametrizedBoundary>| matches!(r, Err(CapError::Geometry(_)));
    // Overlapping holes.
    assert!(err(build_boundary(
        vec![circle(c(0.0, 0.0), 1.0), circle(c(0.1, 0.0), 0.3), circle(c(-0.1, 0.0), 0.3)],
        true,
        None
    )));
    // Hole poking out of the outer curve.
    assert!(err(build_boundary(vec![circle(c(0.0, 0.0), 1.0), circle(c(0.9, 0.0), 0.3)], true, None)));
    // Base point inside the hole.
    assert!(err(build_boundary(vec![circle(c(0.0, 0.0), 1.0), circle(c(0.0, 0.0), 0.5)], true, Some(c(0.1, 0.0)))));
    // Self-intersecting polygon.
    let bow = BoundaryComponent::polygon(&[c(0.0, 0.0), c(1.0, 1.0), c(1.0, 0.0), c(0.0, 1.0)]).unwrap();
    assert!(err(build_boundary(vec![bow], true, None)));
    // Cardioid (1 − cos t)e^{it}: cusp at t = 0.
    let cardioid = BoundaryComponent::closure(
        |t| {
            let (e, i) = (C64::from_polar(1.0, t), c(0.0, 1.0));
            let r = 1.0 - t.cos();
            CurvePoint { z: r * e, dz: (t.sin() + i * r) * e, d2z: (t.cos() + 2.0 * i * t.sin() - r) * e }
        },
        vec![0.0],
    );
    assert!(err(build_boundary(vec![cardioid], true, Some(c(-0.5, 0.0)))));
    assert!(BoundaryComponent::circle(c(0.0, 0.0), -1.0).is_err());
    assert!(BoundaryComponent::polygon(&[c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0)]).is_err());
}

#[test]
fn domain_file_round_trip() {
    let text = r#"{"bounded": true, "alpha": [0, 0.75],
        "components": [
          {"kind": "circle", "parameters": {"center": [0, 0], "radius": 1}},
          {"kind": "ellipse", "parameters": {"center": [0, 0], "semi_x": 0.75, "semi_y": 0.5}}]}"#;
    let spec = DomainSpec::from_json(text).unwrap();
    let b = spec.build().unwrap();
    assert_eq!(b.len(), 2);
    assert_eq!(b.alpha(), Some(c(0.0, 0.75)));
    let again = DomainSpec::from_json(&serde_json::to_string(&spec).unwrap()).unwrap();
    assert_eq!(again.components.len(), 2);

    let gear = r#"{"bounded": true, "components": [{"kind": "polycircular", "parameters": {
        "vertices": [[0,-1],[0,-2],[0,2],[0,1]], "through": [null, [2,0], null, [-1,0]]}}]}"#;
    let g = DomainSpec::from_json(gear).unwrap().build().unwrap();
    assert_eq!(g.components()[0].corners().len(), 4);
}

#[test]
fn domain_file_errors() {
    let cfg = |t: &str| matches!(DomainSpec::from_json(t).and_then(|s| s.build()), Err(CapError::Config(_)));
    assert!(cfg("{"));
    assert!(cfg(r#"{"bounded": true, "components": [{"kind": "blob", "parameters": {}}]}"#));
    assert!(cfg(r#"{"bounded": true, "components": [{"kind": "circle", "parameters": {"radius": 1}}]}"#));
    assert!(cfg(r#"{"bounded": true, "extra": 1, "components": []}"#));
    assert!(cfg(
        r#"{"bounded": true, "components": [{"kind": "polygon", "corners": [0.0],
            "parameters": {"vertices": [[0,0],[1,0],[1,1],[0,1]]}}]}"#
    ));
}

#[test]
fn similarity_and_mobius_images() {
    let b = ring(0.5);
    let (a, s) = (C64::from_polar(2.0, 0.4), c(1.0, -3.0));
    let moved = b.similarity(a, s).unwrap();
    assert_eq!(moved.alpha(), Some(a * b.alpha().unwrap() + s));
    let p = moved.components()[1].eval(0.3).z;
    assert!((((p - s) / a).norm() - 0.5).abs() < 1e-14);

    // A disk automorphism keeps B² and moves the hole.
    let w0 = c(0.3, 0.2);
    let coeffs = [c(1.0, 0.0), -w0, -w0.conj(), c(1.0, 0.0)];
    let img = b.mobius(coeffs).unwrap();
    for k in 0..20 {
        let t = TAU * k as f64 / 20.0;
        assert!((img.components()[0].eval(t).z.norm() - 1.0).abs() < 1e-14);
    }
    assert!(img.contains(img.alpha().unwrap()));
    assert!(!img.contains(-w0));
}

#[test]
fn contains_and_distance() {
    let b = ring(0.5);
    assert!(b.contains(c(0.75, 0.0)));
    assert!(!b.contains(c(0.1, 0.0)));
    assert!(!b.contains(c(1.5, 0.0)));
    assert!((b.distance_to_boundary(c(0.0, 0.7)) - 0.2).abs() < 1e-3);
    assert_eq!(b.nearest_component(c(0.0, 0.55)), 1);
    assert!((b.diameter() - 2.0).abs() < 1e-3);
}

#[test]
fn moved_polygon_is_not_self_intersecting() {
    // Collinear outline samples along an edge must not register as crossings.
    let (a, s) = (c(-1.821129991871016, 1.3521939953495685), c(0.5287459884604311, -3.53243416144295));
    let z = trapezoid_vertices(1.2).map(|v| a * v + s);
    let b = build_boundary(vec![BoundaryComponent::polygon(&z).unwrap()], true, None);
    assert!(b.is_ok(), "{:?}", b.err());
}
