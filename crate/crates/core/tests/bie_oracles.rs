use std::f64::consts::{PI, TAU};

use cap_core::bie::{kernel_m, kernel_n, solve_bie, Backend, BieOperator, BieSolver};
use cap_core::geometry::{build_boundary, discretize, discretize_with, BoundaryComponent, Coefficient};
use cap_core::C64;
use rand::{Rng, SeedableRng};

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn unit_disk(alpha: C64) -> cap_core::geometry::ParametrizedBoundary {
    build_boundary(vec![BoundaryComponent::circle(c(0.0, 0.0), 1.0).unwrap()], true, Some(alpha)).unwrap()
}

fn ellipse(alpha: C64) -> cap_core::geometry::ParametrizedBoundary {
    build_boundary(
        vec![BoundaryComponent::ellipse(c(0.0, 0.0), 1.0, 0.6, 0.3).unwrap()],
        true,
        Some(alpha),
    )
    .unwrap()
}

#[test]
fn unit_circle_constants() {
    let b = unit_disk(c(0.0, 0.0));
    let d = discretize(&b, 32).unwrap();
    let ones = vec![1.0; d.total()];
    // A = η: N is the constant −1/(2π), so 𝐍1 = −1.
    let n1 = BieOperator::new(&d).apply_n(&ones);
    assert!(n1.iter().all(|v| (v + 1.0).abs() < 1e-14), "{n1:?}");
    // A = 1: the classical Neumann kernel, for which 𝐍1 = 1.
    let d1 = d.with_coefficient(Coefficient::Unit);
    let n1 = BieOperator::new(&d1).apply_n(&ones);
    assert!(n1.iter().all(|v| (v - 1.0).abs() < 1e-14), "{n1:?}");
}

#[test]
fn unit_circle_m_is_negative_conjugation() {
    let b = unit_disk(c(0.0, 0.0));
    let d = discretize(&b, 32).unwrap();
    let op = BieOperator::new(&d);
    let m_const = op.apply_m(&vec![2.5; d.total()]);
    assert!(m_const.iter().all(|v| v.abs() < 1e-13));
    let cos: Vec<f64> = d.t.iter().map(|t| t.cos()).collect();
    let m = op.apply_m(&cos);
    for (v, t) in m.iter().zip(&d.t) {
        assert!((v + t.sin()).abs() < 1e-13);
    }
}

#[test]
fn dense_assembly_matches_matrix_free() {
    let b = ellipse(c(0.1, 0.05));
    let d = discretize(&b, 64).unwrap();
    let op = BieOperator::new(&d);
    let a = op.assemble_n();
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let x: Vec<f64> = (0..d.total()).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let dense = &a * nalgebra::DVector::from_column_slice(&x);
    let free = op.apply_n(&x);
    for (p, q) in dense.iter().zip(&free) {
        assert!((p - q).abs() < 1e-13);
    }
}

#[test]
fn m_matches_subtracted_quadrature() {
    // Oracle: 𝐌γ(s) = ∫ M(s,t)(γ(t) − γ(s)) dt, whose integrand tends to
    // γ′(s)/π on the diagonal, evaluated on a 16× finer grid.
    let b = ellipse(c(0.1, 0.05));
    let gamma = |z: C64| (z * z * 0.7 + z).re + (z - c(0.2, 0.1)).norm().ln();
    let coarse = discretize(&b, 64).unwrap();
    let g: Vec<f64> = coarse.z.iter().map(|&z| gamma(z)).collect();
    let m = BieOperator::new(&coarse).apply_m(&g);
    let fine = discretize(&b, 1024).unwrap();
    let gf: Vec<f64> = fine.z.iter().map(|&z| gamma(z)).collect();
    let dgf = cap_core::fourier::spectral_derivative_real(&gf);
    let w = fine.weight();
    for i in 0..64 {
        let fi = 16 * i;
        let mut s = w * dgf[fi] / PI;
        for j in 0..fine.total() {
            if j != fi {
                s += w * kernel_m(&fine, fi, j) * (gf[j] - gf[fi]);
            }
        }
        assert!((s - m[i]).abs() < 1e-10, "node {i}: {s} vs {}", m[i]);
    }
}

#[test]
fn kernel_continuous_across_diagonal() {
    let b = ellipse(c(0.0, 0.0));
    let mut last = f64::INFINITY;
    for n in [628, 6284, 62832] {
        let d = discretize(&b, n).unwrap();
        let gap = (kernel_n(&d, 101, 100) - kernel_n(&d, 100, 100)).abs();
        assert!(gap < last / 5.0, "n={n}: {gap}");
        last = gap;
    }
    assert!(last < 1e-4);
}

#[test]
fn analytic_function_oracle_disk() {
    let b = unit_disk(c(0.1, 0.0));
    let d = discretize(&b, 64).unwrap();
    let af: Vec<C64> = d.z.iter().zip(&d.a).map(|(&z, &a)| a * z * z).collect();
    let gamma: Vec<f64> = af.iter().map(|v| v.re).collect();
    for backend in [Backend::Gmres, Backend::Dense] {
        let sol = solve_bie(&d, &gamma, backend).unwrap();
        for (r, v) in sol.rho.iter().zip(&af) {
            assert!((r - v.im).abs() < 1e-12);
        }
        assert!(sol.nu[0].abs() < 1e-12);
        assert!(sol.nu_deviation < 1e-12);
    }
}

#[test]
fn analytic_function_oracle_annulus() {
    let b = build_boundary(
        vec![
            BoundaryComponent::circle(c(0.0, 0.0), 1.0).unwrap(),
            BoundaryComponent::circle(c(0.0, 0.0), 0.3).unwrap(),
        ],
        true,
        Some(c(0.65, 0.0)),
    )
    .unwrap();
    let d = discretize(&b, 128).unwrap();
    let af: Vec<C64> = d.z.iter().zip(&d.a).map(|(&z, &a)| a * z).collect();
    let gamma: Vec<f64> = af.iter().map(|v| v.re).collect();
    let sol = solve_bie(&d, &gamma, Backend::Gmres).unwrap();
    assert!(sol.nu_deviation < 1e-12, "{}", sol.nu_deviation);
    assert!(sol.nu.iter().all(|v| v.abs() < 1e-12));
    for (r, v) in sol.rho.iter().zip(&af) {
        assert!((r - v.im).abs() < 1e-12);
    }
}

#[test]
fn homogeneous_problem() {
    let b = ellipse(c(0.0, 0.0));
    let d = discretize(&b, 32).unwrap();
    let sol = solve_bie(&d, &vec![0.0; d.total()], Backend::Gmres).unwrap();
    assert!(sol.rho.iter().all(|&v| v == 0.0));
    assert!(sol.nu.iter().all(|&v| v == 0.0));
}

#[test]
fn backends_agree_on_random_data() {
    let b = build_boundary(
        vec![
            BoundaryComponent::ellipse(c(0.0, 0.0), 1.2, 1.0, 0.0).unwrap(),
            BoundaryComponent::circle(c(0.4, 0.1), 0.25).unwrap(),
        ],
        true,
        Some(c(-0.5, 0.2)),
    )
    .unwrap();
    let d = discretize(&b, 128).unwrap();
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    let gamma: Vec<f64> = d.t.iter().map(|t| (3.0 * t).sin() + rng.gen_range(-0.1..0.1)).collect();
    let a = solve_bie(&d, &gamma, Backend::Gmres).unwrap();
    let b = solve_bie(&d, &gamma, Backend::Dense).unwrap();
    for (p, q) in a.rho.iter().zip(&b.rho) {
        assert!((p - q).abs() < 1e-12);
    }
    for (p, q) in a.nu.iter().zip(&b.nu) {
        assert!((p - q).abs() < 1e-12);
    }
}

#[test]
fn density_interpolation_between_nodes() {
    let b = ellipse(c(0.1, 0.05));
    let d = discretize(&b, 128).unwrap();
    let f = |z: C64| z * z * z + 1.0 / (z - c(2.0, 0.5));
    let gamma: Vec<f64> = d.z.iter().zip(&d.a).map(|(&z, &a)| (a * f(z)).re).collect();
    let solver = BieSolver::new(&d, Backend::Gmres).unwrap();
    let sol = solver.solve(&gamma).unwrap();
    for k in 0..10 {
        let tau = TAU * (k as f64 + 0.37) / 10.0;
        let z = b.components()[0].eval(tau).z;
        let az = z - c(0.1, 0.05);
        let exact = (az * f(z)).im;
        let got = solver.density_at(&sol, z);
        assert!((got - exact).abs() < 1e-11, "{got} vs {exact}");
    }
}

#[test]
fn graded_square_has_positive_tangents() {
    let sq = BoundaryComponent::polygon(&[c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1.0), c(0.0, 1.0)]).unwrap();
    assert_eq!(sq.corners().len(), 4);
    let b = build_boundary(vec![sq], true, None).unwrap();
    let d = discretize_with(&b, 256, Coefficient::Unit).unwrap();
    assert!(d.dz.iter().all(|v| v.norm() > 0.0));
    let min_gap = (0..d.total() - 1).map(|i| (d.z[i + 1] - d.z[i]).norm()).fold(f64::INFINITY, f64::min);
    let h = TAU / 256.0;
    // Four segments of length 1 in parameter length π/2: spacing ~ (h)^3 scale.
    assert!(min_gap < 10.0 * h.powi(3) && min_gap > 1e-3 * h.powi(3), "{min_gap}");
}
