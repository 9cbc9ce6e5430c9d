//! Kress-type graded substitution that flattens the parametrization at corners.

use std::f64::consts::{PI, TAU};

/// Value and first two derivatives of a scalar function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub value: f64,
    pub d1: f64,
    pub d2: f64,
}

/// Substitution on one segment, s ∈ [0, 2π]:
/// w(s) = 2π v(s)^p / (v(s)^p + v(2π−s)^p),
/// v(s) = (1/p − 1/2)((π−s)/π)³ + (1/p)(s−π)/π + 1/2.
/// w′ vanishes to order p−1 at both ends.
pub fn kress_substitution(s: f64, p: u32) -> Jet {
    let pf = p as f64;
    let k = 1.0 / pf - 0.5;
    let v = |x: f64| {
        let y = (PI - x) / PI;
        (
            k * y * y * y + (x - PI) / (pf * PI) + 0.5,
            -3.0 * k * y * y / PI + 1.0 / (pf * PI),
            6.0 * k * y / (PI * PI),
        )
    };
    let (v0, v1, v2) = v(s);
    let (u0, mut u1, u2) = v(TAU - s);
    u1 = -u1;
    let pow = |x: f64, e: i32| if e <= 0 { 1.0 } else { x.powi(e) };
    let pi = p as i32;
    let big_v = pow(v0, pi);
    let big_u = pow(u0, pi);
    let dv = pf * pow(v0, pi - 1) * v1;
    let du = pf * pow(u0, pi - 1) * u1;
    let d2v = pf * (pf - 1.0) * pow(v0, pi - 2) * v1 * v1 + pf * pow(v0, pi - 1) * v2;
    let d2u = pf * (pf - 1.0) * pow(u0, pi - 2) * u1 * u1 + pf * pow(u0, pi - 1) * u2;
    let sum = big_v + big_u;
    let cross = dv * big_u - big_v * du;
    Jet {
        value: TAU * big_v / sum,
        d1: TAU * cross / (sum * sum),
        d2: TAU * ((d2v * big_u - big_v * d2u) * sum - 2.0 * cross * (dv + du)) / (sum * sum * sum),
    }
}

/// Graded reparametrization δ(t) with corners at the sorted parameters
/// `corners` in [0, 2π). Each inter-corner segment is mapped affinely onto
/// [0, 2π], passed through [`kress_substitution`], and mapped back.
/// With no corners this is the identity.
pub fn graded_reparam_jet(t: f64, corners: &[f64], p: u32) -> Jet {
    if corners.is_empty() {
        return Jet { value: t, d1: 1.0, d2: 0.0 };
    }
    let c0 = corners[0];
    let periods = ((t - c0) / TAU).floor();
    let local = t - periods * TAU;
    let m = corners.len();
    let mut seg = m - 1;
    for i in 0..m - 1 {
        if local < corners[i + 1] {
            seg = i;
            break;
        }
    }
    let start = corners[seg];
    let end = if seg + 1 < m { corners[seg + 1] } else { c0 + TAU };
    let len = end - start;
    let s = TAU * (local - start) / len;
    let w = kress_substitution(s, p);
    Jet {
        value: periods * TAU + start + len * w.value / TAU,
        d1: w.d1,
        d2: w.d2 * TAU / len,
    }
}

/// Graded reparametrization δ(t); see [`graded_reparam_jet`].
pub fn graded_reparam(t: f64, corners: &[f64], p: u32) -> f64 {
    graded_reparam_jet(t, corners, p).value
}
