//! Pointwise kernel values, mainly for tests and dense assembly.

use std::f64::consts::PI;

use crate::geometry::DiscretizedBoundary;

/// N(s_i, t_j); the diagonal uses the limit formula with η″ and A′.
pub fn kernel_n(d: &DiscretizedBoundary, i: usize, j: usize) -> f64 {
    if i == j {
        (0.5 * (d.d2z[i] / d.dz[i]).im - (d.da[i] / d.a[i]).im) / PI
    } else {
        (d.a[i] / d.a[j] * d.dz[j] / (d.z[j] - d.z[i])).im / PI
    }
}

/// Full kernel M(s_i, t_j) for i ≠ j. Singular on the diagonal.
pub fn kernel_m(d: &DiscretizedBoundary, i: usize, j: usize) -> f64 {
    assert!(i != j, "M is singular on the diagonal");
    (d.a[i] / d.a[j] * d.dz[j] / (d.z[j] - d.z[i])).re / PI
}

/// M₁(s_i, t_j) = M(s_i, t_j) + cot((s_i − t_j)/2)/(2π) for nodes on the same
/// component, with its limit on the diagonal.
pub fn kernel_m1(d: &DiscretizedBoundary, i: usize, j: usize) -> f64 {
    debug_assert_eq!(d.component_of(i), d.component_of(j));
    if i == j {
        (0.5 * (d.d2z[i] / d.dz[i]).re - (d.da[i] / d.a[i]).re) / PI
    } else {
        kernel_m(d, i, j) + (0.5 * (d.t[i] - d.t[j])).tan().recip() / (2.0 * PI)
    }
}
