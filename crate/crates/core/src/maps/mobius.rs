//! Möbius transformations w = (a z + b)/(c z + d).

use std::ops::Mul;

use crate::error::{CapError, Result};
use crate::C64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mobius {
    pub a: C64,
    pub b: C64,
    pub c: C64,
    pub d: C64,
}

impl Mobius {
    pub fn identity() -> Self {
        let (one, zero) = (C64::new(1.0, 0.0), C64::new(0.0, 0.0));
        Self { a: one, b: zero, c: zero, d: one }
    }

    pub fn new(a: C64, b: C64, c: C64, d: C64) -> Result<Self> {
        let m = Self { a, b, c, d };
        if m.det().norm() <= 1e-300 {
            return Err(CapError::Domain("Möbius coefficients have zero determinant".into()));
        }
        Ok(m)
    }

    pub fn det(&self) -> C64 {
        self.a * self.d - self.b * self.c
    }

    pub fn coefficients(&self) -> [C64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn apply(&self, z: C64) -> C64 {
        (self.a * z + self.b) / (self.c * z + self.d)
    }

    /// Inverse by coefficient inversion.
    pub fn inverse(&self) -> Self {
        Self { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    /// Scales the coefficients to unit determinant.
    pub fn normalized(&self) -> Self {
        let s = self.det().sqrt();
        Self { a: self.a / s, b: self.b / s, c: self.c / s, d: self.d / s }
    }

    /// The map sending (z₁, z₂, z₃) to (0, 1, ∞).
    fn to_standard(z: [C64; 3]) -> Self {
        let [z1, z2, z3] = z;
        Self { a: z2 - z3, b: -z1 * (z2 - z3), c: z2 - z1, d: -z3 * (z2 - z1) }
    }
}

impl Mul for Mobius {
    type Output = Mobius;

    /// Composition: (self * rhs)(z) = self(rhs(z)).
    fn mul(self, r: Mobius) -> Mobius {
        Mobius {
            a: self.a * r.a + self.b * r.c,
            b: self.a * r.b + self.b * r.d,
            c: self.c * r.a + self.d * r.c,
            d: self.c * r.b + self.d * r.d,
        }
        .normalized()
    }
}

fn distinct(z: &[C64; 3]) -> bool {
    let scale = z.iter().map(|v| v.norm()).fold(1.0, f64::max);
    (0..3).all(|i| (z[i] - z[(i + 1) % 3]).norm() > 1e-12 * scale)
}

/// The Möbius map with Ψ(from_i) = to_i, i = 1, 2, 3.
///
/// For two counterclockwise triples on the unit circle this is an automorphism
/// of the unit disk.
pub fn mobius_three_points(from: [C64; 3], to: [C64; 3]) -> Result<Mobius> {
    if !distinct(&from) || !distinct(&to) {
        return Err(CapError::Domain("three-point map needs distinct points".into()));
    }
    Ok((Mobius::to_standard(to).inverse() * Mobius::to_standard(from)).normalized())
}

/// Like [`mobius_three_points`], but checks that both triples lie on the unit
/// circle in counterclockwise order, so the result maps the disk onto itself.
pub fn disk_automorphism_three_points(from: [C64; 3], to: [C64; 3]) -> Result<Mobius> {
    for t in [&from, &to] {
        if t.iter().any(|v| (v.norm() - 1.0).abs() > 1e-8) {
            return Err(CapError::Domain("points must lie on the unit circle".into()));
        }
        let turn = |a: C64, b: C64| (b / a).arg().rem_euclid(std::f64::consts::TAU);
        let total = turn(t[0], t[1]) + turn(t[1], t[2]) + turn(t[2], t[0]);
        if (total - std::f64::consts::TAU).abs() > 1e-8 {
            return Err(CapError::Domain("points must be in counterclockwise order".into()));
        }
    }
    mobius_three_points(from, to)
}
