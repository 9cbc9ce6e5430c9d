//! Special functions and closed-form reference values.
//!
//! Everything here is pure and cheap; the BIE layers use [`mu`] and
//! [`mu_inv`] internally, and the closed forms serve as independent checks.

mod closed_forms;
mod elliptic;
mod hyperbolic;
mod hypergeometric;

pub use closed_forms::{
    convex_quad_modulus, convex_quad_modulus_from_vertices, exterior_rect_modulus, lens_arc_radius,
    lens_cap_estimate, psi_duren_pfaltzgraff, ring_cap, square_in_square_cap_exact,
    trapezoid_modulus_exact,
};
pub use elliptic::{agm, ellip_e, ellip_k, grotzsch_cap, mu, mu_inv};
pub use hyperbolic::{hyp_dist_ball, hyp_disk_euclidean};
pub use hypergeometric::{beta, gauss_2f1};

/// A number strictly inside (0, 1).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct UnitInterval(f64);

impl UnitInterval {
    pub fn new(value: f64) -> crate::Result<Self> {
        if value > 0.0 && value < 1.0 {
            Ok(Self(value))
        } else {
            crate::error::domain(format!("{value} is not in (0, 1)"))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// The complementary value √(1 − r²), computed without cancellation.
    pub fn complement(self) -> f64 {
        ((1.0 - self.0) * (1.0 + self.0)).sqrt()
    }
}
