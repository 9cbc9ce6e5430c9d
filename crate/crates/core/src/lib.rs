//! Numerical potential theory on planar domains.
//!
//! The core solver is the boundary integral equation with the generalized
//! Neumann kernel. From its solutions the crate builds conformal maps onto the
//! disk, annulus and circular-slit disk, and from those the usual conformal
//! invariants: condenser and logarithmic capacities, hyperbolic and elliptic
//! capacities, reduced moduli, quadrilateral moduli, harmonic measures and
//! hyperbolic distances.
//!
//! Layers, bottom up:
//! - [`specfun`]: elliptic integrals, the Grötzsch modulus μ and closed forms.
//! - [`geometry`]: boundary curves, orientation, graded corner meshes.
//! - [`bie`]: kernels, matrix-free operators, GMRES and the Nyström solve.
//! - [`cauchy`]: Cauchy-integral evaluation and spectral differentiation.
//! - [`maps`]: canonical conformal maps.
//! - [`invariants`]: the scalar invariants built on the maps.

pub mod bie;
pub mod cauchy;
pub mod error;
pub mod fourier;
pub mod geometry;
pub mod invariants;
pub mod linalg;
pub mod maps;
mod roots;
pub mod specfun;

pub use error::{CapError, Result};
pub use num_complex::Complex64;

/// Complex double used throughout.
pub type C64 = Complex64;
