//! Conformal invariants computed from integral-equation solutions.

mod capacity;
mod condenser;
mod harmonic;
mod hyperbolic;
mod moduli;

use serde::{Deserialize, Serialize};

pub use capacity::{elliptic_capacity, hyperbolic_capacity, log_capacity};
pub use condenser::{
    condenser_capacity, condenser_potential, harmonic_measure_mc, Condenser, CondenserSpec,
    HarmonicMeasures,
};
pub use harmonic::{h_function, harmonic_measure_sc, HarmonicMeasureSc};
pub use hyperbolic::{hyperbolic_circle, hyperbolic_distance, hyperbolic_geodesic};
pub use moduli::{
    generalized_reduced_modulus, quad_modulus, quad_reciprocity_check, reduced_modulus,
};

/// A scalar invariant with the data needed to judge it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantResult {
    pub value: f64,
    /// Per-plate contributions 2πδ_k a_k (condensers only).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub contributions: Vec<f64>,
    /// Largest ν-constancy deviation over the solves involved.
    pub nu_deviation: f64,
    /// Nodes per boundary component.
    pub n: usize,
}

impl InvariantResult {
    pub(crate) fn new(value: f64, nu_deviation: f64, n: usize) -> Self {
        Self { value, contributions: Vec::new(), nu_deviation, n }
    }
}

/// Pointwise results of one solve, with its ν-constancy deviation.
#[derive(Debug, Clone, PartialEq)]
pub struct Samples<T> {
    pub values: Vec<T>,
    pub nu_deviation: f64,
}
