//! The boundary integral equation with the generalized Neumann kernel.
//!
//! For a boundary parametrized by η and a coefficient function A, and real
//! data γ, the equation (I − 𝐍)ρ = −𝐌γ has a unique solution ρ, and with the
//! piecewise constant ν = (𝐌ρ − (I − 𝐍)γ)/2 the function
//! f(η) = (γ + ν + iρ)/A is the boundary value of an analytic f in the domain
//! (with f(∞) = 0 for unbounded domains).

mod kernels;
mod operator;
mod solve;

pub use kernels::{kernel_m, kernel_m1, kernel_n};
pub use operator::BieOperator;
pub use solve::{
    density_at, solve_bie, Backend, BieSolution, BieSolver, DENSE_LIMIT, GMRES_ACCEPT, GMRES_MAX_ITER,
    GMRES_TOL,
};
