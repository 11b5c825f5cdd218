//! Cauchy type problems for linear Riemann–Liouville fractional differential
//! equations with variable coefficients,
//!
//! ```text
//! (D^α y)(x) + Σ_j a_j(x) (D^{α_j} y)(x) = g(x),   a < x < b,
//! (D^{α−k} y)(a+) = b_k,                           k = 1..n.
//! ```
//!
//! - [`model`]: problem data and exact generalized power series.
//! - [`fracops`]: fractional integrals and derivatives, exact on series and
//!   by product integration on grids, plus the gamma function.
//! - [`solvability`]: the integrability index `k0` and which initial data
//!   admit a solution.
//! - [`volterra`]: numerical solution through the equivalent Volterra
//!   integral equation (Picard iteration and direct marching).
//! - [`fundamental`]: canonical fundamental systems, Green's functions and
//!   series representations of solutions.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod fracops;
pub mod fundamental;
pub mod model;
pub mod solvability;
pub mod volterra;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;
