//! Riemann–Liouville fractional integrals and derivatives.

mod gamma;
mod grid;
mod series;

pub use gamma::{gamma, gamma_ratio, pole_index, recip_gamma, GammaEval, POLE_SNAP};
pub use grid::{
    rl_derivative_smooth, rl_integral_at, rl_integral_grid, rl_integral_grid_all, ProductWeights, SmoothSamples,
};
pub use series::{kernel_basis, power_map, rl_derivative_series, rl_integral_series};
