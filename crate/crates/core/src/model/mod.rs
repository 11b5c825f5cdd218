//! Problem data and exact arithmetic on generalized power series.

mod grid;
mod order;
mod problem;
mod series;

pub use grid::{graded_mesh, GridFunction};
pub use order::ComplexOrder;
pub use problem::{validate_problem, CauchyProblem, CoefficientFunction, Forcing, LowerTerm};
pub(crate) use series::exponents_match;
pub use series::{compensated_sum, pow_real, GeneralizedPowerSeries, PowerTerm, Truncation, EXPONENT_MERGE_TOL};
