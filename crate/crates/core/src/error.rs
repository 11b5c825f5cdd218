use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("operands live on different base points ({0} vs {1})")]
    InvalidOperand(f64, f64),

    #[error("series exceeds {max} terms after truncation ({got} terms)")]
    TruncationOverflow { max: usize, got: usize },

    #[error("invalid orders: {0}")]
    InvalidOrders(String),

    #[error("coefficient {index} is not continuous on [a,b]: lowest exponent {exponent}")]
    NotContinuousCoefficient { index: usize, exponent: f64 },

    #[error("expected {expected} initial values, got {got}")]
    InvalidInitialData { expected: usize, got: usize },

    #[error("invalid interval [{a}, {b}]")]
    InvalidInterval { a: f64, b: f64 },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("gamma function has a pole at {0}")]
    GammaPole(Complex64),

    #[error("term with exponent {0} is not integrable at the base point")]
    NotIntegrable(Complex64),

    #[error("order {0} is an integer; its kernel is the classical polynomial one")]
    IntegerOrderKernel(f64),

    #[error("order {0} is not supported on grid functions (real orders only)")]
    UnsupportedOrder(Complex64),

    #[error("need {needed} endpoint derivatives, got {got}")]
    InsufficientSmoothnessData { needed: usize, got: usize },

    #[error("no solution exists: initial values b_k must vanish for k = {0:?}")]
    UnsolvableInitialData(Vec<usize>),

    #[error("fixed-point iteration did not converge after {iterations} iterations (last increment {increment:e})")]
    NoConvergence { iterations: usize, increment: f64 },

    #[error("marching step is singular at node {node}")]
    SingularStep { node: usize },

    #[error("initial condition k = {0} blows up at the base point")]
    ConditionViolated(usize),

    #[error("this path requires closed-form coefficients: {0}")]
    UnsupportedCoefficients(String),

    #[error("series coefficient overflowed near exponent {exponent}; lower the exponent cap")]
    CoefficientOverflow { exponent: f64 },

    #[error("invalid solver options: {0}")]
    InvalidOptions(String),
}
