//! Product-trapezoidal fractional integration on graded meshes.
//!
//! The integrand is replaced by its piecewise-linear interpolant and each
//! panel is integrated exactly against the kernel `(x − t)^{β−1}/Γ(β)`.

use num_complex::Complex64 as C64;
use rayon::prelude::*;

use super::gamma::recip_gamma;
use crate::error::{Error, Result};
use crate::model::{pow_real, ComplexOrder, GridFunction};

fn real_order(order: &ComplexOrder) -> Result<f64> {
    if !order.is_real() {
        return Err(Error::UnsupportedOrder(order.value()));
    }
    if !(order.re > 0.0) {
        return Err(Error::InvalidOrders(format!("integral order {order} must be positive")));
    }
    Ok(order.re)
}

/// Moments `∫ (x−t)^{β−1} dt` and `∫ (x−t)^{β−1}(t − x_p) dt` over
/// `[x_p, x_p + h]`, where `d0 = x − x_p >= h`.
fn panel_moments(d0: f64, h: f64, beta: f64) -> (f64, f64) {
    let eps = h / d0;
    if eps <= 0.25 && eps * (beta - 1.0).abs() <= 1.0 {
        // Expand (1 − v)^{β−1} around v = 0 to avoid cancellation; the
        // terms stay below (1 + eps)^{|β−1|} in size.
        let scale0 = d0.powf(beta);
        let m0 = scale0 * -(beta * (-eps).ln_1p()).exp_m1() / beta;
        let mut c = 1.0;
        let mut pow = eps * eps;
        let mut sum = 0.0;
        for m in 0..200 {
            let term = c * pow / (m as f64 + 2.0);
            sum += term;
            if term.abs() <= 1e-17 * sum.abs() {
                break;
            }
            c *= (m as f64 + 1.0 - beta) / (m as f64 + 1.0);
            pow *= eps;
        }
        (m0, scale0 * d0 * sum)
    } else {
        let d1 = d0 - h;
        let m0 = (d0.powf(beta) - d1.powf(beta)) / beta;
        let m1 = d0 * m0 - (d0.powf(beta + 1.0) - d1.powf(beta + 1.0)) / (beta + 1.0);
        (m0, m1)
    }
}

/// Quadrature weights for `(I^β f)(x)` with `f` piecewise linear on `nodes`;
/// entries for nodes at or beyond `x` are omitted.
fn weights_at(nodes: &[f64], beta: f64, x: f64) -> Vec<f64> {
    let scale = recip_gamma(C64::new(beta, 0.0)).re;
    let last = nodes.partition_point(|&t| t < x).min(nodes.len() - 1);
    let mut w = vec![0.0; (last + 1).min(nodes.len())];
    for p in 0..last {
        let h = nodes[p + 1] - nodes[p];
        let end = nodes[p + 1].min(x);
        let (m0, m1) = panel_moments(x - nodes[p], end - nodes[p], beta);
        w[p] += (m0 - m1 / h) * scale;
        if p + 1 < w.len() {
            w[p + 1] += m1 / h * scale;
        }
    }
    w
}

/// Lower-triangular product-integration weights for one real order on one
/// mesh: `(I^β f)(x_i) ≈ Σ_{p<=i} W[i][p] f_p`.
#[derive(Debug, Clone)]
pub struct ProductWeights {
    beta: f64,
    rows: Vec<Vec<f64>>,
}

impl ProductWeights {
    pub fn new(nodes: &[f64], beta: f64) -> Self {
        let rows = (0..nodes.len())
            .into_par_iter()
            .map(|i| {
                if i == 0 {
                    vec![0.0]
                } else {
                    weights_at(&nodes[..=i], beta, nodes[i])
                }
            })
            .collect();
        Self { beta, rows }
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.rows[i]
    }

    /// Diagonal weight `W[i][i]`.
    pub fn diagonal(&self, i: usize) -> f64 {
        self.rows[i][i]
    }

    /// `Σ_{p<i} W[i][p] f_p`, the part of row `i` that excludes node `i`.
    pub fn history(&self, values: &[C64], i: usize) -> C64 {
        self.rows[i][..i].iter().zip(values).map(|(w, v)| v * *w).sum()
    }

    pub fn apply(&self, values: &[C64], i: usize) -> C64 {
        self.rows[i].iter().zip(values).map(|(w, v)| v * *w).sum()
    }

    pub fn apply_all(&self, values: &[C64]) -> Vec<C64> {
        (0..self.rows.len()).map(|i| self.apply(values, i)).collect()
    }
}

/// `(I^α f)(x_at)` by product trapezoidal quadrature (real orders only).
pub fn rl_integral_grid(f: &GridFunction, order: &ComplexOrder, at: usize) -> Result<C64> {
    let beta = real_order(order)?;
    if at >= f.nodes().len() {
        return Err(Error::InvalidGrid(format!("node index {at} out of range")));
    }
    if at == 0 {
        return Ok(C64::new(0.0, 0.0));
    }
    let w = weights_at(&f.nodes()[..=at], beta, f.nodes()[at]);
    Ok(w.iter().zip(f.values()).map(|(w, v)| v * *w).sum())
}

/// `I^α f` at every node.
pub fn rl_integral_grid_all(f: &GridFunction, order: &ComplexOrder) -> Result<GridFunction> {
    let beta = real_order(order)?;
    let w = ProductWeights::new(f.nodes(), beta);
    Ok(f.with_values(w.apply_all(f.values())))
}

/// `(I^β f)(x)` at an arbitrary point for `f` piecewise linear on `nodes`.
pub fn rl_integral_at(nodes: &[f64], values: &[C64], beta: f64, x: f64) -> C64 {
    if x <= nodes[0] {
        return C64::new(0.0, 0.0);
    }
    let w = weights_at(nodes, beta, x);
    w.iter().zip(values).map(|(w, v)| v * *w).sum()
}

/// Data describing an `AC^n` function: the endpoint derivatives
/// `y^{(k)}(a)`, `k = 0..n−1`, and samples of `y^{(n)}`.
#[derive(Debug, Clone)]
pub struct SmoothSamples {
    pub endpoint_derivatives: Vec<C64>,
    pub nth_derivative: GridFunction,
}

/// `D^α y = Σ_{k<n} y^{(k)}(a)(x−a)^{k−α}/Γ(1+k−α) + I^{n−α} y^{(n)}` on the
/// mesh of `y^{(n)}`. The value at `x = a` is the limit, infinite when a
/// singular term is present.
pub fn rl_derivative_smooth(data: &SmoothSamples, order: &ComplexOrder) -> Result<GridFunction> {
    if !order.is_real() {
        return Err(Error::UnsupportedOrder(order.value()));
    }
    if !(order.re >= 0.0) {
        return Err(Error::InvalidOrders(format!(
            "derivative order {order} must be non-negative"
        )));
    }
    let n = order.natural_part();
    if data.endpoint_derivatives.len() < n {
        return Err(Error::InsufficientSmoothnessData {
            needed: n,
            got: data.endpoint_derivatives.len(),
        });
    }
    let alpha = order.re;
    let g = &data.nth_derivative;
    let a = g.a();
    let rest = n as f64 - alpha;
    let integral: Vec<C64> = if rest.abs() < 1e-14 {
        g.values().to_vec()
    } else {
        ProductWeights::new(g.nodes(), rest).apply_all(g.values())
    };
    let singular: Vec<(C64, C64)> = (0..n)
        .filter_map(|k| {
            let exponent = C64::new(k as f64 - alpha, 0.0);
            let c = data.endpoint_derivatives[k] * recip_gamma(exponent + 1.0);
            (c != C64::new(0.0, 0.0)).then_some((c, exponent))
        })
        .collect();
    let values = g
        .nodes()
        .iter()
        .zip(integral)
        .map(|(&x, v)| singular.iter().map(|(c, e)| c * pow_real(x - a, *e)).sum::<C64>() + v)
        .collect();
    Ok(g.with_values(values))
}
