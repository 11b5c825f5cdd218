use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

const NODE_TOL: f64 = 1e-12;

/// Nodes `x_i = a + (b − a)(i/N)^r`, `i = 0..=N`.
pub fn graded_mesh(a: f64, b: f64, intervals: usize, grading: f64) -> Vec<f64> {
    let n = intervals as f64;
    (0..=intervals)
        .map(|i| {
            if i == intervals {
                b
            } else {
                a + (b - a) * (i as f64 / n).powf(grading)
            }
        })
        .collect()
}

/// Complex samples on a graded mesh over `[a, b]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    nodes: Vec<f64>,
    values: Vec<C64>,
    grading: f64,
}

impl GridFunction {
    /// Validates that `nodes` is the graded mesh with exponent `grading`.
    pub fn new(nodes: Vec<f64>, values: Vec<C64>, grading: f64) -> Result<Self> {
        if nodes.len() < 3 {
            return Err(Error::InvalidGrid(format!(
                "need at least 2 intervals, got {}",
                nodes.len().saturating_sub(1)
            )));
        }
        if nodes.len() != values.len() {
            return Err(Error::InvalidGrid(format!(
                "{} nodes but {} values",
                nodes.len(),
                values.len()
            )));
        }
        if !(grading >= 1.0) {
            return Err(Error::InvalidGrid(format!("mesh grading {grading} must be >= 1")));
        }
        let (a, b) = (nodes[0], nodes[nodes.len() - 1]);
        if !(b > a) {
            return Err(Error::InvalidGrid(format!("degenerate interval [{a}, {b}]")));
        }
        let expected = graded_mesh(a, b, nodes.len() - 1, grading);
        let scale = a.abs().max(b.abs()).max(b - a);
        for (i, (x, e)) in nodes.iter().zip(&expected).enumerate() {
            if (x - e).abs() > NODE_TOL * scale {
                return Err(Error::InvalidGrid(format!(
                    "node {i} = {x} does not match grading {grading} (expected {e})"
                )));
            }
        }
        Ok(Self { nodes, values, grading })
    }

    pub fn from_fn<F>(a: f64, b: f64, intervals: usize, grading: f64, f: F) -> Result<Self>
    where
        F: Fn(f64) -> C64,
    {
        let nodes = graded_mesh(a, b, intervals, grading);
        let values = nodes.iter().map(|&x| f(x)).collect();
        Self::new(nodes, values, grading)
    }

    pub fn zeros(a: f64, b: f64, intervals: usize, grading: f64) -> Result<Self> {
        Self::from_fn(a, b, intervals, grading, |_| C64::new(0.0, 0.0))
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [C64] {
        &mut self.values
    }

    pub fn grading(&self) -> f64 {
        self.grading
    }

    /// Number of intervals `N`.
    pub fn intervals(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn a(&self) -> f64 {
        self.nodes[0]
    }

    pub fn b(&self) -> f64 {
        self.nodes[self.nodes.len() - 1]
    }

    /// Same mesh, new values.
    pub fn with_values(&self, values: Vec<C64>) -> Self {
        assert_eq!(values.len(), self.nodes.len(), "value count must match the mesh");
        Self {
            nodes: self.nodes.clone(),
            values,
            grading: self.grading,
        }
    }

    /// Piecewise-linear interpolant; constant extrapolation outside `[a, b]`.
    pub fn interpolate(&self, x: f64) -> C64 {
        let n = self.nodes.len();
        if x <= self.nodes[0] {
            return self.values[0];
        }
        if x >= self.nodes[n - 1] {
            return self.values[n - 1];
        }
        let hi = self.nodes.partition_point(|&t| t <= x);
        let lo = hi - 1;
        let (x0, x1) = (self.nodes[lo], self.nodes[hi]);
        let w = (x - x0) / (x1 - x0);
        self.values[lo] * (1.0 - w) + self.values[hi] * w
    }

    /// Trapezoidal L¹ norm over `[x_from, x_to]` given as node indices.
    pub fn l1_norm_between(&self, from: usize, to: usize) -> f64 {
        (from..to)
            .map(|i| 0.5 * (self.nodes[i + 1] - self.nodes[i]) * (self.values[i].norm() + self.values[i + 1].norm()))
            .sum()
    }

    pub fn l1_norm(&self) -> f64 {
        self.l1_norm_between(0, self.intervals())
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}
