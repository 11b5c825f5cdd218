//! Which initial data admit a solution.
//!
//! For each lower term `j` and each `k = 1..n` the function
//! `a_j(x)(x−a)^{α−α_j−k}/Γ(α−α_j−k+1)` is either integrable on `(a, b)`,
//! identically zero (the gamma factor has a pole), or not integrable.
//! `k0` is the length of the longest prefix of columns `k` free of
//! non-integrable entries; data `b_k` with `k > k0` must vanish.

use std::fmt::{self, Write as _};

use num_complex::Complex64 as C64;

use crate::fracops::pole_index;
use crate::model::{CauchyProblem, CoefficientFunction};

const BOUNDARY_TOL: f64 = 1e-12;

/// Heaviside step on integers: 1 for `k >= 0`, else 0.
pub fn step_h(k: i64) -> u8 {
    u8::from(k >= 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Integrability {
    Integrable,
    ZeroByGammaPole,
    NonIntegrable,
}

impl Integrability {
    pub fn is_admissible(self) -> bool {
        self != Self::NonIntegrable
    }
}

/// The gamma argument `α − α_j − k + 1` of cell `(j, k)`.
pub fn gamma_argument(p: &CauchyProblem, j: usize, k: usize) -> C64 {
    p.coupling_order(j) - k as f64 + 1.0
}

/// Classifies cell `(j, k)` (`j` indexes `p.lower_terms`, `k` is 1-based).
pub fn term_integrability(p: &CauchyProblem, j: usize, k: usize) -> Integrability {
    let term = &p.lower_terms[j];
    if term.coeff.is_zero() || pole_index(gamma_argument(p, j, k)).is_some() {
        return Integrability::ZeroByGammaPole;
    }
    let exponent = term.coeff.vanishing_order() + p.coupling_order(j).re - k as f64;
    if exponent > -1.0 + BOUNDARY_TOL {
        Integrability::Integrable
    } else {
        Integrability::NonIntegrable
    }
}

/// Largest `k` such that columns `1..=k` contain no non-integrable cell.
pub fn compute_k0(p: &CauchyProblem) -> usize {
    let n = p.n();
    let k0 = (1..=n)
        .take_while(|&k| (0..p.lower_terms.len()).all(|j| term_integrability(p, j, k).is_admissible()))
        .count();
    assert!(
        n == 0 || k0 >= 1,
        "column k = 1 is always admissible for a validated problem"
    );
    k0
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    SolvableAsGiven,
    /// The listed nonzero `b_k` (k > k0) were replaced by zero.
    SolvableIfTailZeroed(Vec<usize>),
    /// The listed nonzero `b_k` (k > k0) rule out any solution.
    NoSolution(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolvabilityReport {
    pub n: usize,
    pub k0: usize,
    /// Lower-term orders, in the row order of `term_matrix`.
    pub orders: Vec<C64>,
    /// `term_matrix[j][k-1]`.
    pub term_matrix: Vec<Vec<Integrability>>,
    /// `gamma_arguments[j][k-1] = α − α_j − k + 1`.
    pub gamma_arguments: Vec<Vec<C64>>,
    pub verdict: Verdict,
    /// Inputs taken on trust (declared vanishing orders).
    pub assumptions: Vec<String>,
}

impl SolvabilityReport {
    /// Offending `k` when no solution exists.
    pub fn offending(&self) -> &[usize] {
        match &self.verdict {
            Verdict::NoSolution(ks) => ks,
            _ => &[],
        }
    }
}

fn build_report(p: &CauchyProblem, project: bool) -> SolvabilityReport {
    let n = p.n();
    let k0 = compute_k0(p);
    let l = p.lower_terms.len();
    let term_matrix = (0..l)
        .map(|j| (1..=n).map(|k| term_integrability(p, j, k)).collect())
        .collect();
    let gamma_arguments = (0..l)
        .map(|j| (1..=n).map(|k| gamma_argument(p, j, k)).collect())
        .collect();
    let tail: Vec<usize> = (k0 + 1..=n)
        .filter(|&k| p.initial[k - 1] != C64::new(0.0, 0.0))
        .collect();
    let verdict = if tail.is_empty() {
        Verdict::SolvableAsGiven
    } else if project {
        Verdict::SolvableIfTailZeroed(tail)
    } else {
        Verdict::NoSolution(tail)
    };
    let assumptions = p
        .lower_terms
        .iter()
        .filter_map(|t| match &t.coeff {
            CoefficientFunction::Sampled { vanishing_order, .. } => Some(format!(
                "coefficient of D^{} y: declared vanishing order {vanishing_order} at x = {} (not verified)",
                fmt_complex(t.order.value()),
                p.a
            )),
            CoefficientFunction::Series(_) => None,
        })
        .collect();
    SolvabilityReport {
        n,
        k0,
        orders: p.lower_terms.iter().map(|t| t.order.value()).collect(),
        term_matrix,
        gamma_arguments,
        verdict,
        assumptions,
    }
}

/// Decides whether the given initial data admit a solution.
pub fn classify_initial_data(p: &CauchyProblem) -> SolvabilityReport {
    build_report(p, false)
}

/// Replaces `b_k` by `b_k·H(k0 − k)` and reports which values were zeroed.
pub fn project_initial_data(p: &CauchyProblem) -> (CauchyProblem, SolvabilityReport) {
    let report = build_report(p, true);
    let mut projected = p.clone();
    for k in report.k0 + 1..=report.n {
        projected.initial[k - 1] = C64::new(0.0, 0.0);
    }
    (projected, report)
}

/// Formats a complex number compactly, rounding away binary noise.
pub fn fmt_complex(z: C64) -> String {
    let r = |x: f64| {
        let v = (x * 1e10).round() / 1e10;
        if v == 0.0 {
            0.0
        } else {
            v
        }
    };
    let (re, im) = (r(z.re), r(z.im));
    if im == 0.0 {
        format!("{re}")
    } else if re == 0.0 {
        format!("{im}i")
    } else if im > 0.0 {
        format!("{re}+{im}i")
    } else {
        format!("{re}{im}i")
    }
}

impl fmt::Display for SolvabilityReport {
    /// Rows `k`, one column per lower term (highest order first) holding the
    /// gamma argument `α − α_j − k + 1`, then the row's membership in `L(a,b)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<usize> = (0..self.orders.len()).rev().collect();
        let mut header = vec!["k".to_string()];
        header.extend(cols.iter().map(|&j| format!("α_j={}", fmt_complex(self.orders[j]))));
        header.push("terms".to_string());
        let mut rows = vec![header];
        for k in 1..=self.n {
            let mut row = vec![k.to_string()];
            for &j in &cols {
                let mut cell = fmt_complex(self.gamma_arguments[j][k - 1]);
                match self.term_matrix[j][k - 1] {
                    Integrability::ZeroByGammaPole => cell.push_str(" (0)"),
                    Integrability::NonIntegrable => cell.push_str(" !"),
                    Integrability::Integrable => {}
                }
                row.push(cell);
            }
            let ok = cols.iter().all(|&j| self.term_matrix[j][k - 1].is_admissible());
            row.push(if ok { "∈ L(a,b)" } else { "∉ L(a,b)" }.to_string());
            rows.push(row);
        }
        let widths: Vec<usize> = (0..rows[0].len())
            .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();
        for row in &rows {
            let mut line = String::new();
            for (c, cell) in row.iter().enumerate() {
                let pad = widths[c] - cell.chars().count();
                let _ = write!(line, "{}{}  ", " ".repeat(pad), cell);
            }
            writeln!(f, "{}", line.trim_end())?;
        }
        writeln!(f, "n = {}, k0 = {}", self.n, self.k0)?;
        match &self.verdict {
            Verdict::SolvableAsGiven => writeln!(f, "verdict: solvable")?,
            Verdict::SolvableIfTailZeroed(ks) => {
                writeln!(f, "verdict: solvable after setting b_k = 0 for k = {}", join(ks))?
            }
            Verdict::NoSolution(ks) => writeln!(f, "verdict: no solution; b_k must vanish for k = {}", join(ks))?,
        }
        for a in &self.assumptions {
            writeln!(f, "assumption: {a}")?;
        }
        Ok(())
    }
}

fn join(ks: &[usize]) -> String {
    ks.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
}
