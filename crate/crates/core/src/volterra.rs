//! Solution through the equivalent Volterra integral equation
//!
//! ```text
//! Φ(x) = Φ₀(x) − Σ_j a_j(x) (I^{α−α_j} Φ)(x),
//! y(x) = Σ_{k<=k0} b_k (x−a)^{α−k}/Γ(α−k+1) + (I^α Φ)(x),
//! ```
//!
//! with `Φ₀ = g − Σ_j Σ_{k<=k0} b_k a_j(x)(x−a)^{α−α_j−k}/Γ(α−α_j−k+1)`.
//!
//! Φ is held as a [`SplitFunction`]. Power terms with `Re μ <= 0` form a
//! finite series that is a fixed point of the equation on its own and is
//! integrated exactly. What remains is bounded and is solved on a graded
//! mesh, either by windowed Picard iteration or by direct marching.

use num_complex::Complex64 as C64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fracops::{power_map, recip_gamma, rl_integral_at, ProductWeights};
use crate::model::{
    exponents_match, graded_mesh, CauchyProblem, CoefficientFunction, Forcing, GeneralizedPowerSeries, GridFunction,
    PowerTerm, EXPONENT_MERGE_TOL,
};
use crate::solvability::{classify_initial_data, Verdict};

/// Safety factor: each window is short enough that the integral operator
/// has norm at most this.
pub const OMEGA_TARGET: f64 = 0.5;

const GAUSS_POINTS: usize = 6;
const MAX_GRADING: f64 = 4.0;
const ZERO: C64 = C64::new(0.0, 0.0);

fn is_singular(t: &PowerTerm) -> bool {
    t.exponent.re <= EXPONENT_MERGE_TOL
}

/// `singular(x) + regular(x)`: an exact series of terms with `Re μ <= 0`
/// plus a bounded function sampled on a mesh.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitFunction {
    pub singular: GeneralizedPowerSeries,
    pub regular: GridFunction,
}

impl SplitFunction {
    pub fn eval(&self, x: f64) -> C64 {
        self.singular.eval(x) + self.regular.interpolate(x)
    }

    pub fn nodes(&self) -> &[f64] {
        self.regular.nodes()
    }

    /// True when both parts vanish identically.
    pub fn is_zero(&self) -> bool {
        self.singular.is_empty() && self.regular.values().iter().all(|v| *v == ZERO)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Picard,
    Marching,
}

/// First Picard iterate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StartIterate {
    Phi0,
    Zero,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveOptions {
    /// Number of mesh intervals.
    pub nodes: usize,
    /// Mesh grading `r`; chosen from the data when `None`.
    pub grading: Option<f64>,
    /// Picard stops once the L¹ norm of successive differences, summed over
    /// windows, drops below this.
    pub picard_tol: f64,
    pub max_iterations: usize,
    pub method: Method,
    pub start: StartIterate,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            nodes: 256,
            grading: None,
            picard_tol: 1e-10,
            max_iterations: 500,
            method: Method::Picard,
            start: StartIterate::Phi0,
        }
    }
}

impl SolveOptions {
    pub fn validate(&self) -> Result<()> {
        if self.nodes < 16 {
            return Err(Error::InvalidOptions(format!(
                "at least 16 mesh intervals required, got {}",
                self.nodes
            )));
        }
        if !(self.picard_tol > 0.0 && self.picard_tol.is_finite()) {
            return Err(Error::InvalidOptions(format!(
                "tolerance must be positive, got {}",
                self.picard_tol
            )));
        }
        if let Some(r) = self.grading {
            if !(r >= 1.0 && r.is_finite()) {
                return Err(Error::InvalidOptions(format!("grading must be at least 1, got {r}")));
            }
        }
        if self.max_iterations == 0 {
            return Err(Error::InvalidOptions("max_iterations must be positive".into()));
        }
        Ok(())
    }
}

/// One term `a_j·I^{β}` with `β = α − α_j`. The coefficient is split into a
/// closed-form part and, for tabulated coefficients, a remainder that
/// vanishes at `a`: `a_j(x) = a_j(a) + (a_j(x) − a_j(a))`.
#[derive(Debug, Clone)]
struct Coupling {
    beta: C64,
    symbolic: GeneralizedPowerSeries,
    remainder: Option<GridFunction>,
}

impl Coupling {
    fn coefficient(&self, x: f64) -> C64 {
        self.symbolic.eval(x) + self.remainder_at(x)
    }

    fn remainder_at(&self, x: f64) -> C64 {
        self.remainder.as_ref().map_or(ZERO, |r| r.interpolate(x))
    }

    fn real_beta(&self) -> Result<f64> {
        if self.beta.im.abs() > EXPONENT_MERGE_TOL {
            return Err(Error::UnsupportedOrder(self.beta));
        }
        Ok(self.beta.re)
    }
}

fn couplings(p: &CauchyProblem) -> Vec<Coupling> {
    let trunc = p.truncation();
    p.lower_terms
        .iter()
        .enumerate()
        .map(|(j, t)| {
            let beta = p.coupling_order(j);
            match &t.coeff {
                CoefficientFunction::Series(s) => Coupling {
                    beta,
                    symbolic: s.clone(),
                    remainder: None,
                },
                CoefficientFunction::Sampled { values, .. } => {
                    let at_a = values.values()[0];
                    let rest = values.values().iter().map(|v| v - at_a).collect();
                    Coupling {
                        beta,
                        symbolic: GeneralizedPowerSeries::constant(p.a, at_a, trunc),
                        remainder: Some(values.with_values(rest)),
                    }
                }
            }
        })
        .collect()
}

/// `Σ_j symbolic_j · I^{β_j} s`.
fn apply_symbolic(cps: &[Coupling], s: &GeneralizedPowerSeries) -> Result<GeneralizedPowerSeries> {
    let mut acc = GeneralizedPowerSeries::zero(s.base_point(), s.truncation());
    for c in cps {
        let integral = power_map(s, -c.beta)?;
        acc = acc.add(&c.symbolic.mul(&integral)?)?;
    }
    Ok(acc)
}

/// Φ₀ as an exact series plus a pointwise part from tabulated data.
#[derive(Debug, Clone)]
struct Phi0 {
    series: GeneralizedPowerSeries,
    sampled_forcing: Option<GridFunction>,
    /// `Σ_k b_k H(k0−k)(x−a)^{β_j−k}/Γ(β_j−k+1)` for each coupling.
    initial_powers: Vec<GeneralizedPowerSeries>,
}

impl Phi0 {
    fn new(p: &CauchyProblem, cps: &[Coupling]) -> Result<Self> {
        let report = classify_initial_data(p);
        if let Verdict::NoSolution(ks) = report.verdict {
            return Err(Error::UnsolvableInitialData(ks));
        }
        let trunc = p.truncation();
        let (mut series, sampled_forcing) = match &p.forcing {
            Forcing::Series(g) => (g.clone().with_truncation(trunc), None),
            Forcing::Sampled(g) => (GeneralizedPowerSeries::zero(p.a, trunc), Some(g.clone())),
        };
        let mut initial_powers = Vec::with_capacity(cps.len());
        for c in cps {
            let terms = (1..=report.k0).map(|k| {
                let e = c.beta - k as f64;
                PowerTerm::new(p.initial[k - 1] * recip_gamma(e + 1.0), e)
            });
            let powers = GeneralizedPowerSeries::from_terms(p.a, terms, trunc)?;
            series = series.sub(&c.symbolic.mul(&powers)?)?;
            initial_powers.push(powers);
        }
        Ok(Self {
            series,
            sampled_forcing,
            initial_powers,
        })
    }

    /// The part of Φ₀ not in `series`.
    fn pointwise(&self, cps: &[Coupling], x: f64) -> C64 {
        let mut v = self.sampled_forcing.as_ref().map_or(ZERO, |g| g.interpolate(x));
        for (c, powers) in cps.iter().zip(&self.initial_powers) {
            let r = c.remainder_at(x);
            if r != ZERO {
                v -= r * powers.eval(x);
            }
        }
        v
    }
}

fn series_close(x: &GeneralizedPowerSeries, y: &GeneralizedPowerSeries) -> bool {
    x.len() == y.len()
        && x.terms().iter().zip(y.terms()).all(|(s, t)| {
            exponents_match(s.exponent, t.exponent)
                && (s.coeff - t.coeff).norm() <= 1e-14 * s.coeff.norm().max(t.coeff.norm())
        })
}

/// The singular fixed point `S = sing(Φ₀ − Σ_j a_j I^{β_j} S)`. Each pass
/// raises exponents by at least `min Re β_j`, so the iteration terminates.
fn singular_fixed_point(phi0: &GeneralizedPowerSeries, cps: &[Coupling]) -> Result<GeneralizedPowerSeries> {
    let mut s = phi0.split_by(is_singular).0;
    if cps.is_empty() || s.is_empty() {
        return Ok(s);
    }
    let min_beta = cps.iter().map(|c| c.beta.re).fold(f64::INFINITY, f64::min);
    let passes = (1.0 / min_beta).ceil() as usize + 8;
    for _ in 0..passes {
        let next = phi0.sub(&apply_symbolic(cps, &s)?)?.split_by(is_singular).0;
        if series_close(&next, &s) {
            return Ok(next);
        }
        s = next;
    }
    Err(Error::NoConvergence {
        iterations: passes,
        increment: f64::NAN,
    })
}

/// Everything the grid solve needs: `Φ = S + R` where `S` is the singular
/// fixed point and `R = F − Σ_j a_j I^{β_j} R`.
struct Reduction {
    cps: Vec<Coupling>,
    phi0: Phi0,
    s_star: GeneralizedPowerSeries,
    /// Series part of `F`; every exponent has positive real part.
    f_series: GeneralizedPowerSeries,
    /// `I^{β_j} S` for each coupling.
    s_integrals: Vec<GeneralizedPowerSeries>,
}

impl Reduction {
    fn new(p: &CauchyProblem) -> Result<Self> {
        let cps = couplings(p);
        let phi0 = Phi0::new(p, &cps)?;
        let s_star = singular_fixed_point(&phi0.series, &cps)?;
        let f_series = phi0
            .series
            .sub(&s_star)?
            .sub(&apply_symbolic(&cps, &s_star)?)?
            .split_by(|t| !is_singular(t))
            .0;
        let s_integrals = cps
            .iter()
            .map(|c| power_map(&s_star, -c.beta))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            cps,
            phi0,
            s_star,
            f_series,
            s_integrals,
        })
    }

    fn forcing_at(&self, x: f64) -> C64 {
        let mut v = self.f_series.eval(x) + self.phi0.pointwise(&self.cps, x);
        for (c, is) in self.cps.iter().zip(&self.s_integrals) {
            let r = c.remainder_at(x);
            if r != ZERO {
                v -= r * is.eval(x);
            }
        }
        v
    }

    fn has_sampled_parts(&self) -> bool {
        self.phi0.sampled_forcing.is_some() || self.cps.iter().any(|c| c.remainder.is_some())
    }

    /// `max(1, 2/(1+σ))` for the smallest exponent σ left to the mesh.
    fn auto_grading(&self) -> f64 {
        let sigma = if self.has_sampled_parts() {
            0.0
        } else {
            self.f_series.min_re_exponent().min(1.0)
        };
        (2.0 / (1.0 + sigma)).clamp(1.0, MAX_GRADING)
    }
}

/// Builds `Φ₀` on the mesh described by `opts`.
pub fn build_phi0(p: &CauchyProblem, opts: &SolveOptions) -> Result<SplitFunction> {
    opts.validate()?;
    let red = Reduction::new(p)?;
    let (singular, regular_series) = red.phi0.series.split_by(is_singular);
    let grading = opts.grading.unwrap_or_else(|| red.auto_grading());
    let regular = GridFunction::from_fn(p.a, p.b, opts.nodes, grading, |x| {
        regular_series.eval(x) + red.phi0.pointwise(&red.cps, x)
    })?;
    Ok(SplitFunction { singular, regular })
}

/// `ω(δ) = A·Σ_{j=0..l} δ^{Re β_j}/|Γ(β_j+1)|` with `A = max_j sup |a_j|`.
///
/// The sum always includes the slot `α_0 = 0` (`β_0 = α`), whether or not
/// the equation has a term in `y` itself.
pub fn contraction_ratio(p: &CauchyProblem, delta: f64) -> f64 {
    let alpha = p.alpha.value();
    let mut betas: Vec<C64> = (0..p.lower_terms.len()).map(|j| p.coupling_order(j)).collect();
    if !p.lower_terms.iter().any(|t| t.order.re == 0.0) {
        betas.push(alpha);
    }
    p.coefficient_bound()
        * betas
            .iter()
            .map(|&beta| delta.powf(beta.re) * recip_gamma(beta + 1.0).norm())
            .sum::<f64>()
}

#[derive(Debug, Clone, PartialEq)]
pub struct ContractionParams {
    pub a_bound: f64,
    pub delta: f64,
    pub omega: f64,
    /// Consecutive subintervals of length at most `delta` covering `[a, b]`.
    pub windows: Vec<(f64, f64)>,
}

pub fn contraction_params(p: &CauchyProblem) -> ContractionParams {
    let len = p.b - p.a;
    let a_bound = p.coefficient_bound();
    let delta = if contraction_ratio(p, len) <= OMEGA_TARGET {
        len
    } else {
        let (mut lo, mut hi) = (0.0, len);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if contraction_ratio(p, mid) <= OMEGA_TARGET {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    };
    let mut windows = Vec::new();
    let mut x = p.a;
    while x < p.b {
        let mut end = (x + delta).min(p.b);
        if p.b - end <= 1e-12 * len {
            end = p.b;
        }
        windows.push((x, end));
        x = end;
    }
    ContractionParams {
        a_bound,
        delta,
        omega: contraction_ratio(p, delta),
        windows,
    }
}

/// Discretized regular problem `R = F − Σ_j a_j I^{β_j} R`.
struct GridSystem {
    nodes: Vec<f64>,
    grading: f64,
    forcing: Vec<C64>,
    coefficients: Vec<Vec<C64>>,
    weights: Vec<ProductWeights>,
}

impl GridSystem {
    fn new(p: &CauchyProblem, red: &Reduction, opts: &SolveOptions) -> Result<Self> {
        let grading = opts.grading.unwrap_or_else(|| red.auto_grading());
        let nodes = graded_mesh(p.a, p.b, opts.nodes, grading);
        let forcing: Vec<C64> = nodes.par_iter().map(|&x| red.forcing_at(x)).collect();
        let trivial = forcing.iter().all(|v| *v == ZERO);
        let mut coefficients = Vec::new();
        let mut weights = Vec::new();
        if !trivial {
            for c in &red.cps {
                let beta = c.real_beta()?;
                coefficients.push(nodes.iter().map(|&x| c.coefficient(x)).collect());
                weights.push(ProductWeights::new(&nodes, beta));
            }
        }
        Ok(Self {
            nodes,
            grading,
            forcing,
            coefficients,
            weights,
        })
    }

    fn coupling_at(&self, values: &[C64], i: usize) -> C64 {
        self.coefficients
            .iter()
            .zip(&self.weights)
            .map(|(a, w)| a[i] * w.apply(values, i))
            .sum()
    }

    fn grid(&self, values: Vec<C64>) -> Result<GridFunction> {
        GridFunction::new(self.nodes.clone(), values, self.grading)
    }

    /// Node ranges `(lo, hi)` covering the windows; node `lo` is known when
    /// the window is solved.
    fn window_ranges(&self, windows: &[(f64, f64)]) -> Vec<(usize, usize)> {
        let last = self.nodes.len() - 1;
        let scale = 1e-12 * (self.nodes[last] - self.nodes[0]);
        let mut ranges = Vec::new();
        let mut lo = 0;
        for &(_, end) in windows {
            let hi = self.nodes.partition_point(|&t| t < end - scale).clamp(lo + 1, last);
            if hi > lo {
                ranges.push((lo, hi));
                lo = hi;
            }
            if lo == last {
                break;
            }
        }
        if lo < last {
            ranges.push((lo, last));
        }
        ranges
    }

    fn l1_between(&self, diff: &[C64], lo: usize, hi: usize) -> f64 {
        (lo..hi)
            .map(|p| 0.5 * (self.nodes[p + 1] - self.nodes[p]) * (diff[p].norm() + diff[p + 1].norm()))
            .sum()
    }

    fn picard(
        &self,
        windows: &[(f64, f64)],
        start: &[C64],
        tol: f64,
        max_iterations: usize,
    ) -> Result<(Vec<C64>, Vec<Vec<f64>>)> {
        let n = self.nodes.len();
        let length = self.nodes[n - 1] - self.nodes[0];
        let mut r = vec![ZERO; n];
        r[0] = self.forcing[0];
        let mut trace = Vec::new();
        for (lo, hi) in self.window_ranges(windows) {
            r[lo + 1..=hi].copy_from_slice(&start[lo + 1..=hi]);
            let window_tol = tol * (self.nodes[hi] - self.nodes[lo]) / length;
            let mut increments = Vec::new();
            loop {
                let next: Vec<C64> = (lo + 1..=hi)
                    .into_par_iter()
                    .map(|i| self.forcing[i] - self.coupling_at(&r, i))
                    .collect();
                let mut diff = vec![ZERO; n];
                for (i, v) in (lo + 1..=hi).zip(&next) {
                    diff[i] = v - r[i];
                    r[i] = *v;
                }
                let increment = self.l1_between(&diff, lo, hi);
                increments.push(increment);
                if increment < window_tol {
                    break;
                }
                if increments.len() >= max_iterations || !increment.is_finite() {
                    return Err(Error::NoConvergence {
                        iterations: increments.len(),
                        increment,
                    });
                }
            }
            trace.push(increments);
        }
        Ok((r, trace))
    }

    fn march(&self) -> Result<Vec<C64>> {
        let n = self.nodes.len();
        let mut r = vec![ZERO; n];
        r[0] = self.forcing[0];
        for i in 1..n {
            let mut diag = C64::new(1.0, 0.0);
            let mut history = ZERO;
            for (a, w) in self.coefficients.iter().zip(&self.weights) {
                diag += a[i] * w.diagonal(i);
                history += a[i] * w.history(&r, i);
            }
            if diag.norm() < 1e-14 {
                return Err(Error::SingularStep { node: i });
            }
            r[i] = (self.forcing[i] - history) / diag;
        }
        Ok(r)
    }
}

/// Per-window L¹ increments of a Picard solve.
#[derive(Debug, Clone, PartialEq)]
pub struct PicardTrace {
    pub windows: Vec<(f64, f64)>,
    pub increments: Vec<Vec<f64>>,
}

/// Picard iteration, window by window, also returning the increments.
pub fn picard_solve_traced(p: &CauchyProblem, opts: &SolveOptions) -> Result<(SplitFunction, PicardTrace)> {
    opts.validate()?;
    let red = Reduction::new(p)?;
    let sys = GridSystem::new(p, &red, opts)?;
    let start: Vec<C64> = match opts.start {
        StartIterate::Phi0 => {
            let regular = red.phi0.series.split_by(|t| !is_singular(t)).0;
            sys.nodes
                .iter()
                .map(|&x| regular.eval(x) + red.phi0.pointwise(&red.cps, x))
                .collect()
        }
        StartIterate::Zero => vec![ZERO; sys.nodes.len()],
    };
    let params = contraction_params(p);
    let (values, increments) = sys.picard(&params.windows, &start, opts.picard_tol, opts.max_iterations)?;
    let phi = SplitFunction {
        singular: red.s_star,
        regular: sys.grid(values)?,
    };
    let windows = sys
        .window_ranges(&params.windows)
        .into_iter()
        .map(|(lo, hi)| (sys.nodes[lo], sys.nodes[hi]))
        .collect();
    Ok((phi, PicardTrace { windows, increments }))
}

pub fn picard_solve(p: &CauchyProblem, opts: &SolveOptions) -> Result<SplitFunction> {
    picard_solve_traced(p, opts).map(|(phi, _)| phi)
}

/// Node-by-node solve: the unknown at `x_i` enters only through the
/// diagonal quadrature weight, leaving one linear equation per node.
pub fn marching_solve(p: &CauchyProblem, opts: &SolveOptions) -> Result<SplitFunction> {
    opts.validate()?;
    let red = Reduction::new(p)?;
    let sys = GridSystem::new(p, &red, opts)?;
    let values = sys.march()?;
    Ok(SplitFunction {
        singular: red.s_star,
        regular: sys.grid(values)?,
    })
}

/// Runs the method selected in `opts`.
pub fn solve(p: &CauchyProblem, opts: &SolveOptions) -> Result<SplitFunction> {
    match opts.method {
        Method::Picard => picard_solve(p, opts),
        Method::Marching => marching_solve(p, opts),
    }
}

/// `y = Σ_{k<=k0} b_k (x−a)^{α−k}/Γ(α−k+1) + I^α Φ`.
pub fn reconstruct_y(p: &CauchyProblem, phi: &SplitFunction) -> Result<SplitFunction> {
    let k0 = classify_initial_data(p).k0;
    let alpha = p.alpha.value();
    let lead = GeneralizedPowerSeries::from_terms(
        p.a,
        (1..=k0).map(|k| {
            let e = alpha - k as f64;
            PowerTerm::new(p.initial[k - 1] * recip_gamma(e + 1.0), e)
        }),
        p.truncation(),
    )?;
    let singular = lead.add(&power_map(&phi.singular, -alpha)?)?;
    let values = phi.regular.values();
    let regular = if values.iter().all(|v| *v == ZERO) {
        phi.regular.clone()
    } else {
        if !p.alpha.is_real() {
            return Err(Error::UnsupportedOrder(alpha));
        }
        let w = ProductWeights::new(phi.regular.nodes(), p.alpha.re);
        phi.regular.with_values(w.apply_all(values))
    };
    Ok(SplitFunction { singular, regular })
}

/// `lim_{x→a+} (D^ν s)(x)` for a series of integrable terms. `Re ν` may be
/// negative, in which case `D^ν` is the integral `I^{−ν}`. A term that
/// blows up or oscillates reports `ConditionViolated(k)`.
pub fn series_limit(s: &GeneralizedPowerSeries, nu: C64, k: usize) -> Result<C64> {
    let mut total = ZERO;
    for t in s.terms() {
        if !t.is_integrable() {
            return Err(Error::ConditionViolated(k));
        }
        if exponents_match(t.exponent, nu) {
            total += t.coeff / recip_gamma(nu + 1.0);
            continue;
        }
        let single = GeneralizedPowerSeries::from_terms(s.base_point(), [*t], s.truncation())?;
        for m in power_map(&single, nu)?.terms() {
            if m.exponent.re <= EXPONENT_MERGE_TOL {
                return Err(Error::ConditionViolated(k));
            }
        }
    }
    Ok(total)
}

/// `(k, lim_{x→a+} (D^{α−k} y)(x))` for `k = 1..n`. The mesh part of `y`
/// is `I^α` of a bounded function and contributes nothing to the limits.
pub fn check_initial_conditions(p: &CauchyProblem, y: &SplitFunction) -> Result<Vec<(usize, C64)>> {
    let alpha = p.alpha.value();
    (1..=p.n())
        .map(|k| series_limit(&y.singular, alpha - k as f64, k).map(|v| (k, v)))
        .collect()
}

/// Gauss–Legendre nodes and weights on `[0, 1]`.
fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    (0..n)
        .map(|i| {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for m in 2..=n {
                    let p2 = ((2 * m - 1) as f64 * x * p1 - (m - 1) as f64 * p0) / m as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            (0.5 * (1.0 - x), 1.0 / ((1.0 - x * x) * dp * dp))
        })
        .collect()
}

/// `‖Φ − Φ₀ + Σ_j a_j I^{α−α_j} Φ‖_{L¹(a,b)}`.
///
/// Evaluated by Gauss–Legendre quadrature on a graded mesh with twice as
/// many intervals as `phi`'s mesh, in the variable `t` with
/// `x = a + (b−a)t^q`; `q` is raised as needed to smooth out the singular
/// terms.
pub fn residual(p: &CauchyProblem, phi: &SplitFunction) -> Result<f64> {
    let cps = couplings(p);
    let phi0 = Phi0::new(p, &cps)?;
    let series_part = phi
        .singular
        .sub(&phi0.series)?
        .add(&apply_symbolic(&cps, &phi.singular)?)?;
    let s_integrals = cps
        .iter()
        .map(|c| power_map(&phi.singular, -c.beta))
        .collect::<Result<Vec<_>>>()?;
    let grid = &phi.regular;
    let grid_betas = if grid.values().iter().all(|v| *v == ZERO) {
        None
    } else {
        Some(cps.iter().map(Coupling::real_beta).collect::<Result<Vec<_>>>()?)
    };

    let rho = |x: f64| -> C64 {
        let mut v = series_part.eval(x) + grid.interpolate(x) - phi0.pointwise(&cps, x);
        for (j, c) in cps.iter().enumerate() {
            let r = c.remainder_at(x);
            if r != ZERO {
                v += r * s_integrals[j].eval(x);
            }
            if let Some(betas) = &grid_betas {
                v += c.coefficient(x) * rl_integral_at(grid.nodes(), grid.values(), betas[j], x);
            }
        }
        v
    };

    let sigma = series_part.min_re_exponent().min(0.0);
    let q = grid.grading().max(2.0 / (1.0 + sigma)).min(16.0);
    let panels = 2 * grid.intervals();
    let len = p.b - p.a;
    let rule = gauss_legendre(GAUSS_POINTS);
    let per_panel: Vec<f64> = (0..panels)
        .into_par_iter()
        .map(|i| {
            let h = 1.0 / panels as f64;
            rule.iter()
                .map(|&(s, w)| {
                    let t = (i as f64 + s) * h;
                    let x = p.a + len * t.powf(q);
                    let jac = len * q * t.powf(q - 1.0);
                    w * h * jac * rho(x).norm()
                })
                .sum::<f64>()
        })
        .collect();
    // Summed in order so the result does not depend on the thread count.
    Ok(per_panel.iter().sum())
}
