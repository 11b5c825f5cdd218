//! Closed-form series for solutions.
//!
//! With `Φ_{i,0} = −Σ_j a_j (x−a)^{β_j−i}/Γ(β_j−i+1)` (`β_j = α − α_j`)
//! and `Φ_{i,m} = −Σ_j a_j I^{β_j} Φ_{i,m−1}`, the canonical fundamental
//! system is
//!
//! ```text
//! y_i = (x−a)^{α−i}/Γ(α−i+1) + I^α Σ_m Φ_{i,m},   i = 1..k0,
//! ```
//!
//! with `(D^{α−k} y_i)(a+) = δ_ik`. The Green's function is `y_1` for the
//! problem started at `ξ`, and solutions are superposed as
//! `y = Σ_i b_i y_i + ∫_a^x G(x; ξ) g(ξ) dξ`.
//!
//! For constant coefficients the same objects also have explicit
//! multinomial forms, built here by a separate enumeration.

use num_complex::Complex64 as C64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fracops::{gamma, gamma_ratio, power_map, recip_gamma, rl_derivative_series, ProductWeights};
use crate::model::{
    compensated_sum, exponents_match, CauchyProblem, CoefficientFunction, ComplexOrder, Forcing,
    GeneralizedPowerSeries, GridFunction, LowerTerm, PowerTerm, Truncation, EXPONENT_MERGE_TOL,
};
use crate::solvability::compute_k0;
use crate::volterra::series_limit;

/// Layers whose weighted size stays below the drop tolerance this many
/// times in a row end the expansion.
const QUIET_LAYERS: usize = 3;

/// Relative size of the estimated tail above which an evaluation is flagged.
pub const TAIL_WARNING: f64 = 1e-6;

const ZERO: C64 = C64::new(0.0, 0.0);

/// `y_1..y_{k0}` for one problem.
#[derive(Debug, Clone, PartialEq)]
pub struct FundamentalSystem {
    pub base_point: f64,
    pub alpha: ComplexOrder,
    pub k0: usize,
    pub truncation: Truncation,
    /// `entries[i-1] = y_i`.
    pub entries: Vec<GeneralizedPowerSeries>,
    /// `Σ |c|·(b−a)^{Re μ}` over the residual `D^α y_i + Σ_j a_j D^{α_j} y_i`.
    pub tail_bounds: Vec<f64>,
}

impl FundamentalSystem {
    /// `y_i`, 1-based.
    pub fn entry(&self, i: usize) -> &GeneralizedPowerSeries {
        &self.entries[i - 1]
    }

    pub fn eval(&self, i: usize, x: f64) -> SeriesValue {
        evaluate(self.entry(i), x)
    }
}

/// A series value together with a rough size of its highest-order terms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: C64,
    pub tail_estimate: f64,
    /// Set when `tail_estimate` exceeds [`TAIL_WARNING`] of `|value|`.
    pub warning: bool,
}

/// Evaluates `s(x)` with compensated summation; the tail estimate is the
/// total size of the top tenth of the terms (by exponent).
pub fn evaluate(s: &GeneralizedPowerSeries, x: f64) -> SeriesValue {
    let t = x - s.base_point();
    let mut values: Vec<C64> = s.terms().iter().map(|term| term.eval_offset(t)).collect();
    let tail_len = (values.len() / 10).max(1).min(values.len());
    let tail_estimate = values[values.len() - tail_len..].iter().map(|v| v.norm()).sum::<f64>();
    let value = compensated_sum(&mut values);
    SeriesValue {
        value,
        tail_estimate,
        warning: tail_estimate > TAIL_WARNING * value.norm(),
    }
}

fn require_series(p: &CauchyProblem) -> Result<Vec<(C64, &GeneralizedPowerSeries)>> {
    p.lower_terms
        .iter()
        .enumerate()
        .map(|(j, t)| match &t.coeff {
            CoefficientFunction::Series(s) => Ok((p.coupling_order(j), s)),
            CoefficientFunction::Sampled { .. } => Err(Error::UnsupportedCoefficients(format!(
                "coefficient of D^{} y is tabulated; use the Volterra solver",
                t.order
            ))),
        })
        .collect()
}

fn check_finite(s: &GeneralizedPowerSeries) -> Result<()> {
    match s
        .terms()
        .iter()
        .find(|t| !(t.coeff.re.is_finite() && t.coeff.im.is_finite()))
    {
        Some(t) => Err(Error::CoefficientOverflow {
            exponent: t.exponent.re,
        }),
        None => Ok(()),
    }
}

/// Keeps at most `max_terms` terms and returns the new frontier when
/// something was cut.
fn cap_terms(s: GeneralizedPowerSeries, max_terms: usize) -> Result<(GeneralizedPowerSeries, Option<f64>)> {
    if s.len() <= max_terms {
        return Ok((s, None));
    }
    let frontier = s.terms()[max_terms - 1].exponent.re;
    let kept = s.terms()[..max_terms].to_vec();
    let out = GeneralizedPowerSeries::from_terms(s.base_point(), kept, s.truncation())?;
    Ok((out, Some(frontier)))
}

/// `Σ_m Φ_m` with `Φ_0 = seed` and `Φ_m = −Σ_j a_j I^{β_j} Φ_{m−1}`,
/// keeping terms that stay below the cap once `I^α` is applied.
/// At most `budget` terms are kept; when more are produced the cap is
/// lowered to the exponent of the last one kept.
fn neumann_sum(
    p: &CauchyProblem,
    seed: &GeneralizedPowerSeries,
    trunc: Truncation,
    budget: usize,
) -> Result<GeneralizedPowerSeries> {
    let coeffs = require_series(p)?;
    let alpha_re = p.alpha.re;
    let len = p.b - p.a;
    let mut inner = Truncation {
        max_terms: usize::MAX,
        exponent_cap: trunc.exponent_cap - alpha_re,
        drop_tol: trunc.drop_tol,
    };
    let mut layer = GeneralizedPowerSeries::from_terms(seed.base_point(), seed.terms().to_vec(), inner)?;
    let mut sum = GeneralizedPowerSeries::zero(seed.base_point(), inner);
    let mut quiet = 0;
    while !layer.is_empty() {
        check_finite(&layer)?;
        sum = sum.add(&layer)?;
        let (capped, frontier) = cap_terms(sum, budget)?;
        sum = capped;
        if let Some(f) = frontier {
            inner.exponent_cap = f;
            sum = sum.with_truncation(inner);
        }
        let size = layer
            .terms()
            .iter()
            .map(|t| t.coeff.norm() * len.powf(t.exponent.re + alpha_re))
            .fold(0.0, f64::max);
        quiet = if size < trunc.drop_tol { quiet + 1 } else { 0 };
        if quiet >= QUIET_LAYERS {
            break;
        }
        let mut next = GeneralizedPowerSeries::zero(seed.base_point(), inner);
        let current = layer.with_truncation(inner);
        for (beta, a) in &coeffs {
            next = next.sub(&a.mul(&power_map(&current, -*beta)?)?)?;
        }
        layer = next;
    }
    Ok(sum.with_truncation(trunc))
}

/// `(x−a)^{α−i}/Γ(α−i+1)`.
fn leading_term(p: &CauchyProblem, i: usize, trunc: Truncation) -> Result<GeneralizedPowerSeries> {
    let e = p.alpha.value() - i as f64;
    GeneralizedPowerSeries::from_terms(p.a, [PowerTerm::new(recip_gamma(e + 1.0), e)], trunc)
}

/// `Φ_{i,0} = −Σ_j a_j (x−a)^{β_j−i}/Γ(β_j−i+1)`.
fn canonical_seed(p: &CauchyProblem, i: usize) -> Result<GeneralizedPowerSeries> {
    let trunc = Truncation {
        max_terms: usize::MAX,
        exponent_cap: f64::INFINITY,
        drop_tol: 0.0,
    };
    let mut seed = GeneralizedPowerSeries::zero(p.a, trunc);
    for (beta, a) in require_series(p)? {
        let e = beta - i as f64;
        let power = GeneralizedPowerSeries::from_terms(p.a, [PowerTerm::new(recip_gamma(e + 1.0), e)], trunc)?;
        seed = seed.sub(&a.mul(&power)?)?;
    }
    Ok(seed)
}

fn canonical_entry(p: &CauchyProblem, i: usize, trunc: Truncation) -> Result<GeneralizedPowerSeries> {
    let budget = trunc.max_terms.saturating_sub(1).max(1);
    let phi = neumann_sum(p, &canonical_seed(p, i)?, trunc, budget)?;
    let entry = leading_term(p, i, trunc)?.add(&power_map(&phi, -p.alpha.value())?.with_truncation(trunc))?;
    check_finite(&entry)?;
    Ok(entry)
}

/// `Σ |c|·(b−a)^{Re μ}` over `D^α y + Σ_j a_j D^{α_j} y`.
fn tail_bound(p: &CauchyProblem, y: &GeneralizedPowerSeries) -> Result<f64> {
    let open = Truncation {
        max_terms: usize::MAX,
        exponent_cap: f64::INFINITY,
        drop_tol: 0.0,
    };
    let y = y.clone().with_truncation(open);
    let mut res = rl_derivative_series(&y, &p.alpha)?;
    for t in &p.lower_terms {
        let a = t.coeff.as_series().expect("checked by require_series");
        res = res.add(&a.mul(&rl_derivative_series(&y, &t.order)?)?)?;
    }
    Ok(res.weighted_norm(p.b - p.a))
}

/// The canonical fundamental system `y_1..y_{k0}` in exact series form.
pub fn canonical_system(p: &CauchyProblem, trunc: Truncation) -> Result<FundamentalSystem> {
    require_series(p)?;
    let k0 = compute_k0(p);
    let built: Vec<(GeneralizedPowerSeries, f64)> = (1..=k0)
        .into_par_iter()
        .map(|i| {
            let y = canonical_entry(p, i, trunc)?;
            let bound = tail_bound(p, &y)?;
            Ok((y, bound))
        })
        .collect::<Result<_>>()?;
    let (entries, tail_bounds) = built.into_iter().unzip();
    Ok(FundamentalSystem {
        base_point: p.a,
        alpha: p.alpha,
        k0,
        truncation: trunc,
        entries,
        tail_bounds,
    })
}

/// `lim_{x→a+} (D^{α−k} y_i)(x)`; `δ_ik` for a canonical system.
pub fn check_canonical(sys: &FundamentalSystem, i: usize, k: usize) -> Result<C64> {
    series_limit(sys.entry(i), sys.alpha.value() - k as f64, k)
}

/// `Σ_i b_i y_i`; data beyond `k0` must vanish.
pub fn homogeneous_solution(sys: &FundamentalSystem, b: &[C64]) -> Result<GeneralizedPowerSeries> {
    let bad: Vec<usize> = (sys.k0 + 1..=b.len()).filter(|&k| b[k - 1] != ZERO).collect();
    if !bad.is_empty() {
        return Err(Error::UnsolvableInitialData(bad));
    }
    let mut y = GeneralizedPowerSeries::zero(sys.base_point, sys.truncation);
    for (bi, entry) in b.iter().zip(&sys.entries) {
        if *bi != ZERO {
            y = y.add(&entry.scale(*bi))?;
        }
    }
    Ok(y)
}

/// `y = I^α Σ_m Φ_m` with `Φ_0 = g`: the solution with zero initial data.
pub fn inhomogeneous_series(
    p: &CauchyProblem,
    g: &GeneralizedPowerSeries,
    trunc: Truncation,
) -> Result<GeneralizedPowerSeries> {
    if g.base_point() != p.a {
        return Err(Error::InvalidOperand(g.base_point(), p.a));
    }
    let phi = neumann_sum(p, g, trunc, trunc.max_terms)?;
    let y = power_map(&phi, -p.alpha.value())?.with_truncation(trunc);
    check_finite(&y)?;
    Ok(y)
}

fn binomial(mu: C64, m: usize) -> C64 {
    (0..m).fold(C64::new(1.0, 0.0), |acc, r| acc * (mu - r as f64) / (r + 1) as f64)
}

/// Re-expands `s` (based at `a`) about `xi >= a`. Integer powers are
/// expanded exactly; other powers by their binomial series up to the cap,
/// which converges for `x − ξ < ξ − a`.
fn reexpand(s: &GeneralizedPowerSeries, xi: f64, trunc: Truncation) -> Result<GeneralizedPowerSeries> {
    let d = xi - s.base_point();
    if d == 0.0 {
        return Ok(s.clone().with_truncation(trunc));
    }
    let mut terms = Vec::new();
    for t in s.terms() {
        let mu = t.exponent;
        let is_natural = mu.im == 0.0 && mu.re >= 0.0 && mu.re.fract() == 0.0;
        let last = if is_natural {
            mu.re as usize
        } else {
            trunc.exponent_cap.max(0.0).floor() as usize
        };
        for m in 0..=last {
            let coeff = t.coeff * binomial(mu, m) * crate::model::pow_real(d, mu - m as f64);
            terms.push(PowerTerm::new(coeff, C64::new(m as f64, 0.0)));
        }
    }
    GeneralizedPowerSeries::from_terms(xi, terms, trunc)
}

/// `G(x; ξ)`.
#[derive(Debug, Clone, PartialEq)]
pub enum GreenFunction {
    /// `G(x; ξ) = s(x − ξ)`, `s` stored with base point 0. Used when the
    /// coefficients do not depend on `x`.
    Shifted(GeneralizedPowerSeries),
    /// Sections `G(·; ξ_m)`, each a series based at `ξ_m`.
    Sampled2D {
        xi: Vec<f64>,
        sections: Vec<GeneralizedPowerSeries>,
    },
}

impl GreenFunction {
    /// The series `x ↦ G(x; ξ)` based at `ξ`.
    pub fn section(&self, xi: f64) -> Result<GeneralizedPowerSeries> {
        match self {
            Self::Shifted(s) => Ok(s.clone().rebased(xi)),
            Self::Sampled2D { xi: nodes, sections } => nodes
                .iter()
                .position(|&t| (t - xi).abs() <= 1e-12 * (1.0 + xi.abs()))
                .map(|m| sections[m].clone())
                .ok_or_else(|| Error::InvalidGrid(format!("no Green's function section at ξ = {xi}"))),
        }
    }

    /// `G(x; ξ)`, zero for `x <= ξ`.
    pub fn eval(&self, x: f64, xi: f64) -> Result<C64> {
        if x <= xi {
            return Ok(ZERO);
        }
        Ok(self.section(xi)?.eval(x))
    }
}

/// The problem restarted at `ξ`: coefficients re-expanded about `ξ`, zero
/// data.
fn restarted_at(p: &CauchyProblem, xi: f64, trunc: Truncation) -> Result<CauchyProblem> {
    if !(xi >= p.a && xi <= p.b) {
        return Err(Error::InvalidInterval { a: xi, b: p.b });
    }
    let lower_terms = p
        .lower_terms
        .iter()
        .map(|t| {
            let a = t.coeff.as_series().expect("checked by require_series");
            Ok(LowerTerm {
                order: t.order,
                coeff: CoefficientFunction::Series(reexpand(a, xi, trunc)?),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CauchyProblem {
        a: xi,
        b: p.b.max(xi + f64::EPSILON),
        alpha: p.alpha,
        lower_terms,
        forcing: Forcing::zero(xi, trunc),
        initial: vec![ZERO; p.n()],
    })
}

/// `G(x; ξ)` as the first canonical function of the problem started at `ξ`.
pub fn green_series(p: &CauchyProblem, xi: f64, trunc: Truncation) -> Result<GreenFunction> {
    require_series(p)?;
    if !(xi >= p.a && xi < p.b) {
        return Err(Error::InvalidInterval { a: xi, b: p.b });
    }
    if p.constant_coefficients().is_some() {
        let entry = canonical_entry(&restarted_at(p, xi, trunc)?, 1, trunc)?;
        return Ok(GreenFunction::Shifted(entry.rebased(0.0)));
    }
    let entry = canonical_entry(&restarted_at(p, xi, trunc)?, 1, trunc)?;
    Ok(GreenFunction::Sampled2D {
        xi: vec![xi],
        sections: vec![entry],
    })
}

/// Sections of `G` at every point of `xi` (each in `[a, b]`).
pub fn green_sections(p: &CauchyProblem, xi: &[f64], trunc: Truncation) -> Result<GreenFunction> {
    require_series(p)?;
    let sections = xi
        .par_iter()
        .map(|&x| canonical_entry(&restarted_at(p, x, trunc)?, 1, trunc))
        .collect::<Result<Vec<_>>>()?;
    Ok(GreenFunction::Sampled2D {
        xi: xi.to_vec(),
        sections,
    })
}

fn require_constants(p: &CauchyProblem) -> Result<Vec<(C64, C64)>> {
    let a = p
        .constant_coefficients()
        .ok_or_else(|| Error::UnsupportedCoefficients("the multinomial form needs constant coefficients".into()))?;
    Ok(a.into_iter()
        .enumerate()
        .map(|(j, aj)| (p.coupling_order(j), aj))
        .collect())
}

/// Multi-indices `β` of one total degree, each with its running weight and
/// `s(β) = Σ_m β_m (α − α_m)`.
#[derive(Debug, Clone)]
struct MultiIndex {
    beta: Vec<u32>,
    /// Lowest position that may still be incremented, so every multi-index
    /// is produced exactly once.
    first_free: usize,
    s: C64,
    /// One weight per chain being followed.
    weights: Vec<C64>,
}

/// Enumerates degree layers `|β| = k` and calls `emit(k, β)` on each.
/// `step(w, m, k, β)` gives the weight of `β + e_m` from that of `β`; a
/// chain stops when `s` passes `s_cap`.
fn enumerate_multi_indices<S, E>(
    couplings: &[(C64, C64)],
    start: Vec<C64>,
    s_cap: f64,
    drop_tol: f64,
    mut step: S,
    mut emit: E,
) -> Result<()>
where
    S: FnMut(usize, C64, usize, &MultiIndex) -> Result<C64>,
    E: FnMut(usize, &MultiIndex) -> Result<f64>,
{
    let l = couplings.len();
    let mut layer = vec![MultiIndex {
        beta: vec![0; l],
        first_free: 0,
        s: ZERO,
        weights: start,
    }];
    let mut quiet = 0;
    let mut k = 0;
    while !layer.is_empty() {
        let mut size: f64 = 0.0;
        for idx in &layer {
            size = size.max(emit(k, idx)?);
        }
        quiet = if size < drop_tol { quiet + 1 } else { 0 };
        if quiet >= QUIET_LAYERS || l == 0 {
            break;
        }
        let mut next = Vec::new();
        for idx in &layer {
            for (m, (beta_m, _)) in couplings.iter().enumerate().skip(idx.first_free) {
                let s = idx.s + beta_m;
                if s.re > s_cap + EXPONENT_MERGE_TOL {
                    continue;
                }
                let weights = idx
                    .weights
                    .iter()
                    .enumerate()
                    .map(|(c, &w)| step(c, w, m, idx))
                    .collect::<Result<Vec<_>>>()?;
                let mut beta = idx.beta.clone();
                beta[m] += 1;
                next.push(MultiIndex {
                    beta,
                    first_free: m,
                    s,
                    weights,
                });
            }
        }
        layer = next;
        k += 1;
    }
    Ok(())
}

/// `k!/(β_0!…β_l!)` grows to `(k+1)/(β_m+1)` times itself when `β_m`
/// increases by one.
fn multinomial_step(idx: &MultiIndex, m: usize) -> f64 {
    let k: u32 = idx.beta.iter().sum();
    f64::from(k + 1) / f64::from(idx.beta[m] + 1)
}

/// `y_i` from the multinomial formula for constant coefficients.
///
/// Each term is `(−1)^{k+1} (k!/Πβ_m!) Π a_m^{β_m} a_j (x−a)^{e}/Γ(e+1)`
/// with `e = β_j − i + α + s(β)`, summed over `|β| = k` and `j`.
pub fn constant_fundamental(p: &CauchyProblem, i: usize, trunc: Truncation) -> Result<GeneralizedPowerSeries> {
    let couplings = require_constants(p)?;
    let alpha = p.alpha.value();
    let mut terms = vec![PowerTerm::new(recip_gamma(alpha - i as f64 + 1.0), alpha - i as f64)];
    // chain c follows seed j = live[c]; seeds whose gamma factor has a pole vanish
    let live: Vec<usize> = (0..couplings.len())
        .filter(|&j| recip_gamma(couplings[j].0 - i as f64 + 1.0) != ZERO)
        .collect();
    let base: Vec<C64> = live.iter().map(|&j| couplings[j].0 - i as f64 + alpha).collect();
    let start: Vec<C64> = live
        .iter()
        .zip(&base)
        .map(|(&j, e)| couplings[j].1 * recip_gamma(e + 1.0))
        .collect();
    let min_base = base.iter().map(|e| e.re).fold(f64::INFINITY, f64::min);
    let s_cap = trunc.exponent_cap - min_base;
    let len = p.b - p.a;
    enumerate_multi_indices(
        &couplings,
        start,
        s_cap,
        trunc.drop_tol,
        |c, w, m, idx| {
            let e = base[c] + idx.s;
            let (beta_m, a_m) = couplings[m];
            Ok(w * a_m * multinomial_step(idx, m) * gamma_ratio(e + 1.0, e + beta_m + 1.0)?)
        },
        |k, idx| {
            let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
            let mut size: f64 = 0.0;
            for (c, w) in idx.weights.iter().enumerate() {
                let e = base[c] + idx.s;
                if e.re <= trunc.exponent_cap + EXPONENT_MERGE_TOL {
                    terms.push(PowerTerm::new(sign * w, e));
                    size = size.max(w.norm() * len.powf(e.re));
                }
            }
            Ok(size)
        },
    )?;
    let y = GeneralizedPowerSeries::from_terms(p.a, terms, trunc)?;
    check_finite(&y)?;
    Ok(y)
}

/// `G(x; ξ) = Σ_k (−1)^k Σ_{|β|=k} (k!/Πβ_m!) Π a_m^{β_m} (x−ξ)^{s+α−1}/Γ(s+α)`
/// for constant coefficients.
pub fn constant_green(p: &CauchyProblem, trunc: Truncation) -> Result<GreenFunction> {
    let couplings = require_constants(p)?;
    let alpha = p.alpha.value();
    let base = alpha - 1.0;
    let mut terms = Vec::new();
    let len = p.b - p.a;
    enumerate_multi_indices(
        &couplings,
        vec![recip_gamma(alpha)],
        trunc.exponent_cap - base.re,
        trunc.drop_tol,
        |_, w, m, idx| {
            let e = base + idx.s;
            let (beta_m, a_m) = couplings[m];
            Ok(w * a_m * multinomial_step(idx, m) * gamma_ratio(e + 1.0, e + beta_m + 1.0)?)
        },
        |k, idx| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let e = base + idx.s;
            let w = idx.weights[0];
            if e.re <= trunc.exponent_cap + EXPONENT_MERGE_TOL {
                terms.push(PowerTerm::new(sign * w, e));
            }
            Ok(w.norm() * len.powf(e.re))
        },
    )?;
    let s = GeneralizedPowerSeries::from_terms(0.0, terms, trunc)?;
    check_finite(&s)?;
    Ok(GreenFunction::Shifted(s))
}

/// `∫_a^x G(x; ξ) g(ξ) dξ` at the nodes of `g`.
///
/// Each term `c(ξ)(x−ξ)^μ` of `G` contributes `Γ(μ+1)·I^{μ+1}[c·g]`,
/// computed by product integration, so the kernel singularity is exact.
/// Sampled Green's functions need a section at every node of `g`.
pub fn green_convolution(green: &GreenFunction, g: &GridFunction) -> Result<GridFunction> {
    let nodes = g.nodes();
    let mut by_exponent: Vec<(C64, Vec<C64>)> = Vec::new();
    match green {
        GreenFunction::Shifted(s) => {
            for t in s.terms() {
                by_exponent.push((t.exponent, g.values().iter().map(|v| v * t.coeff).collect()));
            }
        }
        GreenFunction::Sampled2D { xi, sections } => {
            if xi.len() != nodes.len()
                || xi
                    .iter()
                    .zip(nodes)
                    .any(|(u, v)| (u - v).abs() > 1e-12 * (1.0 + v.abs()))
            {
                return Err(Error::InvalidGrid(
                    "Green's function sections must sit on the forcing nodes".into(),
                ));
            }
            for (p, section) in sections.iter().enumerate() {
                for t in section.terms() {
                    let slot = match by_exponent.iter().position(|(e, _)| exponents_match(*e, t.exponent)) {
                        Some(slot) => slot,
                        None => {
                            by_exponent.push((t.exponent, vec![ZERO; nodes.len()]));
                            by_exponent.len() - 1
                        }
                    };
                    by_exponent[slot].1[p] += t.coeff * g.values()[p];
                }
            }
        }
    }
    let parts = by_exponent
        .par_iter()
        .map(|(mu, h)| {
            if mu.im.abs() > EXPONENT_MERGE_TOL {
                return Err(Error::UnsupportedOrder(*mu + 1.0));
            }
            let scale = gamma(*mu + 1.0)?;
            let w = ProductWeights::new(nodes, mu.re + 1.0);
            Ok(w.apply_all(h).into_iter().map(|v| v * scale).collect::<Vec<C64>>())
        })
        .collect::<Result<Vec<_>>>()?;
    let mut values = vec![ZERO; nodes.len()];
    for part in parts {
        for (v, u) in values.iter_mut().zip(part) {
            *v += u;
        }
    }
    Ok(g.with_values(values))
}

/// `y = Σ_i b_i y_i + ∫_a^x G(x; ξ) g(ξ) dξ`.
#[derive(Debug, Clone, PartialEq)]
pub struct Superposition {
    /// Homogeneous part, plus the forced part when `g` is a series.
    pub series: GeneralizedPowerSeries,
    /// Forced part for tabulated `g`.
    pub convolution: Option<GridFunction>,
}

impl Superposition {
    pub fn eval(&self, x: f64) -> C64 {
        self.series.eval(x) + self.convolution.as_ref().map_or(ZERO, |c| c.interpolate(x))
    }
}

/// Combines the fundamental system (for the initial data of `p`) with the
/// forced response to `g`: the series path for series `g`, the Green's
/// function convolution for tabulated `g`.
pub fn superpose(
    p: &CauchyProblem,
    sys: &FundamentalSystem,
    green: &GreenFunction,
    g: &Forcing,
) -> Result<Superposition> {
    let mut series = homogeneous_solution(sys, &p.initial)?;
    let mut convolution = None;
    match g {
        Forcing::Series(s) => {
            if !s.is_empty() {
                series = series.add(&inhomogeneous_series(p, s, sys.truncation)?)?;
            }
        }
        Forcing::Sampled(grid) => convolution = Some(green_convolution(green, grid)?),
    }
    Ok(Superposition { series, convolution })
}
