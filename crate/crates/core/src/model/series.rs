//! Generalized power series `Σ c·(x − a)^μ` with complex coefficients and
//! complex exponents.
//!
//! Every operator used by the solvers maps this class into itself, so it is
//! the exact representation for coefficients, forcing terms, fundamental
//! systems and Green's functions.

use std::cmp::Ordering;
use std::fmt;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::model::ComplexOrder;

/// Exponents closer than this in both components are merged.
pub const EXPONENT_MERGE_TOL: f64 = 1e-12;

/// One term `coeff · (x − a)^exponent`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerTerm {
    pub coeff: C64,
    pub exponent: C64,
}

impl PowerTerm {
    pub fn new(coeff: C64, exponent: C64) -> Self {
        Self { coeff, exponent }
    }

    pub fn real(coeff: f64, exponent: f64) -> Self {
        Self::new(C64::new(coeff, 0.0), C64::new(exponent, 0.0))
    }

    /// Integrable near the base point iff `Re μ > −1`.
    pub fn is_integrable(&self) -> bool {
        self.exponent.re > -1.0 + EXPONENT_MERGE_TOL
    }

    pub fn eval_offset(&self, t: f64) -> C64 {
        self.coeff * pow_real(t, self.exponent)
    }
}

/// `t^μ` for `t >= 0`; `0^μ` is 0 for `Re μ > 0`, 1 for `μ = 0` and
/// infinite otherwise.
pub fn pow_real(t: f64, mu: C64) -> C64 {
    if t > 0.0 {
        if mu.im == 0.0 {
            C64::new(t.powf(mu.re), 0.0)
        } else {
            (mu * t.ln()).exp()
        }
    } else if mu.re > 0.0 {
        C64::new(0.0, 0.0)
    } else if mu.re == 0.0 && mu.im == 0.0 {
        C64::new(1.0, 0.0)
    } else {
        C64::new(f64::INFINITY, 0.0)
    }
}

fn exponent_order(a: &C64, b: &C64) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

pub(crate) fn exponents_match(a: C64, b: C64) -> bool {
    (a.re - b.re).abs() < EXPONENT_MERGE_TOL && (a.im - b.im).abs() < EXPONENT_MERGE_TOL
}

/// Truncation policy applied on normalization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Truncation {
    pub max_terms: usize,
    /// Terms with `Re μ` above this are discarded.
    pub exponent_cap: f64,
    /// Terms with `|c| <= drop_tol` are discarded; 0 keeps everything
    /// except exact zeros.
    pub drop_tol: f64,
}

impl Truncation {
    pub const DEFAULT_MAX_TERMS: usize = 512;

    /// Defaults for a problem of order `alpha`.
    pub fn for_order(alpha: &ComplexOrder) -> Self {
        Self {
            max_terms: Self::DEFAULT_MAX_TERMS,
            exponent_cap: alpha.re * 40.0,
            drop_tol: 1e-300,
        }
    }

    pub fn with_cap(mut self, exponent_cap: f64) -> Self {
        self.exponent_cap = exponent_cap;
        self
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }
}

impl Default for Truncation {
    fn default() -> Self {
        Self {
            max_terms: Self::DEFAULT_MAX_TERMS,
            exponent_cap: 64.0,
            drop_tol: 1e-300,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneralizedPowerSeries {
    base_point: f64,
    terms: Vec<PowerTerm>,
    truncation: Truncation,
}

impl GeneralizedPowerSeries {
    pub fn zero(base_point: f64, truncation: Truncation) -> Self {
        Self {
            base_point,
            terms: Vec::new(),
            truncation,
        }
    }

    pub fn constant(base_point: f64, value: C64, truncation: Truncation) -> Self {
        Self::monomial(base_point, value, C64::new(0.0, 0.0), truncation)
    }

    pub fn monomial(base_point: f64, coeff: C64, exponent: C64, truncation: Truncation) -> Self {
        let mut s = Self::zero(base_point, truncation);
        s.terms.push(PowerTerm::new(coeff, exponent));
        s.normalize_lossy();
        s
    }

    /// Builds and normalizes a series; fails if more than `max_terms` survive.
    pub fn from_terms<I>(base_point: f64, terms: I, truncation: Truncation) -> Result<Self>
    where
        I: IntoIterator<Item = PowerTerm>,
    {
        let mut s = Self {
            base_point,
            terms: terms.into_iter().collect(),
            truncation,
        };
        s.normalize()?;
        Ok(s)
    }

    pub fn base_point(&self) -> f64 {
        self.base_point
    }

    pub fn terms(&self) -> &[PowerTerm] {
        &self.terms
    }

    pub fn truncation(&self) -> Truncation {
        self.truncation
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn with_truncation(mut self, truncation: Truncation) -> Self {
        self.truncation = truncation;
        self
    }

    /// Same terms about a different base point (the variable is relabelled,
    /// nothing is re-expanded).
    pub fn rebased(mut self, base_point: f64) -> Self {
        self.base_point = base_point;
        self
    }

    /// Smallest real part among the exponents, `+∞` for the empty series.
    pub fn min_re_exponent(&self) -> f64 {
        self.terms.first().map_or(f64::INFINITY, |t| t.exponent.re)
    }

    pub fn max_re_exponent(&self) -> f64 {
        self.terms.last().map_or(f64::NEG_INFINITY, |t| t.exponent.re)
    }

    /// Coefficient of `(x−a)^μ`, zero when absent.
    pub fn coefficient_of(&self, exponent: C64) -> C64 {
        self.terms
            .iter()
            .find(|t| exponents_match(t.exponent, exponent))
            .map_or(C64::new(0.0, 0.0), |t| t.coeff)
    }

    /// `Some(c)` when the series is the constant `c` (including 0).
    pub fn as_constant(&self) -> Option<C64> {
        match self.terms.as_slice() {
            [] => Some(C64::new(0.0, 0.0)),
            [t] if exponents_match(t.exponent, C64::new(0.0, 0.0)) => Some(t.coeff),
            _ => None,
        }
    }

    pub fn is_integrable(&self) -> bool {
        self.terms.iter().all(PowerTerm::is_integrable)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_base(other)?;
        let mut terms = Vec::with_capacity(self.len() + other.len());
        terms.extend_from_slice(&self.terms);
        terms.extend_from_slice(&other.terms);
        Self::from_terms(self.base_point, terms, self.truncation)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Cauchy product, truncated with `other`'s policy.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_base(other)?;
        let cap = other.truncation.exponent_cap;
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for p in &self.terms {
            for q in &other.terms {
                let exponent = p.exponent + q.exponent;
                if exponent.re <= cap + EXPONENT_MERGE_TOL {
                    terms.push(PowerTerm::new(p.coeff * q.coeff, exponent));
                }
            }
        }
        Self::from_terms(self.base_point, terms, other.truncation)
    }

    pub fn scale(&self, factor: C64) -> Self {
        let mut s = self.clone();
        for t in &mut s.terms {
            t.coeff *= factor;
        }
        s.normalize_lossy();
        s
    }

    pub fn neg(&self) -> Self {
        let mut s = self.clone();
        for t in &mut s.terms {
            t.coeff = -t.coeff;
        }
        s
    }

    /// Multiplies every term by `(x−a)^shift`.
    pub fn shift_exponents(&self, shift: C64) -> Self {
        let mut s = self.clone();
        for t in &mut s.terms {
            t.exponent += shift;
        }
        s.normalize_lossy();
        s
    }

    /// Terms satisfying `keep`, and the rest.
    pub fn split_by<F>(&self, keep: F) -> (Self, Self)
    where
        F: Fn(&PowerTerm) -> bool,
    {
        let (a, b): (Vec<_>, Vec<_>) = self.terms.iter().partition(|t| keep(t));
        (
            Self {
                terms: a,
                ..self.clone()
            },
            Self {
                terms: b,
                ..self.clone()
            },
        )
    }

    /// Keeps only terms with `Re μ <= frontier`.
    pub fn truncated_at(&self, frontier: f64) -> Self {
        self.split_by(|t| t.exponent.re <= frontier + EXPONENT_MERGE_TOL).0
    }

    /// Value at `x`, summed in order of decreasing magnitude with Neumaier
    /// compensation.
    pub fn eval(&self, x: f64) -> C64 {
        self.eval_offset(x - self.base_point)
    }

    /// Value at `x = a + t`.
    pub fn eval_offset(&self, t: f64) -> C64 {
        let mut values: Vec<C64> = self.terms.iter().map(|term| term.eval_offset(t)).collect();
        compensated_sum(&mut values)
    }

    /// `Σ |c|·(b−a)^{Re μ}`: a bound on `sup |s|` over `[a, b]` when every
    /// exponent has non-negative real part.
    pub fn weighted_norm(&self, length: f64) -> f64 {
        self.terms
            .iter()
            .map(|t| t.coeff.norm() * pow_real(length, C64::new(t.exponent.re, 0.0)).re)
            .sum()
    }

    fn check_base(&self, other: &Self) -> Result<()> {
        if self.base_point != other.base_point {
            return Err(Error::InvalidOperand(self.base_point, other.base_point));
        }
        Ok(())
    }

    fn sort_and_merge(&mut self) {
        let cap = self.truncation.exponent_cap;
        let drop_tol = self.truncation.drop_tol;
        self.terms.retain(|t| t.exponent.re <= cap + EXPONENT_MERGE_TOL);
        self.terms.sort_by(|a, b| exponent_order(&a.exponent, &b.exponent));
        let mut merged: Vec<PowerTerm> = Vec::with_capacity(self.terms.len());
        for t in self.terms.drain(..) {
            // Exponents are sorted by real part first, so a matching term with
            // a different imaginary part may sit a few slots back.
            let hit = merged
                .iter_mut()
                .rev()
                .take_while(|m| (m.exponent.re - t.exponent.re).abs() < EXPONENT_MERGE_TOL)
                .find(|m| exponents_match(m.exponent, t.exponent));
            match hit {
                Some(m) => m.coeff += t.coeff,
                None => merged.push(t),
            }
        }
        merged.retain(|t| {
            let m = t.coeff.norm();
            m != 0.0 && m > drop_tol
        });
        self.terms = merged;
    }

    fn normalize(&mut self) -> Result<()> {
        self.sort_and_merge();
        if self.terms.len() > self.truncation.max_terms {
            return Err(Error::TruncationOverflow {
                max: self.truncation.max_terms,
                got: self.terms.len(),
            });
        }
        Ok(())
    }

    /// Normalization for operations that cannot grow the term count.
    fn normalize_lossy(&mut self) {
        self.sort_and_merge();
    }
}

/// Neumaier summation over values sorted by decreasing modulus.
pub fn compensated_sum(values: &mut [C64]) -> C64 {
    values.sort_by(|a, b| b.norm().total_cmp(&a.norm()));
    let mut re = Neumaier::default();
    let mut im = Neumaier::default();
    for v in values.iter() {
        re.add(v.re);
        im.add(v.im);
    }
    C64::new(re.total(), im.total())
}

#[derive(Default)]
struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

impl fmt::Display for GeneralizedPowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})·(x-{})^({})", t.coeff, self.base_point, t.exponent)?;
        }
        Ok(())
    }
}
