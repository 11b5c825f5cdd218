use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::model::{ComplexOrder, GeneralizedPowerSeries, GridFunction, Truncation};

/// Number of sample points used to bound `sup |a_j|` for series coefficients.
const SUP_SAMPLES: usize = 2048;

/// A coefficient `a_j(x)`, continuous on `[a, b]`.
#[derive(Debug, Clone, PartialEq)]
pub enum CoefficientFunction {
    Series(GeneralizedPowerSeries),
    /// Tabulated coefficient. `vanishing_order` is the declared ν with
    /// `a_j(x)/(x−a)^ν` bounded and nonzero near `a`; it is trusted, not
    /// estimated. `sup_bound` must dominate `|a_j|` on `[a, b]`.
    Sampled {
        values: GridFunction,
        vanishing_order: f64,
        sup_bound: f64,
    },
}

impl CoefficientFunction {
    pub fn constant(a: f64, value: C64, truncation: Truncation) -> Self {
        Self::Series(GeneralizedPowerSeries::constant(a, value, truncation))
    }

    pub fn eval(&self, x: f64) -> C64 {
        match self {
            Self::Series(s) => s.eval(x),
            Self::Sampled { values, .. } => values.interpolate(x),
        }
    }

    /// ν: the lowest power of `(x−a)` present.
    pub fn vanishing_order(&self) -> f64 {
        match self {
            Self::Series(s) => s.min_re_exponent(),
            Self::Sampled { vanishing_order, .. } => *vanishing_order,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Self::Series(s) => s.is_empty(),
            Self::Sampled { values, .. } => values.values().iter().all(|v| *v == C64::new(0.0, 0.0)),
        }
    }

    pub fn as_series(&self) -> Option<&GeneralizedPowerSeries> {
        match self {
            Self::Series(s) => Some(s),
            Self::Sampled { .. } => None,
        }
    }

    /// `Some(c)` for a constant closed-form coefficient.
    pub fn as_constant(&self) -> Option<C64> {
        self.as_series().and_then(GeneralizedPowerSeries::as_constant)
    }

    /// Upper bound for `|a_j(x)|` on `[a, b]`.
    pub fn sup_bound(&self, a: f64, b: f64) -> f64 {
        match self {
            Self::Series(s) => {
                if let Some(c) = s.as_constant() {
                    return c.norm();
                }
                (0..=SUP_SAMPLES)
                    .map(|i| s.eval(a + (b - a) * i as f64 / SUP_SAMPLES as f64).norm())
                    .fold(0.0, f64::max)
            }
            Self::Sampled { sup_bound, .. } => *sup_bound,
        }
    }
}

/// Right-hand side `g(x) ∈ L(a, b)`.
#[derive(Debug, Clone, PartialEq)]
pub enum Forcing {
    Series(GeneralizedPowerSeries),
    Sampled(GridFunction),
}

impl Forcing {
    pub fn zero(a: f64, truncation: Truncation) -> Self {
        Self::Series(GeneralizedPowerSeries::zero(a, truncation))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Self::Series(s) => s.is_empty(),
            Self::Sampled(g) => g.values().iter().all(|v| *v == C64::new(0.0, 0.0)),
        }
    }

    pub fn eval(&self, x: f64) -> C64 {
        match self {
            Self::Series(s) => s.eval(x),
            Self::Sampled(g) => g.interpolate(x),
        }
    }
}

/// One lower-order term `a_j(x)·(D^{α_j} y)(x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LowerTerm {
    pub order: ComplexOrder,
    pub coeff: CoefficientFunction,
}

/// `D^α y + Σ_j a_j(x) D^{α_j} y = g` on `(a, b)` with
/// `(D^{α−k} y)(a+) = b_k`, `k = 1..n`.
#[derive(Debug, Clone, PartialEq)]
pub struct CauchyProblem {
    pub a: f64,
    pub b: f64,
    pub alpha: ComplexOrder,
    /// Sorted by increasing `Re α_j` after validation.
    pub lower_terms: Vec<LowerTerm>,
    pub forcing: Forcing,
    /// `b_1..b_n`.
    pub initial: Vec<C64>,
}

impl CauchyProblem {
    /// A homogeneous problem with zero initial data and no lower terms.
    pub fn new(a: f64, b: f64, alpha: ComplexOrder) -> Self {
        let truncation = Truncation::for_order(&alpha);
        Self {
            a,
            b,
            alpha,
            lower_terms: Vec::new(),
            forcing: Forcing::zero(a, truncation),
            initial: vec![C64::new(0.0, 0.0); alpha.natural_part()],
        }
    }

    pub fn with_term(mut self, order: ComplexOrder, coeff: CoefficientFunction) -> Self {
        self.lower_terms.push(LowerTerm { order, coeff });
        self
    }

    /// Adds a constant coefficient term.
    pub fn with_constant_term(self, order: ComplexOrder, value: C64) -> Self {
        let c = CoefficientFunction::constant(self.a, value, self.truncation());
        self.with_term(order, c)
    }

    pub fn with_forcing(mut self, forcing: Forcing) -> Self {
        self.forcing = forcing;
        self
    }

    pub fn with_initial(mut self, initial: Vec<C64>) -> Self {
        self.initial = initial;
        self
    }

    /// Sets `b_k` (1-based).
    pub fn with_initial_value(mut self, k: usize, value: C64) -> Self {
        if k >= 1 && k <= self.initial.len() {
            self.initial[k - 1] = value;
        }
        self
    }

    pub fn n(&self) -> usize {
        self.alpha.natural_part()
    }

    pub fn truncation(&self) -> Truncation {
        Truncation::for_order(&self.alpha)
    }

    /// `α − α_j`, the order of the integral coupling term `j`.
    pub fn coupling_order(&self, j: usize) -> C64 {
        self.alpha.value() - self.lower_terms[j].order.value()
    }

    /// True when every coefficient is a closed-form series.
    pub fn has_series_coefficients(&self) -> bool {
        self.lower_terms.iter().all(|t| t.coeff.as_series().is_some())
    }

    /// Constant coefficients `a_j`, if all of them are constant.
    pub fn constant_coefficients(&self) -> Option<Vec<C64>> {
        self.lower_terms.iter().map(|t| t.coeff.as_constant()).collect()
    }

    /// Largest `sup |a_j|` over `[a, b]`.
    pub fn coefficient_bound(&self) -> f64 {
        self.lower_terms
            .iter()
            .map(|t| t.coeff.sup_bound(self.a, self.b))
            .fold(0.0, f64::max)
    }

    pub fn validated(self) -> Result<Self> {
        validate_problem(self)
    }
}

fn covers(grid: &GridFunction, a: f64, b: f64) -> bool {
    let scale = a.abs().max(b.abs()).max(b - a);
    (grid.a() - a).abs() <= 1e-12 * scale && (grid.b() - b).abs() <= 1e-12 * scale
}

/// Checks the standing assumptions and returns the normalized problem:
/// lower terms sorted by `Re α_j`, identically-zero coefficients dropped.
pub fn validate_problem(mut p: CauchyProblem) -> Result<CauchyProblem> {
    if !(p.a.is_finite() && p.b.is_finite() && p.b > p.a) {
        return Err(Error::InvalidInterval { a: p.a, b: p.b });
    }
    if !(p.alpha.re > 0.0) || !p.alpha.im.is_finite() {
        return Err(Error::InvalidOrders(format!(
            "leading order {} must have positive real part",
            p.alpha
        )));
    }

    p.lower_terms.retain(|t| !t.coeff.is_zero());
    p.lower_terms.sort_by(|x, y| x.order.re.total_cmp(&y.order.re));

    for (j, t) in p.lower_terms.iter().enumerate() {
        if !(t.order.re >= 0.0) || !t.order.im.is_finite() {
            return Err(Error::InvalidOrders(format!(
                "order {} has negative real part",
                t.order
            )));
        }
        if t.order.re >= p.alpha.re {
            return Err(Error::InvalidOrders(format!(
                "lower order {} must have real part below that of {}",
                t.order, p.alpha
            )));
        }
        if j > 0 && t.order.re <= p.lower_terms[j - 1].order.re {
            return Err(Error::InvalidOrders(format!(
                "orders {} and {} have equal real parts",
                p.lower_terms[j - 1].order,
                t.order
            )));
        }
        match &t.coeff {
            CoefficientFunction::Series(s) => {
                if s.base_point() != p.a {
                    return Err(Error::InvalidOperand(s.base_point(), p.a));
                }
                let bad = s
                    .terms()
                    .iter()
                    .find(|term| term.exponent.re < 0.0 || (term.exponent.re == 0.0 && term.exponent.im != 0.0));
                if let Some(term) = bad {
                    return Err(Error::NotContinuousCoefficient {
                        index: j,
                        exponent: term.exponent.re,
                    });
                }
            }
            CoefficientFunction::Sampled {
                values,
                vanishing_order,
                sup_bound,
            } => {
                if !covers(values, p.a, p.b) {
                    return Err(Error::InvalidGrid(format!(
                        "coefficient {j} is not sampled over [{}, {}]",
                        p.a, p.b
                    )));
                }
                if !(*vanishing_order >= 0.0) {
                    return Err(Error::NotContinuousCoefficient {
                        index: j,
                        exponent: *vanishing_order,
                    });
                }
                if !(*sup_bound >= values.sup_norm()) {
                    return Err(Error::InvalidGrid(format!(
                        "coefficient {j}: declared bound {sup_bound} is below the sampled maximum {}",
                        values.sup_norm()
                    )));
                }
            }
        }
    }

    match &p.forcing {
        Forcing::Series(g) => {
            if g.base_point() != p.a {
                return Err(Error::InvalidOperand(g.base_point(), p.a));
            }
            if let Some(t) = g.terms().iter().find(|t| !t.is_integrable()) {
                return Err(Error::NotIntegrable(t.exponent));
            }
        }
        Forcing::Sampled(g) => {
            if !covers(g, p.a, p.b) {
                return Err(Error::InvalidGrid(format!(
                    "forcing is not sampled over [{}, {}]",
                    p.a, p.b
                )));
            }
        }
    }

    let n = p.n();
    if p.initial.len() != n {
        return Err(Error::InvalidInitialData {
            expected: n,
            got: p.initial.len(),
        });
    }
    Ok(p)
}
