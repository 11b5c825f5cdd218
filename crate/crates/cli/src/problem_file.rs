//! JSON problem files.
//!
//! Orders and exponents are written as decimal strings so that values such
//! as `0.1` survive a round trip exactly; everything else is a plain JSON
//! number. Unknown keys are rejected at every level.

use std::fmt;

use fractus_core::model::{
    validate_problem, CauchyProblem, CoefficientFunction, ComplexOrder, Forcing, GeneralizedPowerSeries, GridFunction,
    PowerTerm, Truncation,
};
use fractus_core::C64;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::CliError;

/// A real number kept in decimal form. Accepts `"1.5"` or `1.5` on input
/// and always writes the string form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decimal(pub f64);

impl Serialize for Decimal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Decimal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct DecimalVisitor;

        impl Visitor<'_> for DecimalVisitor {
            type Value = Decimal;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a decimal string such as \"1.5\"")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Decimal, E> {
                match v.trim().parse::<f64>() {
                    Ok(x) if x.is_finite() => Ok(Decimal(x)),
                    _ => Err(E::custom(format!("`{v}` is not a finite decimal number"))),
                }
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Decimal, E> {
                Ok(Decimal(v))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Decimal, E> {
                Ok(Decimal(v as f64))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Decimal, E> {
                Ok(Decimal(v as f64))
            }
        }

        d.deserialize_any(DecimalVisitor)
    }
}

fn zero_decimal() -> Decimal {
    Decimal(0.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Order {
    pub re: Decimal,
    #[serde(default = "zero_decimal")]
    pub im: Decimal,
}

impl Order {
    fn to_order(self) -> ComplexOrder {
        ComplexOrder::new(self.re.0, self.im.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Interval {
    pub a: f64,
    pub b: f64,
}

/// One term `c·(x−a)^μ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesTerm {
    pub exponent: Order,
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

fn unit_grading() -> f64 {
    1.0
}

fn is_unit(r: &f64) -> bool {
    *r == 1.0
}

/// Values tabulated on explicit nodes; `im` may be omitted for real data.
fn to_grid(nodes: &[f64], re: &[f64], im: &[f64], grading: f64, what: &str) -> Result<GridFunction, CliError> {
    if re.len() != nodes.len() || !(im.is_empty() || im.len() == nodes.len()) {
        return Err(CliError::Invalid(format!(
            "{what}: {} nodes but {} real and {} imaginary values",
            nodes.len(),
            re.len(),
            im.len()
        )));
    }
    let values = (0..nodes.len())
        .map(|i| C64::new(re[i], im.get(i).copied().unwrap_or(0.0)))
        .collect();
    GridFunction::new(nodes.to_vec(), values, grading).map_err(|e| CliError::Invalid(format!("{what}: {e}")))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum Coefficient {
    Constant {
        re: f64,
        #[serde(default)]
        im: f64,
    },
    Series {
        terms: Vec<SeriesTerm>,
    },
    Sampled {
        nodes: Vec<f64>,
        re: Vec<f64>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        im: Vec<f64>,
        #[serde(default = "unit_grading", skip_serializing_if = "is_unit")]
        grading: f64,
        vanishing_order: f64,
        sup_bound: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub order: Order,
    pub coeff: Coefficient,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum ForcingSpec {
    #[default]
    Zero,
    Constant {
        re: f64,
        #[serde(default)]
        im: f64,
    },
    Series {
        terms: Vec<SeriesTerm>,
    },
    Sampled {
        nodes: Vec<f64>,
        re: Vec<f64>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        im: Vec<f64>,
        #[serde(default = "unit_grading", skip_serializing_if = "is_unit")]
        grading: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InitialValue {
    pub k: usize,
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodName {
    Picard,
    Marching,
    Series,
}

impl std::str::FromStr for MethodName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "picard" => Ok(Self::Picard),
            "marching" => Ok(Self::Marching),
            "series" => Ok(Self::Series),
            other => Err(format!(
                "unknown method `{other}` (expected picard, marching or series)"
            )),
        }
    }
}

/// Solver settings; every field is optional in the file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SolverSpec {
    pub method: MethodName,
    pub nodes: usize,
    pub grading: Option<f64>,
    pub tol: f64,
    pub max_iterations: usize,
    pub max_terms: usize,
    /// Defaults to `40·Re α`.
    pub exponent_cap: Option<f64>,
}

impl Default for SolverSpec {
    fn default() -> Self {
        Self {
            method: MethodName::Picard,
            nodes: 256,
            grading: None,
            tol: 1e-10,
            max_iterations: 500,
            max_terms: Truncation::DEFAULT_MAX_TERMS,
            exponent_cap: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub interval: Interval,
    pub alpha: Order,
    #[serde(default)]
    pub terms: Vec<Term>,
    #[serde(default)]
    pub forcing: ForcingSpec,
    #[serde(default)]
    pub initial: Vec<InitialValue>,
    #[serde(default)]
    pub solver: SolverSpec,
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(CliError::Parse)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("problem files always serialize");
        s.push('\n');
        s
    }

    pub fn truncation(&self) -> Truncation {
        let alpha = self.alpha.to_order();
        let t = Truncation::for_order(&alpha).with_max_terms(self.solver.max_terms);
        match self.solver.exponent_cap {
            Some(cap) => t.with_cap(cap),
            None => t,
        }
    }

    fn series(&self, terms: &[SeriesTerm], what: &str) -> Result<GeneralizedPowerSeries, CliError> {
        let terms = terms
            .iter()
            .map(|t| PowerTerm::new(C64::new(t.re, t.im), t.exponent.to_order().value()));
        GeneralizedPowerSeries::from_terms(self.interval.a, terms, self.truncation())
            .map_err(|e| CliError::Invalid(format!("{what}: {e}")))
    }

    /// Builds and validates the problem.
    pub fn to_problem(&self) -> Result<CauchyProblem, CliError> {
        let (a, b) = (self.interval.a, self.interval.b);
        let alpha = self.alpha.to_order();
        let mut p = CauchyProblem::new(a, b, alpha);
        let trunc = self.truncation();
        for (j, term) in self.terms.iter().enumerate() {
            let what = format!("terms[{j}]");
            let coeff = match &term.coeff {
                Coefficient::Constant { re, im } => CoefficientFunction::constant(a, C64::new(*re, *im), trunc),
                Coefficient::Series { terms } => CoefficientFunction::Series(self.series(terms, &what)?),
                Coefficient::Sampled {
                    nodes,
                    re,
                    im,
                    grading,
                    vanishing_order,
                    sup_bound,
                } => CoefficientFunction::Sampled {
                    values: to_grid(nodes, re, im, *grading, &what)?,
                    vanishing_order: *vanishing_order,
                    sup_bound: *sup_bound,
                },
            };
            p = p.with_term(term.order.to_order(), coeff);
        }
        p.forcing = match &self.forcing {
            ForcingSpec::Zero => Forcing::zero(a, trunc),
            ForcingSpec::Constant { re, im } => {
                Forcing::Series(GeneralizedPowerSeries::constant(a, C64::new(*re, *im), trunc))
            }
            ForcingSpec::Series { terms } => Forcing::Series(self.series(terms, "forcing")?),
            ForcingSpec::Sampled { nodes, re, im, grading } => {
                Forcing::Sampled(to_grid(nodes, re, im, *grading, "forcing")?)
            }
        };
        let n = p.n();
        for v in &self.initial {
            if v.k == 0 || v.k > n {
                return Err(CliError::Invalid(format!(
                    "initial value for k = {} but k runs over 1..={n}",
                    v.k
                )));
            }
            p.initial[v.k - 1] = C64::new(v.re, v.im);
        }
        validate_problem(p).map_err(|e| CliError::Invalid(e.to_string()))
    }
}
