use num_complex::Complex64 as C64;

use super::gamma::gamma_ratio;
use crate::error::{Error, Result};
use crate::model::{ComplexOrder, GeneralizedPowerSeries, PowerTerm};

/// Termwise `c·(x−a)^μ ↦ c·Γ(μ+1)/Γ(μ+1−ν)·(x−a)^{μ−ν}`.
///
/// This is `D^ν` for `Re ν >= 0` and `I^{−ν}` for `Re ν < 0`. Every input
/// term must be integrable. Coefficients with a pole in the denominator come
/// out as exact zeros and are dropped.
pub fn power_map(s: &GeneralizedPowerSeries, nu: C64) -> Result<GeneralizedPowerSeries> {
    let mut out = Vec::with_capacity(s.len());
    for t in s.terms() {
        if !t.is_integrable() {
            return Err(Error::NotIntegrable(t.exponent));
        }
        let one = C64::new(1.0, 0.0);
        let ratio = gamma_ratio(t.exponent + one, t.exponent + one - nu)?;
        out.push(PowerTerm::new(t.coeff * ratio, t.exponent - nu));
    }
    GeneralizedPowerSeries::from_terms(s.base_point(), out, s.truncation())
}

/// `I^α_{a+}` applied exactly to a series (`Re α > 0`).
pub fn rl_integral_series(s: &GeneralizedPowerSeries, order: &ComplexOrder) -> Result<GeneralizedPowerSeries> {
    if !(order.re > 0.0) {
        return Err(Error::InvalidOrders(format!(
            "integral order {order} must have positive real part"
        )));
    }
    power_map(s, -order.value())
}

/// `D^α_{a+}` applied exactly to a series (`Re α >= 0`).
///
/// Terms of the result may fail to be integrable (`Re(μ − α) <= −1`); they
/// are kept and can be detected with [`PowerTerm::is_integrable`].
pub fn rl_derivative_series(s: &GeneralizedPowerSeries, order: &ComplexOrder) -> Result<GeneralizedPowerSeries> {
    if !(order.re >= 0.0) {
        return Err(Error::InvalidOrders(format!(
            "derivative order {order} must have non-negative real part"
        )));
    }
    power_map(s, order.value())
}

/// The functions `(x−a)^{α−j}`, `j = 1..n`, annihilated by `D^α`.
pub fn kernel_basis(order: &ComplexOrder) -> Result<Vec<PowerTerm>> {
    if order.is_integer() {
        return Err(Error::IntegerOrderKernel(order.re));
    }
    if !(order.re > 0.0) {
        return Err(Error::InvalidOrders(format!(
            "kernel order {order} must have positive real part"
        )));
    }
    let alpha = order.value();
    Ok((1..=order.natural_part())
        .map(|j| PowerTerm::new(C64::new(1.0, 0.0), alpha - j as f64))
        .collect())
}
