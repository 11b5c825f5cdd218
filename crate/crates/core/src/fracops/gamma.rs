//! Complex gamma function.
//!
//! For `Re z >= 0.5`: the Lanczos approximation (g = 7) near the real axis
//! and Stirling's series after upward recurrence at large imaginary part.
//! The reflection formula covers the rest. Arguments within [`POLE_SNAP`] of a
//! non-positive integer are treated as exact poles, so `recip_gamma` returns
//! an exact zero there. Coefficients such as `1/Γ(α - α_j - k + 1)` rely on
//! that to vanish without cancellation.

#![allow(clippy::excessive_precision)]

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::RwLock;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Distance to a non-positive integer below which an argument is a pole.
pub const POLE_SNAP: f64 = 1e-12;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_P: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

// Lanczos is used while |Im z| stays below this; Stirling beyond.
const LANCZOS_MAX_IM: f64 = 10.0;

// B_{2k} / (2k (2k−1)), k = 1..10.
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
];

// Below this modulus the argument is shifted up before the asymptotic series.
const STIRLING_MIN: f64 = 17.0;

// ln(sqrt(2π))
const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

/// Returns the non-positive integer `z` snaps to, if any.
pub fn pole_index(z: C64) -> Option<i64> {
    if z.im.abs() >= POLE_SNAP || z.re > POLE_SNAP {
        return None;
    }
    let nearest = z.re.round();
    if (z.re - nearest).abs() < POLE_SNAP && nearest <= 0.0 {
        Some(nearest as i64)
    } else {
        None
    }
}

fn exact_positive_integer(z: C64) -> Option<u32> {
    if z.im == 0.0 && z.re >= 1.0 && z.re <= 170.0 && z.re.fract() == 0.0 {
        Some(z.re as u32)
    } else {
        None
    }
}

fn factorial(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * f64::from(k))
}

/// sin(πz) with the real part reduced to [-1, 1] first.
fn sin_pi(z: C64) -> C64 {
    let x = z.re - 2.0 * (z.re / 2.0).round();
    let (s, c) = (PI * x).sin_cos();
    let y = PI * z.im;
    C64::new(s * y.cosh(), c * y.sinh())
}

/// ln Γ(z) for `Re z >= 0.5` (any branch; only differences are exponentiated).
fn ln_gamma_right(z: C64) -> C64 {
    if z.im.abs() < LANCZOS_MAX_IM {
        ln_gamma_lanczos(z)
    } else {
        ln_gamma_stirling(z)
    }
}

fn ln_gamma_lanczos(z: C64) -> C64 {
    let z = z - 1.0;
    let mut series = C64::new(LANCZOS_P[0], 0.0);
    for (i, p) in LANCZOS_P.iter().enumerate().skip(1) {
        series += *p / (z + i as f64);
    }
    let w = z + LANCZOS_G + 0.5;
    (z + 0.5) * w.ln() - w + HALF_LN_TWO_PI + series.ln()
}

fn ln_gamma_stirling(z: C64) -> C64 {
    let mut w = z;
    let mut shift = C64::new(1.0, 0.0);
    let mut log_shift = C64::new(0.0, 0.0);
    while w.norm() < STIRLING_MIN {
        shift *= w;
        if shift.norm() > 1e250 {
            log_shift += shift.ln();
            shift = C64::new(1.0, 0.0);
        }
        w += 1.0;
    }
    log_shift += shift.ln();
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut corr = C64::new(0.0, 0.0);
    let mut pow = inv;
    for c in STIRLING {
        corr += c * pow;
        pow *= inv2;
    }
    (w - 0.5) * w.ln() - w + HALF_LN_TWO_PI + corr - log_shift
}

fn gamma_right(z: C64) -> C64 {
    if let Some(n) = exact_positive_integer(z) {
        return C64::new(factorial(n - 1), 0.0);
    }
    ln_gamma_right(z).exp()
}

/// Γ(z). Fails with [`Error::GammaPole`] at (snapped) non-positive integers.
pub fn gamma(z: C64) -> Result<C64> {
    if pole_index(z).is_some() {
        return Err(Error::GammaPole(z));
    }
    if z.re < 0.5 {
        Ok(PI / (sin_pi(z) * gamma_right(1.0 - z)))
    } else {
        Ok(gamma_right(z))
    }
}

/// 1/Γ(z), an entire function: exactly zero at non-positive integers.
pub fn recip_gamma(z: C64) -> C64 {
    if pole_index(z).is_some() {
        return C64::new(0.0, 0.0);
    }
    if let Some(n) = exact_positive_integer(z) {
        return C64::new(1.0 / factorial(n - 1), 0.0);
    }
    if z.re < 0.5 {
        sin_pi(z) * gamma_right(1.0 - z) / PI
    } else {
        let g = gamma_right(z);
        if g.norm().is_infinite() {
            (-ln_gamma_right(z)).exp()
        } else {
            g.inv()
        }
    }
}

/// Γ(num)/Γ(den), evaluated through logarithms when either side would
/// overflow. Exactly zero when `den` is a pole.
pub fn gamma_ratio(num: C64, den: C64) -> Result<C64> {
    if pole_index(den).is_some() {
        if pole_index(num).is_some() {
            return Err(Error::GammaPole(num));
        }
        return Ok(C64::new(0.0, 0.0));
    }
    if num.re >= 0.5 && den.re >= 0.5 && (num.re > 150.0 || den.re > 150.0) {
        return Ok((ln_gamma_right(num) - ln_gamma_right(den)).exp());
    }
    Ok(gamma(num)? * recip_gamma(den))
}

/// Memoizing front end for repeated evaluations at the same arguments.
#[derive(Debug, Default)]
pub struct GammaEval {
    cache: RwLock<HashMap<(u64, u64), C64>>,
}

impl GammaEval {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn recip_gamma(&self, z: C64) -> C64 {
        let key = (z.re.to_bits(), z.im.to_bits());
        if let Some(v) = self.cache.read().expect("gamma cache poisoned").get(&key) {
            return *v;
        }
        let v = recip_gamma(z);
        self.cache.write().expect("gamma cache poisoned").insert(key, v);
        v
    }

    pub fn gamma(&self, z: C64) -> Result<C64> {
        if pole_index(z).is_some() {
            return Err(Error::GammaPole(z));
        }
        Ok(self.recip_gamma(z).inv())
    }

    pub fn len(&self) -> usize {
        self.cache.read().expect("gamma cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
