use std::fmt;

use num_complex::Complex64 as C64;

/// Tolerance for deciding that an order is a natural number.
const INTEGER_TOL: f64 = 1e-12;

/// A fractional order `α = re + i·im` with `re >= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexOrder {
    pub re: f64,
    pub im: f64,
}

impl ComplexOrder {
    pub const fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    pub const fn real(re: f64) -> Self {
        Self { re, im: 0.0 }
    }

    pub fn value(&self) -> C64 {
        C64::new(self.re, self.im)
    }

    pub fn is_real(&self) -> bool {
        self.im == 0.0
    }

    /// True when the order is a natural number (imaginary part zero,
    /// real part integral).
    pub fn is_integer(&self) -> bool {
        self.im.abs() < INTEGER_TOL && (self.re - self.re.round()).abs() < INTEGER_TOL
    }

    /// `n = [Re α] + 1` for non-integer orders and `n = α` for natural ones.
    pub fn natural_part(&self) -> usize {
        if self.is_integer() {
            self.re.round().max(0.0) as usize
        } else {
            self.re.floor().max(0.0) as usize + 1
        }
    }
}

impl From<f64> for ComplexOrder {
    fn from(re: f64) -> Self {
        Self::real(re)
    }
}

impl fmt::Display for ComplexOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im == 0.0 {
            write!(f, "{}", self.re)
        } else if self.im > 0.0 {
            write!(f, "{}+{}i", self.re, self.im)
        } else {
            write!(f, "{}{}i", self.re, self.im)
        }
    }
}
