//! Exact operator rules on c t^p.
//!
//! A term is stored as w t^p / Gamma(p + 1). In this normalization both
//! D^alpha and J^alpha leave w unchanged and only shift p, so compositions
//! that agree mathematically agree bit-for-bit in w.

use serde::Serialize;

use super::check_order;
use crate::error::{Error, Result};
use crate::specfun::{ln_gamma, reciprocal_gamma};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PowerTerm {
    weight: f64,
    exponent: f64,
}

impl PowerTerm {
    /// c t^p; requires p > -1 unless c = 0.
    pub fn new(coeff: f64, exponent: f64) -> Result<Self> {
        if !coeff.is_finite() || !exponent.is_finite() {
            return Err(Error::InvalidParams(format!(
                "power term needs finite coefficient and exponent, got {coeff} t^{exponent}"
            )));
        }
        if coeff != 0.0 && exponent <= -1.0 {
            return Err(Error::NonIntegrable(exponent));
        }
        let weight = if coeff == 0.0 {
            0.0
        } else {
            // c Gamma(p + 1), via logs to survive large p
            coeff * ln_gamma(exponent + 1.0).exp()
        };
        Ok(Self { weight, exponent })
    }

    /// t^p.
    pub fn monomial(exponent: f64) -> Result<Self> {
        Self::new(1.0, exponent)
    }

    pub fn zero() -> Self {
        Self {
            weight: 0.0,
            exponent: 0.0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff() == 0.0
    }

    pub fn exponent(&self) -> f64 {
        self.exponent
    }

    /// c in c t^p.
    pub fn coeff(&self) -> f64 {
        if self.weight == 0.0 {
            0.0
        } else {
            self.weight * reciprocal_gamma(self.exponent + 1.0)
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        let c = self.coeff();
        if c == 0.0 {
            0.0
        } else {
            c * t.powf(self.exponent)
        }
    }

    fn shifted(&self, by: f64) -> Result<Self> {
        let out = Self {
            weight: self.weight,
            exponent: self.exponent + by,
        };
        if out.is_zero() {
            return Ok(Self::zero());
        }
        if out.exponent <= -1.0 {
            return Err(Error::NonIntegrable(out.exponent));
        }
        Ok(out)
    }

    /// |self(t) - other(t)|, exact zero when both reduce to the same
    /// exponent and weight.
    pub(crate) fn gap(&self, other: &PowerTerm, t: f64) -> f64 {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => 0.0,
            (true, false) => other.eval(t).abs(),
            (false, true) => self.eval(t).abs(),
            (false, false) => {
                if same_exponent(self.exponent, other.exponent) {
                    ((self.weight - other.weight) * reciprocal_gamma(self.exponent + 1.0)).abs()
                        * t.powf(self.exponent)
                } else {
                    (self.eval(t) - other.eval(t)).abs()
                }
            }
        }
    }
}

/// Exponents built by different association orders of the same sum.
fn same_exponent(a: f64, b: f64) -> bool {
    (a - b).abs() <= 4.0 * f64::EPSILON * a.abs().max(b.abs()).max(1.0)
}

/// D^alpha (c t^p) = c Gamma(p+1)/Gamma(p-alpha+1) t^(p-alpha), except that
/// a monomial t^k with integer 0 <= k < ceil(alpha) is annihilated.
pub fn caputo_power(term: &PowerTerm, alpha: f64) -> Result<PowerTerm> {
    check_order(alpha, "alpha")?;
    if term.is_zero() {
        return Ok(PowerTerm::zero());
    }
    let m = alpha.ceil();
    let p = term.exponent;
    let k = p.round();
    if k >= 0.0 && same_exponent(p, k) && k < m {
        return Ok(PowerTerm::zero());
    }
    term.shifted(-alpha)
}

/// J^alpha (c t^p) = c Gamma(p+1)/Gamma(p+alpha+1) t^(p+alpha); J^0 is the
/// identity.
pub fn rl_integral_power(term: &PowerTerm, alpha: f64) -> Result<PowerTerm> {
    if !(alpha.is_finite() && alpha >= 0.0) {
        return Err(Error::InvalidOrder(format!(
            "integral order must be finite and >= 0, got {alpha}"
        )));
    }
    if alpha == 0.0 || term.is_zero() {
        return Ok(*term);
    }
    term.shifted(alpha)
}
