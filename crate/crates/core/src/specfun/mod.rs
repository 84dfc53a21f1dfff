//! Special functions: two-parameter Mittag-Leffler and Wright functions,
//! plus the Gamma family they are built on.
//!
//! Every evaluation returns an [`EvalResult`] carrying its own absolute
//! error estimate. A result is accepted when
//! `est_abs_error <= tol * max(1, |value|)`, i.e. `tol` acts as an absolute
//! tolerance for values below one and a relative one above.

mod gamma;
mod mittag_leffler;
pub(crate) mod numerics;
mod wright;

use serde::Serialize;

use crate::error::{Error, Result};

pub use gamma::{gamma, ln_gamma, reciprocal_gamma};
pub(crate) use gamma::ln_factorial;
pub use mittag_leffler::{mittag_leffler, mittag_leffler_with};
pub use wright::{wright, wright_with};

/// Library-wide evaluation settings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpecFunConfig {
    /// Target accuracy, absolute below one and relative above.
    pub tol: f64,
    /// Maximum number of series terms before giving up.
    pub term_cap: usize,
    /// Direct series summation is only attempted for `|y| <= series_radius`
    /// on negative arguments.
    pub series_radius: f64,
}

impl Default for SpecFunConfig {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            term_cap: 2000,
            series_radius: 15.0,
        }
    }
}

impl SpecFunConfig {
    pub(crate) fn accepts(&self, value: f64, est_abs_error: f64) -> bool {
        est_abs_error.is_finite() && est_abs_error <= self.tol * value.abs().max(1.0)
    }
}

/// Which evaluation strategy produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EvalMethod {
    /// Closed form (argument zero).
    Exact,
    /// Compensated power series.
    Series,
    /// Inverse-power expansion truncated at its smallest term, plus the
    /// exponential contributions of any poles on the principal sheet.
    Asymptotic,
    /// Real branch-cut integral of the Laplace inversion, plus pole residues.
    BranchCut,
    /// Kummer-transformed positive series for order one.
    Kummer,
    /// Hankel contour integral evaluated with a Talbot-shaped path.
    Contour,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalResult {
    pub value: f64,
    pub est_abs_error: f64,
    pub terms_used: usize,
    pub method: EvalMethod,
}

/// Parameters (eta, gamma) of the Mittag-Leffler function E_{eta,gamma}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MlParams {
    eta: f64,
    gamma: f64,
}

impl MlParams {
    pub fn new(eta: f64, gamma: f64) -> Result<Self> {
        if !(eta.is_finite() && eta > 0.0) {
            return Err(Error::InvalidParams(format!(
                "Mittag-Leffler eta must be finite and > 0, got {eta}"
            )));
        }
        if !(gamma.is_finite() && gamma > 0.0) {
            return Err(Error::InvalidParams(format!(
                "Mittag-Leffler gamma must be finite and > 0, got {gamma}"
            )));
        }
        Ok(Self { eta, gamma })
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

/// Parameters (kappa, eta) of the Wright function W_{kappa,eta}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WrightParams {
    kappa: f64,
    eta: f64,
}

impl WrightParams {
    pub fn new(kappa: f64, eta: f64) -> Result<Self> {
        if !(kappa.is_finite() && kappa > -1.0) {
            return Err(Error::InvalidParams(format!(
                "Wright kappa must be finite and > -1, got {kappa}"
            )));
        }
        if !eta.is_finite() {
            return Err(Error::InvalidParams(format!(
                "Wright eta must be finite, got {eta}"
            )));
        }
        Ok(Self { kappa, eta })
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }
}

/// Outcome of one evaluation strategy before acceptance.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Attempt {
    pub value: f64,
    pub est_abs_error: f64,
    pub terms: usize,
}

impl Attempt {
    fn into_result(self, method: EvalMethod) -> EvalResult {
        EvalResult {
            value: self.value,
            est_abs_error: self.est_abs_error,
            terms_used: self.terms,
            method,
        }
    }
}

/// Sums a series whose terms are produced by
/// `term(r) -> (t_r, rel_err_r, envelope_r)` with `|t_r| <= envelope_r`.
///
/// Stops once the envelope is decreasing geometrically with ratio < 1/2 and
/// the bound on the remaining tail is negligible. The envelope must not
/// dip at poles of 1/Gamma, or a near-zero term would end the sum early. The flag is false if the
/// cap is hit first or a term is not finite.
pub(crate) fn sum_series<F>(term: F, cap: usize, tol: f64) -> (Attempt, bool)
where
    F: Fn(usize) -> (f64, f64, f64),
{
    let mut sum = numerics::CompensatedSum::default();
    let mut rounding = 0.0;
    let mut prev_mag: Option<f64> = None;
    for r in 0..cap {
        let (t, rel, env) = term(r);
        if !t.is_finite() {
            return (
                Attempt {
                    value: f64::NAN,
                    est_abs_error: f64::INFINITY,
                    terms: r + 1,
                },
                false,
            );
        }
        sum.add(t);
        rounding += t.abs() * rel;
        let mag = env.max(t.abs());
        if mag == 0.0 {
            continue;
        }
        if let Some(pm) = prev_mag {
            let q = mag / pm;
            if r >= 2 && q < 0.5 {
                let tail = mag * q / (1.0 - q);
                let s = sum.value().abs();
                if tail <= f64::EPSILON * s || tail <= 1e-3 * tol * s.max(1.0) {
                    let est = rounding + tail + 2.0 * f64::EPSILON * s;
                    return (
                        Attempt {
                            value: sum.value(),
                            est_abs_error: est,
                            terms: r + 1,
                        },
                        true,
                    );
                }
            }
        }
        prev_mag = Some(mag);
    }
    (
        Attempt {
            value: sum.value(),
            est_abs_error: f64::INFINITY,
            terms: cap,
        },
        false,
    )
}

/// Relative error of a term evaluated as exp(log_mag).
pub(crate) fn log_path_rel_err(log_mag: f64) -> f64 {
    (8.0 + log_mag.abs()) * f64::EPSILON
}
