//! Two-parameter Mittag-Leffler function
//! E_{eta,gamma}(y) = sum_r y^r / Gamma(eta r + gamma).
//!
//! Strategy for negative arguments y = -x:
//!
//! 1. compensated series when `x <= series_radius` and its rounding
//!    estimate meets the tolerance;
//! 2. for eta = 1 the Kummer-transformed series, whose terms are positive,
//!    or the asymptotic expansion once e^-x underflows;
//! 3. for eta <= 2 the inverse-power asymptotic expansion truncated at its
//!    smallest term, with the residues of the poles of
//!    s^(eta-gamma) / (s^eta + x) that lie on the principal sheet;
//! 4. otherwise the same residues plus the real branch-cut integral of the
//!    Laplace inversion, which is exact for every x and eta in (0, 2].
//!
//! Positive arguments only use the series.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::gamma::{ln_abs_reciprocal_gamma, ln_reciprocal_gamma_envelope, reciprocal_gamma};
use super::numerics::{integrate, CompensatedSum};
use super::{
    log_path_rel_err, sum_series, Attempt, EvalMethod, EvalResult, MlParams, SpecFunConfig,
};
use crate::error::{Error, Result};

/// E_{eta,gamma}(y) with the default configuration.
pub fn mittag_leffler(p: MlParams, y: f64) -> Result<EvalResult> {
    mittag_leffler_with(p, y, &SpecFunConfig::default())
}

pub fn mittag_leffler_with(p: MlParams, y: f64, cfg: &SpecFunConfig) -> Result<EvalResult> {
    if !y.is_finite() {
        return Err(Error::InvalidParams(format!(
            "Mittag-Leffler argument must be finite, got {y}"
        )));
    }
    evaluate(p.eta(), p.gamma(), y, cfg)
}

/// Core evaluator; `gamma` may be any real here (reductions produce
/// nonpositive second parameters).
pub(crate) fn evaluate(eta: f64, gamma: f64, y: f64, cfg: &SpecFunConfig) -> Result<EvalResult> {
    if y == 0.0 {
        return Ok(EvalResult {
            value: reciprocal_gamma(gamma),
            est_abs_error: 2.0 * f64::EPSILON * reciprocal_gamma(gamma).abs(),
            terms_used: 1,
            method: EvalMethod::Exact,
        });
    }

    let mut best: Option<Attempt> = None;
    let keep = |a: Attempt, best: &mut Option<Attempt>| {
        if best.is_none_or(|b| a.est_abs_error < b.est_abs_error) {
            *best = Some(a);
        }
    };

    if y > 0.0 {
        let (a, ok) = series(eta, gamma, y, cfg);
        if ok && cfg.accepts(a.value, a.est_abs_error) {
            return Ok(a.into_result(EvalMethod::Series));
        }
        return Err(Error::NonConvergence {
            terms: a.terms,
            est_abs_error: a.est_abs_error,
        });
    }

    let x = -y;
    // the series loses about x^(1/eta) / ln(10) digits to cancellation
    if x <= cfg.series_radius && x.powf(1.0 / eta) < 36.0 {
        let (a, ok) = series(eta, gamma, y, cfg);
        if ok && cfg.accepts(a.value, a.est_abs_error) {
            return Ok(a.into_result(EvalMethod::Series));
        }
        if ok {
            keep(a, &mut best);
        }
    }

    if eta == 1.0 {
        // the Kummer sum needs about x terms; past that the exponential
        // part of the asymptotics has underflowed
        if x < 700.0 {
            let a = kummer(gamma, x, cfg.term_cap);
            if cfg.accepts(a.value, a.est_abs_error) {
                return Ok(a.into_result(EvalMethod::Kummer));
            }
            keep(a, &mut best);
        } else if let Some(a) = asymptotic(eta, gamma, x) {
            if cfg.accepts(a.value, a.est_abs_error) {
                return Ok(a.into_result(EvalMethod::Asymptotic));
            }
            keep(a, &mut best);
        }
    } else if eta <= 2.0 {
        if let Some(a) = asymptotic(eta, gamma, x) {
            if cfg.accepts(a.value, a.est_abs_error) {
                return Ok(a.into_result(EvalMethod::Asymptotic));
            }
            keep(a, &mut best);
        }
        let a = branch_cut(eta, gamma, x, cfg)?;
        if cfg.accepts(a.value, a.est_abs_error) {
            return Ok(a.into_result(EvalMethod::BranchCut));
        }
        keep(a, &mut best);
    } else {
        let (a, ok) = series(eta, gamma, y, cfg);
        if ok && cfg.accepts(a.value, a.est_abs_error) {
            return Ok(a.into_result(EvalMethod::Series));
        }
        keep(a, &mut best);
    }

    let b = best.unwrap_or(Attempt {
        value: f64::NAN,
        est_abs_error: f64::INFINITY,
        terms: cfg.term_cap,
    });
    Err(Error::NonConvergence {
        terms: b.terms,
        est_abs_error: b.est_abs_error,
    })
}

fn series(eta: f64, gamma: f64, y: f64, cfg: &SpecFunConfig) -> (Attempt, bool) {
    let ln_abs_y = y.abs().ln();
    let neg = y < 0.0;
    let term = |r: usize| -> (f64, f64, f64) {
        let arg = eta * r as f64 + gamma;
        let log_pow = r as f64 * ln_abs_y;
        let env = (log_pow + ln_reciprocal_gamma_envelope(arg)).exp();
        if r == 0 {
            return (reciprocal_gamma(gamma), 4.0 * f64::EPSILON, env);
        }
        if arg < 160.0 && log_pow.abs() < 650.0 {
            let t = y.powi(r as i32) * reciprocal_gamma(arg);
            let rel = (12.0 + (r as f64).log2()) * f64::EPSILON;
            (t, rel, env)
        } else {
            let (lr, sign) = ln_abs_reciprocal_gamma(arg);
            if sign == 0.0 {
                return (0.0, 0.0, env);
            }
            let lm = log_pow + lr;
            let s = if neg && r % 2 == 1 { -sign } else { sign };
            (s * lm.exp(), log_path_rel_err(lm), env)
        }
    };
    sum_series(term, cfg.term_cap, cfg.tol)
}

/// Order one: E_{1,gamma}(-x) = e^-x / Gamma(gamma - 1) * sum_k x^k / (k! (k + gamma - 1)).
fn kummer(gamma: f64, x: f64, cap: usize) -> Attempt {
    if gamma == 1.0 {
        let v = (-x).exp();
        return Attempt {
            value: v,
            est_abs_error: f64::EPSILON * v,
            terms: 1,
        };
    }
    let pref = reciprocal_gamma(gamma - 1.0);
    let mut sum = CompensatedSum::default();
    let mut rounding = 0.0;
    // Poisson weights e^-x x^k / k! by recurrence; callers keep x below
    // the underflow threshold of e^-x
    let mut weight = (-x).exp();
    for k in 0..cap {
        if k > 0 {
            weight *= x / k as f64;
        }
        let t = weight / (k as f64 + gamma - 1.0);
        sum.add(t);
        rounding += t.abs() * (2 * k + 4) as f64 * f64::EPSILON;
        let s = sum.value().abs();
        // past the Poisson mode the weights decay faster than geometrically
        if k as f64 > x + 1.0 && t.abs() <= 0.25 * f64::EPSILON * s {
            let value = pref * sum.value();
            let est = pref.abs() * (rounding + 2.0 * t.abs()) + 4.0 * f64::EPSILON * value.abs();
            return Attempt {
                value,
                est_abs_error: est,
                terms: k + 1,
            };
        }
    }
    Attempt {
        value: pref * sum.value(),
        est_abs_error: f64::INFINITY,
        terms: cap,
    }
}

/// Sum of (1/eta) s^(1-gamma) e^s over the poles s^eta = -x on the
/// principal sheet (only present when eta > 1).
fn pole_residues(eta: f64, gamma: f64, x: f64) -> f64 {
    if eta <= 1.0 {
        return 0.0;
    }
    let mut total = 0.0;
    let ln_r = x.ln() / eta;
    // poles at angle pi (2k + 1) / eta with |2k + 1| < eta
    let kmax = ((eta - 1.0) / 2.0).ceil() as i64 + 1;
    for k in -kmax..=kmax {
        let angle = PI * (2 * k + 1) as f64 / eta;
        if angle.abs() >= PI {
            continue;
        }
        let ln_s = Complex64::new(ln_r, angle);
        let s = ln_s.exp();
        total += ((1.0 - gamma) * ln_s + s).exp().re / eta;
    }
    total
}

fn asymptotic(eta: f64, gamma: f64, x: f64) -> Option<Attempt> {
    let ln_x = x.ln();
    let mut sum = CompensatedSum::default();
    let mut rounding = 0.0;
    let mut prev_env: Option<f64> = None;
    let mut smallest = f64::INFINITY;
    let mut any_nonzero = false;
    let mut terminated = false;
    let mut terms = 0;
    for k in 1..=400usize {
        terms = k;
        let arg = gamma - eta * k as f64;
        // terms next to a pole of 1/Gamma are accidentally small, so the
        // truncation point is chosen on the pole-free envelope
        let env = (ln_reciprocal_gamma_envelope(arg) - k as f64 * ln_x).exp();
        if let Some(p) = prev_env {
            if env > p {
                break;
            }
        }
        prev_env = Some(env);
        smallest = env;
        let (lr, sign) = ln_abs_reciprocal_gamma(arg);
        if sign == 0.0 {
            if eta.fract() == 0.0 {
                // integer eta: every later argument is a pole too, so the
                // expansion terminates
                terminated = true;
                break;
            }
            continue;
        }
        any_nonzero = true;
        let lm = lr - k as f64 * ln_x;
        let mag = lm.exp();
        // -(-x)^-k / Gamma(gamma - eta k)
        let s = if k % 2 == 1 { sign } else { -sign };
        sum.add(s * mag);
        rounding += mag * log_path_rel_err(lm);
        if env <= 0.25 * f64::EPSILON * sum.value().abs() {
            break;
        }
    }
    if terminated {
        smallest = 0.0;
    }
    if !any_nonzero {
        if eta < 1.0 {
            return None;
        }
        // every algebraic coefficient vanishes (e.g. eta = 2, gamma = 1)
        smallest = 0.0;
    }
    let res = pole_residues(eta, gamma, x);
    // at eta = 1 the single pole sits on the cut; its size bounds the
    // neglected exponential part
    let edge = if eta == 1.0 {
        (-x).exp() * x.powf(1.0 - gamma).max(1.0)
    } else {
        0.0
    };
    let value = sum.value() + res;
    Some(Attempt {
        value,
        est_abs_error: smallest + edge + rounding + 4.0 * f64::EPSILON * (res.abs() + value.abs()),
        terms,
    })
}

/// Branch-cut representation, valid for eta in (0, 2], eta != 1:
///
/// ```text
/// E_{eta,gamma}(-x) = residues
///   + (1/pi) int_0^inf e^-r r^(eta-gamma) (r^eta sin(pi gamma) + x sin(pi (gamma-eta)))
///                      / (r^(2 eta) + 2 x r^eta cos(pi eta) + x^2) dr
/// ```
fn branch_cut(eta: f64, gamma: f64, x: f64, cfg: &SpecFunConfig) -> Result<Attempt> {
    // keep the endpoint singularity r^(eta-gamma) mild:
    // E_{eta,gamma}(-x) = (1/Gamma(gamma-eta) - E_{eta,gamma-eta}(-x)) / x
    if gamma - eta >= 0.5 {
        let inner = branch_cut(eta, gamma - eta, x, cfg)?;
        let c = reciprocal_gamma(gamma - eta);
        return Ok(Attempt {
            value: (c - inner.value) / x,
            est_abs_error: (inner.est_abs_error + 2.0 * f64::EPSILON * (c.abs() + inner.value.abs()))
                / x,
            terms: inner.terms,
        });
    }
    let a = eta - gamma;
    let sg = (PI * gamma).sin();
    let sgm = (PI * (gamma - eta)).sin();
    let (se, ce) = ((PI * eta).sin(), (PI * eta).cos());
    let kernel = |r: f64| -> f64 {
        let re = r.powf(eta);
        let shifted = re + x * ce;
        let den = shifted * shifted + (x * se) * (x * se);
        (-r).exp() * (re * sg + x * sgm) / den
    };
    // r = u^p on [0, 1] absorbs r^a
    let p = 1.0 / (a + 1.0);
    let near = |u: f64| -> f64 {
        if u == 0.0 {
            return if a == 0.0 { kernel(0.0) } else { p * kernel(0.0) };
        }
        let r = u.powf(p);
        p * kernel(r)
    };
    let far = |r: f64| -> f64 { r.powf(a) * kernel(r) };

    let peak = x.powf(1.0 / eta);
    let upper = 80.0 + 2.0 * a.max(0.0);
    let quad_tol = 0.05 * cfg.tol * PI;

    let mut near_bp = vec![0.0, 1.0];
    if peak < 1.0 {
        near_bp.insert(1, peak.powf(a + 1.0));
    }
    let mut far_bp = vec![1.0, upper];
    if peak > 1.0 && peak < upper {
        far_bp.insert(1, peak);
    }
    let q1 = integrate(near, &near_bp, 0.5 * quad_tol, 2000);
    let q2 = integrate(far, &far_bp, 0.5 * quad_tol, 2000);
    let res = pole_residues(eta, gamma, x);
    let value = (q1.value + q2.value) / PI + res;
    Ok(Attempt {
        value,
        est_abs_error: (q1.est_abs_error + q2.est_abs_error) / PI
            + 4.0 * f64::EPSILON * (res.abs() + value.abs()),
        terms: q1.evaluations + q2.evaluations,
    })
}
