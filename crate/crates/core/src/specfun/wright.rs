//! Wright function W_{kappa,eta}(y) = sum_r y^r / (r! Gamma(kappa r + eta)),
//! kappa > -1.
//!
//! The series is used whenever its rounding estimate meets the tolerance.
//! For negative arguments past that point the Hankel representation
//!
//!   W_{kappa,eta}(y) = (1/2 pi i) int_Ha exp(s + y s^-kappa) s^-eta ds
//!
//! is evaluated with the midpoint rule in the path angle. For kappa < 0 the
//! path is the steepest-descent curve through the real saddle, along which
//! the exponential factor is real and monotone, so there is no cancellation
//! even when the value is far below one. For kappa >= 0 a Talbot-shaped
//! path is used.

use num_complex::Complex64;

use super::gamma::{ln_abs_reciprocal_gamma, ln_reciprocal_gamma_envelope, reciprocal_gamma};
use super::numerics::CompensatedSum;
use super::{
    ln_factorial, log_path_rel_err, sum_series, Attempt, EvalMethod, EvalResult, SpecFunConfig,
    WrightParams,
};
use crate::error::{Error, Result};

/// W_{kappa,eta}(y) with the default configuration.
pub fn wright(p: WrightParams, y: f64) -> Result<EvalResult> {
    wright_with(p, y, &SpecFunConfig::default())
}

pub fn wright_with(p: WrightParams, y: f64, cfg: &SpecFunConfig) -> Result<EvalResult> {
    if !y.is_finite() {
        return Err(Error::InvalidParams(format!(
            "Wright argument must be finite, got {y}"
        )));
    }
    let (kappa, eta) = (p.kappa(), p.eta());
    if y == 0.0 {
        let v = reciprocal_gamma(eta);
        return Ok(EvalResult {
            value: v,
            est_abs_error: 2.0 * f64::EPSILON * v.abs(),
            terms_used: 1,
            method: EvalMethod::Exact,
        });
    }

    let try_series = y > 0.0 || kappa >= 0.0 || -y <= cfg.series_radius;
    let mut best: Option<Attempt> = None;
    if try_series {
        let (a, ok) = series(kappa, eta, y, cfg);
        if ok && cfg.accepts(a.value, a.est_abs_error) {
            return Ok(a.into_result(EvalMethod::Series));
        }
        if ok {
            best = Some(a);
        }
    }
    if y < 0.0 {
        let a = contour(kappa, eta, -y, cfg);
        if cfg.accepts(a.value, a.est_abs_error) {
            return Ok(a.into_result(EvalMethod::Contour));
        }
        if best.is_none_or(|b| a.est_abs_error < b.est_abs_error) {
            best = Some(a);
        }
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

fn series(kappa: f64, eta: f64, y: f64, cfg: &SpecFunConfig) -> (Attempt, bool) {
    let ln_abs_y = y.abs().ln();
    let neg = y < 0.0;
    let term = |r: usize| -> (f64, f64, f64) {
        let arg = kappa * r as f64 + eta;
        let lp = r as f64 * ln_abs_y - ln_factorial(r);
        let env = (lp + ln_reciprocal_gamma_envelope(arg)).exp();
        if r == 0 {
            return (reciprocal_gamma(eta), 4.0 * f64::EPSILON, env);
        }
        let (lr, sign) = ln_abs_reciprocal_gamma(arg);
        if sign == 0.0 {
            return (0.0, 0.0, env);
        }
        let lm = lp + lr;
        let s = if neg && r % 2 == 1 { -sign } else { sign };
        (s * lm.exp(), log_path_rel_err(lm), env)
    };
    sum_series(term, cfg.term_cap, cfg.tol)
}

/// Path s(theta), s'(theta) for theta in (0, pi); the lower half is the
/// conjugate.
fn path_point(kappa: f64, scale: f64, th: f64) -> (Complex64, Complex64) {
    let (sn, cs) = th.sin_cos();
    if kappa < 0.0 {
        // steepest descent of s - x s^nu through its real saddle:
        // Im(s - x s^nu) = 0 along r(theta) = scale (sin(nu theta) / (nu sin theta))^(1/(1-nu))
        let nu = -kappa;
        let (snu, cnu) = (nu * th).sin_cos();
        let r = scale * (snu / (nu * sn)).powf(1.0 / (1.0 - nu));
        let dr = r / (1.0 - nu) * (nu * cnu / snu - cs / sn);
        let e = Complex64::new(cs, sn);
        (r * e, e * Complex64::new(dr, r))
    } else {
        // Talbot shape
        let cot = cs / sn;
        (
            Complex64::new(scale * th * cot, scale * th),
            Complex64::new(scale * (cot - th / (sn * sn)), scale),
        )
    }
}

fn contour(kappa: f64, eta: f64, x: f64, cfg: &SpecFunConfig) -> Attempt {
    let scale = if kappa < 0.0 {
        let nu = -kappa;
        (x * nu).powf(1.0 / (1.0 - nu)).max(1.0)
    } else {
        x.powf(1.0 / (1.0 + kappa)).max(1.0)
    };
    let eval = |n: usize| -> (f64, f64) {
        let mut sum = CompensatedSum::default();
        let h = std::f64::consts::PI / n as f64;
        for k in 1..=n {
            let th = (k as f64 - 0.5) * h;
            let (s, ds) = path_point(kappa, scale, th);
            let ln_s = s.ln();
            let expo = s - x * (-kappa * ln_s).exp() - eta * ln_s;
            let g = expo.exp() * ds;
            // far along the path the integrand underflows while the
            // path itself overflows
            if g.re.is_finite() && g.im.is_finite() {
                sum.add(g.im);
            }
        }
        (sum.value() / n as f64, sum.abs_sum() / n as f64)
    };
    let mut n = 32;
    let (mut prev, _) = eval(n);
    let mut last = Attempt {
        value: prev,
        est_abs_error: f64::INFINITY,
        terms: n,
    };
    while n < 4096 {
        n *= 2;
        let (cur, abs) = eval(n);
        let diff = (cur - prev).abs();
        last = Attempt {
            value: cur,
            est_abs_error: diff + 16.0 * f64::EPSILON * abs,
            terms: n,
        };
        if diff <= 0.1 * cfg.tol * cur.abs().max(1.0) {
            break;
        }
        prev = cur;
    }
    last
}
