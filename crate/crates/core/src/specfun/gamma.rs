//! Gamma function family.
//!
//! Lanczos approximation (g = 7, nine coefficients) for arguments >= 1/2,
//! reflection below. Small positive integers hit an exact factorial table.

use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
// published digits, kept verbatim
#[allow(clippy::excessive_precision)]
const LANCZOS_COEF: [f64; 9] = [
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

/// 0! through 22!, all exactly representable.
const FACTORIALS: [f64; 23] = {
    let mut t = [1.0; 23];
    let mut i = 1;
    while i < 23 {
        t[i] = t[i - 1] * i as f64;
        i += 1;
    }
    t
};

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

fn lanczos_sum(z: f64) -> f64 {
    let mut acc = LANCZOS_COEF[0];
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    acc
}

/// sin(pi x) with exact zeros at the integers.
pub(crate) fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    // reduce to r in [-1, 1]
    let r = x - 2.0 * (x / 2.0).round();
    if r == 0.0 || r.abs() == 1.0 {
        return 0.0;
    }
    if r > 0.5 {
        (PI * (1.0 - r)).sin()
    } else if r < -0.5 {
        -(PI * (1.0 + r)).sin()
    } else {
        (PI * r).sin()
    }
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Gamma function. Returns NaN at the poles (nonpositive integers) and
/// overflows to infinity above ~171.6.
pub fn gamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if is_nonpositive_integer(x) {
        return f64::NAN;
    }
    if x == x.floor() && (1.0..=23.0).contains(&x) {
        return FACTORIALS[x as usize - 1];
    }
    if x < 0.5 {
        return PI / (sin_pi(x) * gamma(1.0 - x));
    }
    if x > 171.7 {
        return f64::INFINITY;
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    // split the power so t^(z+1/2) e^-t does not overflow before the product
    let half = t.powf(0.5 * (z + 0.5));
    (2.0 * PI).sqrt() * half * (half * (-t).exp()) * lanczos_sum(z)
}

/// Natural log of Gamma for x > 0.
pub fn ln_gamma(x: f64) -> f64 {
    if x <= 0.0 || x.is_nan() {
        return f64::NAN;
    }
    if x == x.floor() && x <= 23.0 {
        return FACTORIALS[x as usize - 1].ln();
    }
    if x < 0.5 {
        // Gamma(x) = Gamma(x + 1) / x
        return ln_gamma(x + 1.0) - x.ln();
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (z + 0.5) * t.ln() - t + lanczos_sum(z).ln()
}

/// 1/Gamma(x): exactly zero at the poles 0, -1, -2, ...
pub fn reciprocal_gamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    if x >= 0.5 {
        if x > 171.7 {
            return 0.0;
        }
        return 1.0 / gamma(x);
    }
    // reflection: 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi
    let s = sin_pi(x);
    let one_minus = 1.0 - x;
    if one_minus < 171.0 {
        s * gamma(one_minus) / PI
    } else {
        s.signum() * (s.abs().ln() + ln_gamma(one_minus) - PI.ln()).exp()
    }
}

/// log|1/Gamma(x)| and the sign of 1/Gamma(x). The sign is 0 at the poles,
/// where the log is -inf.
pub(crate) fn ln_abs_reciprocal_gamma(x: f64) -> (f64, f64) {
    if is_nonpositive_integer(x) {
        return (f64::NEG_INFINITY, 0.0);
    }
    if x > 0.0 {
        return (-ln_gamma(x), 1.0);
    }
    let s = sin_pi(x);
    (s.abs().ln() + ln_gamma(1.0 - x) - PI.ln(), s.signum())
}

/// Upper bound on log|1/Gamma(x)| that is smooth through the poles:
/// the reflection formula without its sin(pi x) factor.
pub(crate) fn ln_reciprocal_gamma_envelope(x: f64) -> f64 {
    if x >= 0.5 {
        -ln_gamma(x)
    } else {
        ln_gamma(1.0 - x) - PI.ln()
    }
}

/// ln(n!) for nonnegative integer n.
pub(crate) fn ln_factorial(n: usize) -> f64 {
    if n < FACTORIALS.len() {
        FACTORIALS[n].ln()
    } else {
        ln_gamma(n as f64 + 1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reciprocal_gamma_examples() {
        assert!((reciprocal_gamma(0.5) - 0.564_189_583_547_756_3).abs() < 1e-15);
        assert_eq!(reciprocal_gamma(-3.0), 0.0);
        assert_eq!(reciprocal_gamma(0.0), 0.0);
        assert_eq!(reciprocal_gamma(4.0), 1.0 / 6.0);
    }

    #[test]
    fn poles_are_exact_zeros() {
        for k in 0..200 {
            assert_eq!(reciprocal_gamma(-(k as f64)), 0.0);
            assert_eq!(ln_abs_reciprocal_gamma(-(k as f64)).1, 0.0);
        }
    }

    #[test]
    fn sin_pi_integers() {
        for k in -10..10 {
            assert_eq!(sin_pi(k as f64), 0.0);
        }
        assert!((sin_pi(0.5) - 1.0).abs() < 1e-16);
        assert!((sin_pi(-1.5) - 1.0).abs() < 1e-16);
        assert!((sin_pi(2.25) - (PI / 4.0).sin()).abs() < 1e-16);
    }

    #[test]
    fn half_integer_values() {
        // Gamma(n + 1/2) = (2n)! sqrt(pi) / (4^n n!)
        let sqrt_pi = PI.sqrt();
        for n in 0..12u32 {
            let exact = FACTORIALS[2 * n as usize] * sqrt_pi
                / (4f64.powi(n as i32) * FACTORIALS[n as usize]);
            let got = gamma(n as f64 + 0.5);
            assert!(((got - exact) / exact).abs() < 1e-13, "n={n}: {got} vs {exact}");
        }
    }

    #[test]
    fn ln_gamma_consistent_with_gamma() {
        for i in 1..400 {
            let x = 0.05 + 0.25 * i as f64;
            let a = ln_gamma(x);
            let b = gamma(x).ln();
            assert!((a - b).abs() < 1e-12 * (1.0 + b.abs()), "x={x}");
        }
    }

    #[test]
    fn reflection_sign_pattern() {
        // Gamma is negative on (-1, 0), positive on (-2, -1)
        assert!(reciprocal_gamma(-0.5) < 0.0);
        assert!(reciprocal_gamma(-1.5) > 0.0);
        let (l, s) = ln_abs_reciprocal_gamma(-0.5);
        assert_eq!(s, -1.0);
        assert!((l.exp() * s - reciprocal_gamma(-0.5)).abs() < 1e-15);
    }

    #[test]
    fn large_negative_arguments_do_not_overflow_to_nan() {
        let v = reciprocal_gamma(-200.5);
        assert!(v.is_finite() || v.is_infinite());
        assert!(!v.is_nan());
        let (l, s) = ln_abs_reciprocal_gamma(-200.5);
        assert!(l.is_finite());
        assert!(s != 0.0);
    }
}
