//! Convolution-quadrature operators on uniform meshes.

use super::{check_order, SampledFn};
use crate::error::{Error, Result};
use crate::specfun::gamma;

/// L1 weights b_k = (k+1)^(1-a) - k^(1-a), k = 0..n.
fn l1_weights(a: f64, n: usize) -> Vec<f64> {
    let e = 1.0 - a;
    (0..n)
        .map(|k| {
            let k = k as f64;
            (k + 1.0).powf(e) - k.powf(e)
        })
        .collect()
}

/// L1 discretization of the order-a Caputo derivative (0 < a < 1) of the
/// samples `g`; entry 0 is 0.
fn l1(g: &[f64], a: f64, dt: f64) -> Vec<f64> {
    let n = g.len();
    let b = l1_weights(a, n);
    let scale = dt.powf(-a) / gamma(2.0 - a);
    let diffs: Vec<f64> = g.windows(2).map(|w| w[1] - w[0]).collect();
    let mut out = vec![0.0; n];
    for (i, o) in out.iter_mut().enumerate().skip(1) {
        // sum_k b_k (g_{i-k} - g_{i-k-1})
        let mut acc = 0.0;
        for k in 0..i {
            acc += b[k] * diffs[i - k - 1];
        }
        *o = scale * acc;
    }
    out
}

/// First derivative samples: `d0` at node 0, central differences inside,
/// second-order one-sided at the last node.
fn derivative_samples(f: &[f64], dt: f64, d0: f64) -> Vec<f64> {
    let n = f.len();
    let mut d = vec![0.0; n];
    d[0] = d0;
    for i in 1..n - 1 {
        d[i] = (f[i + 1] - f[i - 1]) / (2.0 * dt);
    }
    let l = n - 1;
    d[l] = if n >= 3 {
        (3.0 * f[l] - 4.0 * f[l - 1] + f[l - 2]) / (2.0 * dt)
    } else {
        (f[l] - f[l - 1]) / dt
    };
    d
}

/// Discrete Caputo derivative of order 0 < alpha <= 2.
///
/// * 0 < alpha < 1: L1 scheme, O(dt^(2-alpha)).
/// * 1 < alpha < 2: L1 scheme of order alpha - 1 applied to f', whose
///   samples come from f'(0) and second-order differences.
/// * alpha = 1, 2: plain second-order finite differences.
///
/// Node 0 is 0 for fractional orders.
pub fn caputo_grid(f: &SampledFn, alpha: f64) -> Result<SampledFn> {
    check_order(alpha, "alpha")?;
    if alpha > 2.0 {
        return Err(Error::InvalidOrder(format!(
            "grid Caputo derivative supports 0 < alpha <= 2, got {alpha}"
        )));
    }
    let n_steps = f.mesh().n_steps();
    let required = if alpha == 2.0 { 3 } else { 2 };
    if n_steps < required {
        return Err(Error::MeshTooShort { n_steps, required });
    }
    let dt = f.mesh().dt();
    let v = f.values();
    let out = if alpha == 1.0 {
        let mut d = derivative_samples(v, dt, 0.0);
        d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * dt);
        d
    } else if alpha == 2.0 {
        let n = v.len();
        let h2 = dt * dt;
        let mut d = vec![0.0; n];
        for i in 1..n - 1 {
            d[i] = (v[i + 1] - 2.0 * v[i] + v[i - 1]) / h2;
        }
        d[0] = (2.0 * v[0] - 5.0 * v[1] + 4.0 * v[2] - v[3]) / h2;
        let l = n - 1;
        d[l] = (2.0 * v[l] - 5.0 * v[l - 1] + 4.0 * v[l - 2] - v[l - 3]) / h2;
        d
    } else if alpha < 1.0 {
        l1(v, alpha, dt)
    } else {
        let g = derivative_samples(v, dt, f.init_deriv(1));
        l1(&g, alpha - 1.0, dt)
    };
    Ok(f.with_values(out))
}

/// Toeplitz part c_k = (k+1)^(a+1) - 2 k^(a+1) + (k-1)^(a+1) for k >= 1,
/// c_0 = 1.
pub(crate) fn trapezoid_toeplitz(alpha: f64, n: usize) -> Vec<f64> {
    let e = alpha + 1.0;
    let mut c = vec![1.0; n + 1];
    for (k, ck) in c.iter_mut().enumerate().skip(1) {
        let k = k as f64;
        *ck = (k + 1.0).powf(e) - 2.0 * k.powf(e) + (k - 1.0).powf(e);
    }
    c
}

/// Weight of the node-0 sample at step n >= 1.
pub(crate) fn trapezoid_start(alpha: f64, n: usize) -> f64 {
    let nf = n as f64;
    (nf - 1.0).powf(alpha + 1.0) - (nf - alpha - 1.0) * nf.powf(alpha)
}

/// Discrete Riemann-Liouville integral of order alpha > 0 by the
/// product-trapezoidal rule (exact for piecewise-linear f); node 0 is 0.
pub fn rl_integral_grid(f: &SampledFn, alpha: f64) -> Result<SampledFn> {
    check_order(alpha, "alpha")?;
    let v = f.values();
    let n_nodes = v.len();
    let dt = f.mesh().dt();
    let scale = dt.powf(alpha) / gamma(alpha + 2.0);
    let c = trapezoid_toeplitz(alpha, n_nodes);
    let mut out = vec![0.0; n_nodes];
    for (n, o) in out.iter_mut().enumerate().skip(1) {
        let mut acc = trapezoid_start(alpha, n) * v[0];
        for j in 1..=n {
            acc += c[n - j] * v[j];
        }
        *o = scale * acc;
    }
    Ok(f.with_values(out))
}
