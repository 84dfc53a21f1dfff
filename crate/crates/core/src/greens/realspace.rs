//! Real-space route for the sequential problem: f = g * G1 + t^beta g_bar * G2
//! with the Wright kernels
//!
//!   G1(y) = W_{-gamma/2, 1-gamma/2}(-|y|/s) / (2s)
//!   G2(y) = W_{-gamma/2, 1+beta-gamma/2}(-|y|/s) / (2s),  s = sqrt(lambda t^gamma).
//!
//! The periodic convolution is split into two half-lines starting at the
//! kernel cusp y = 0. Each half-line uses the trapezoid rule with Gregory
//! end corrections, which keeps eighth order despite the kink at the origin.

use rayon::prelude::*;
use serde::Serialize;

use super::SeqCauchyProblem;
use crate::error::{Error, Result};
use crate::field::GridField;
use crate::specfun::{wright, WrightParams};

/// Gregory end corrections of order eight: the half-line weight at node j
/// is 1 + DELTA[j].
const GREGORY: [f64; 8] = [
    -2_558_783.0 / 3_628_800.0,
    1_908_311.0 / 3_628_800.0,
    -299_587.0 / 403_200.0,
    115_963.0 / 145_152.0,
    -426_809.0 / 725_760.0,
    112_477.0 / 403_200.0,
    -278_921.0 / 3_628_800.0,
    33_953.0 / 3_628_800.0,
];

/// Consecutive negligible samples needed before a kernel is truncated.
/// The kernels for gamma > 1 have isolated zeros, so one small sample
/// is not enough.
const QUIET_RUN: usize = 8;

/// Kernel samples on the nonnegative half-line, y_j = j dz.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WrightKernels {
    pub dz: f64,
    pub g1: Vec<f64>,
    /// Already multiplied by t^beta.
    pub g2: Vec<f64>,
}

fn sample(p: WrightParams, s: f64, dz: f64, cap: usize) -> Result<Vec<f64>> {
    const CHUNK: usize = 64;
    let mut out: Vec<f64> = Vec::new();
    let mut peak: f64 = 0.0;
    let mut quiet = 0;
    while out.len() < cap {
        let start = out.len();
        let end = (start + CHUNK).min(cap);
        let chunk: Vec<f64> = (start..end)
            .into_par_iter()
            .map(|j| Ok(wright(p, -(j as f64) * dz / s)?.value / (2.0 * s)))
            .collect::<Result<_>>()?;
        for v in chunk {
            peak = peak.max(v.abs());
            out.push(v);
            if v.abs() <= 1e-18 * peak {
                quiet += 1;
                if quiet >= QUIET_RUN && out.len() > GREGORY.len() {
                    return Ok(out);
                }
            } else {
                quiet = 0;
            }
        }
    }
    Ok(out)
}

/// Samples both kernels at time t > 0 on the grid spacing of `p`.
/// Kernel tails longer than `wraps` periods are cut.
pub fn wright_kernels(p: &SeqCauchyProblem, t: f64) -> Result<WrightKernels> {
    let o = p.orders();
    let gamma = o.gamma();
    if gamma >= 2.0 {
        return Err(Error::InvalidOrder(format!(
            "real-space kernels need gamma < 2, got {gamma}"
        )));
    }
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::InvalidTime(t));
    }
    let s = (p.lambda() * t.powf(gamma)).sqrt();
    let dz = p.g().dz();
    let cap = 64 * p.g().n();
    let g1 = sample(WrightParams::new(-gamma / 2.0, 1.0 - gamma / 2.0)?, s, dz, cap)?;
    let tb = t.powf(o.beta());
    let g2 = sample(WrightParams::new(-gamma / 2.0, 1.0 + o.beta() - gamma / 2.0)?, s, dz, cap)?
        .into_iter()
        .map(|v| v * tb)
        .collect();
    Ok(WrightKernels { dz, g1, g2 })
}

fn convolve(g: &[f64], kernel: &[f64], dz: f64) -> Vec<f64> {
    let n = g.len();
    (0..n)
        .into_par_iter()
        .map(|i| {
            let mut acc = 0.0;
            for (j, &k) in kernel.iter().enumerate() {
                let w = 1.0 + GREGORY.get(j).copied().unwrap_or(0.0);
                let jm = j % n;
                let left = g[(i + n - jm) % n];
                let right = g[(i + jm) % n];
                acc += w * k * (left + right);
            }
            dz * acc
        })
        .collect()
}

/// f(., t) by periodic convolution with the Wright kernels. Agrees with
/// [`super::solve_sequential`] up to the kernel quadrature error, which is
/// of eighth order in dz / s.
pub fn solve_sequential_realspace(p: &SeqCauchyProblem, t: f64) -> Result<GridField> {
    if !(t.is_finite() && t >= 0.0) {
        return Err(Error::InvalidTime(t));
    }
    if t == 0.0 {
        return Ok(p.g().clone());
    }
    let k = wright_kernels(p, t)?;
    let a = convolve(p.g().values(), &k.g1, k.dz);
    let b = convolve(p.g_bar().values(), &k.g2, k.dz);
    let v = a.iter().zip(&b).map(|(x, y)| x + y).collect();
    Ok(p.g().with_values(v))
}
