//! Analytic solutions: the fundamental solution of the time-fractional
//! diffusion equation and the spectral solver for the sequential Cauchy
//! problem
//!
//!   d_t^alpha d_t^beta f = lambda d_zz f,  f(z,0) = g,  d_t^beta f(z,0) = g_bar
//!
//! whose Fourier solution is
//!
//!   f^ = g^ E_{gamma,1}(-lambda w^2 t^gamma) + g_bar^ t^beta E_{gamma,beta+1}(-lambda w^2 t^gamma)
//!
//! with gamma = alpha + beta. The auxiliary field phi pairs with f through
//! d_t^beta f + (lambda/kappa) d_z phi = 0 and d_t^alpha phi + kappa d_z f = 0.

mod realspace;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::GridField;
use crate::fracops::{caputo_grid, SampledFn, TimeMesh};
use crate::regions::{classify, FracOrderPair, Region};
use crate::specfun::{mittag_leffler_with, wright, MlParams, SpecFunConfig, WrightParams};

pub use realspace::{solve_sequential_realspace, wright_kernels, WrightKernels};

/// Relative tolerance on the mean of g_bar below which it counts as zero.
const MEAN_TOL: f64 = 1e-10;

fn check_lambda(lam: f64) -> Result<()> {
    if lam.is_finite() && lam > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!("lambda must be finite and > 0, got {lam}")))
    }
}

fn check_time(t: f64) -> Result<()> {
    if t.is_finite() && t >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidTime(t))
    }
}

/// Green's function of d_t^gamma u = lam d_zz u with u(z,0) = delta(z) and
/// zero initial slope:
///
///   G(z,t) = W_{-gamma/2, 1-gamma/2}(-|z|/s) / (2 s),  s = sqrt(lam t^gamma).
///
/// gamma = 2 is rejected: the wave kernel is a pair of deltas.
pub fn fundamental_solution(gamma: f64, lam: f64, z: f64, t: f64) -> Result<f64> {
    if !(gamma.is_finite() && gamma > 0.0 && gamma < 2.0) {
        return Err(Error::InvalidOrder(format!(
            "fundamental solution needs 0 < gamma < 2 (gamma = 2 is distributional), got {gamma}"
        )));
    }
    check_lambda(lam)?;
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::InvalidTime(t));
    }
    if !z.is_finite() {
        return Err(Error::InvalidParams(format!("z must be finite, got {z}")));
    }
    let s = (lam * t.powf(gamma)).sqrt();
    let p = WrightParams::new(-gamma / 2.0, 1.0 - gamma / 2.0)?;
    Ok(wright(p, -z.abs() / s)?.value / (2.0 * s))
}

/// Box half-width that keeps Wright kernels far below roundoff at the edges:
/// 20 sqrt(lam t_end^gamma).
pub fn default_half_width(gamma: f64, lam: f64, t_end: f64) -> f64 {
    20.0 * (lam * t_end.powf(gamma)).sqrt()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeqCauchyProblem {
    orders: FracOrderPair,
    lambda: f64,
    g: GridField,
    g_bar: GridField,
}

impl SeqCauchyProblem {
    pub fn new(orders: FracOrderPair, lambda: f64, g: GridField, g_bar: GridField) -> Result<Self> {
        check_lambda(lambda)?;
        g.check_same_grid(&g_bar)?;
        if classify(&orders).region == Region::Outside {
            return Err(Error::InvalidOrder(format!(
                "orders ({}, {}) lie outside regions A-D",
                orders.alpha(),
                orders.beta()
            )));
        }
        Ok(Self {
            orders,
            lambda,
            g,
            g_bar,
        })
    }

    pub fn orders(&self) -> FracOrderPair {
        self.orders
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn g(&self) -> &GridField {
        &self.g
    }

    pub fn g_bar(&self) -> &GridField {
        &self.g_bar
    }
}

/// ML symbols for every distinct |omega| of the grid: returns
/// (E_{gamma,1}, t^second E_{gamma,second+1}) per FFT bin.
fn symbols(
    field: &GridField,
    gamma: f64,
    second: f64,
    lam: f64,
    t: f64,
    cfg: &SpecFunConfig,
) -> Result<Vec<(f64, f64)>> {
    let n = field.n();
    let p1 = MlParams::new(gamma, 1.0)?;
    let p2 = MlParams::new(gamma, second + 1.0)?;
    let tg = t.powf(gamma);
    let ts = t.powf(second);
    let half: Vec<(f64, f64)> = (0..=n / 2)
        .into_par_iter()
        .map(|k| {
            let w = field.wavenumber(k);
            let y = -lam * w * w * tg;
            let e1 = mittag_leffler_with(p1, y, cfg)?.value;
            let e2 = mittag_leffler_with(p2, y, cfg)?.value;
            Ok((e1, ts * e2))
        })
        .collect::<Result<_>>()?;
    Ok((0..n).map(|k| half[if k <= n / 2 { k } else { n - k }]).collect())
}

fn two_term_solve(
    first: &GridField,
    second_data: &GridField,
    gamma: f64,
    second: f64,
    lam: f64,
    t: f64,
    cfg: &SpecFunConfig,
) -> Result<GridField> {
    check_time(t)?;
    if t == 0.0 {
        return Ok(first.clone());
    }
    let sym = symbols(first, gamma, second, lam, t, cfg)?;
    let a = first.spectrum();
    let b = second_data.spectrum();
    let spec = a
        .iter()
        .zip(&b)
        .zip(&sym)
        .map(|((x, y), (m1, m2))| x * *m1 + y * *m2)
        .collect();
    Ok(first.from_spectrum(spec))
}

/// f(., t) for the sequential problem, by Fourier synthesis with
/// Mittag-Leffler multipliers. Returns g itself at t = 0.
pub fn solve_sequential(p: &SeqCauchyProblem, t: f64) -> Result<GridField> {
    solve_sequential_with(p, t, &SpecFunConfig::default())
}

pub fn solve_sequential_with(p: &SeqCauchyProblem, t: f64, cfg: &SpecFunConfig) -> Result<GridField> {
    let o = p.orders;
    two_term_solve(&p.g, &p.g_bar, o.gamma(), o.beta(), p.lambda, t, cfg)
}

/// Single-equation evolution d_t^gamma u = lam d_zz u from u(., 0) = g with
/// zero initial slope when gamma > 1.
pub fn evolve_fractional_diffusion(g: &GridField, gamma: f64, lam: f64, t: f64) -> Result<GridField> {
    if !(gamma.is_finite() && gamma > 0.0 && gamma <= 2.0) {
        return Err(Error::InvalidOrder(format!("need 0 < gamma <= 2, got {gamma}")));
    }
    check_lambda(lam)?;
    check_time(t)?;
    if t == 0.0 {
        return Ok(g.clone());
    }
    let p = MlParams::new(gamma, 1.0)?;
    let cfg = SpecFunConfig::default();
    let tg = t.powf(gamma);
    let n = g.n();
    let half: Vec<f64> = (0..=n / 2)
        .into_par_iter()
        .map(|k| {
            let w = g.wavenumber(k);
            Ok(mittag_leffler_with(p, -lam * w * w * tg, &cfg)?.value)
        })
        .collect::<Result<_>>()?;
    let mut spec = g.spectrum();
    for (k, c) in spec.iter_mut().enumerate() {
        *c *= half[if k <= n / 2 { k } else { n - k }];
    }
    Ok(g.from_spectrum(spec))
}

/// Data (h, h_bar) of the auxiliary problem and the coupling constant.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuxiliaryData {
    pub h: GridField,
    pub h_bar: GridField,
    pub kappa: f64,
    /// max |g_bar + (lambda/kappa) d_z h|
    pub residual: f64,
}

/// h = -(kappa/lambda) * (zero-mean antiderivative of g_bar),
/// h_bar = -kappa d_z g.
pub fn build_auxiliary(p: &SeqCauchyProblem, kappa: f64) -> Result<AuxiliaryData> {
    if !(kappa.is_finite() && kappa != 0.0) {
        return Err(Error::InvalidParams(format!(
            "coupling constant must be finite and nonzero, got {kappa}"
        )));
    }
    let h = p.g_bar.antiderivative(MEAN_TOL)?.scaled(-kappa / p.lambda);
    let h_bar = p.g.derivative().scaled(-kappa);
    let back = h.derivative().scaled(p.lambda / kappa);
    let residual = p.g_bar.combine(1.0, &back, 1.0)?.max_abs();
    Ok(AuxiliaryData {
        h,
        h_bar,
        kappa,
        residual,
    })
}

/// phi(., t): the swapped-order problem with data (h, h_bar).
pub fn solve_auxiliary(aux: &AuxiliaryData, p: &SeqCauchyProblem, t: f64) -> Result<GridField> {
    aux.h.check_same_grid(&p.g)?;
    aux.h_bar.check_same_grid(&p.g)?;
    let o = p.orders;
    two_term_solve(
        &aux.h,
        &aux.h_bar,
        o.gamma(),
        o.alpha(),
        p.lambda,
        t,
        &SpecFunConfig::default(),
    )
}

/// Max-abs residuals of the coupled pair
///
///   d_t^beta f + (lambda/kappa) d_z phi = 0,  d_t^alpha phi + kappa d_z f = 0
///
/// with f, phi from the spectral solvers on every node of `mesh`, time
/// derivatives from [`caputo_grid`]. Nodes with t < window * t_end are
/// skipped: the fields behave like t^beta, t^alpha there and the grid
/// operator loses its order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CouplingResiduals {
    pub first: f64,
    pub second: f64,
}

pub fn coupling_residuals(
    p: &SeqCauchyProblem,
    aux: &AuxiliaryData,
    mesh: &TimeMesh,
    window: f64,
) -> Result<CouplingResiduals> {
    let o = p.orders;
    let nodes = mesh.n_nodes();
    let (fs, phis): (Vec<GridField>, Vec<GridField>) = (0..nodes)
        .into_par_iter()
        .map(|m| {
            let t = mesh.time(m);
            Ok((solve_sequential(p, t)?, solve_auxiliary(aux, p, t)?))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .unzip();
    let first_node = ((window * mesh.n_steps() as f64).ceil() as usize).max(1);
    let c1 = p.lambda / aux.kappa;
    let per_point = (0..p.g.n())
        .into_par_iter()
        .map(|j| {
            let f: Vec<f64> = fs.iter().map(|x| x.values()[j]).collect();
            let phi: Vec<f64> = phis.iter().map(|x| x.values()[j]).collect();
            // both fields have zero first time derivative at t = 0 whenever
            // an order exceeds one (gamma > 1 there)
            let fs_j = SampledFn::new(*mesh, f.clone(), Some(vec![f[0], 0.0]))?;
            let ph_j = SampledFn::new(*mesh, phi.clone(), Some(vec![phi[0], 0.0]))?;
            Ok((caputo_grid(&fs_j, o.beta())?, caputo_grid(&ph_j, o.alpha())?))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut r1: f64 = 0.0;
    let mut r2: f64 = 0.0;
    for m in first_node..nodes {
        let dz_f = fs[m].derivative();
        let dz_phi = phis[m].derivative();
        for (j, (df, dphi)) in per_point.iter().enumerate() {
            r1 = r1.max((df.values()[m] + c1 * dz_phi.values()[j]).abs());
            r2 = r2.max((dphi.values()[m] + aux.kappa * dz_f.values()[j]).abs());
        }
    }
    Ok(CouplingResiduals { first: r1, second: r2 })
}
