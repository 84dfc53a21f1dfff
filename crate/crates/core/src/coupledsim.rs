//! Direct simulation of the coupled constitutive system
//!
//!   d_t^alpha rho' = -rho0 d_z w',   d_t^beta w' = -(c_s^2 / rho0) d_z rho'
//!
//! on a periodic box. Each Fourier mode is a 2x2 linear Volterra system
//!
//!   rho_n = T_rho(t_n) + J^alpha[-rho0 i w w_hat](t_n)
//!   w_n   = T_w(t_n)   + J^beta[-(c^2/rho0) i w rho_hat](t_n)
//!
//! discretized with product-trapezoidal weights. The step is implicit in
//! (rho_n, w_n) jointly; being linear it is solved exactly per mode, so no
//! predictor is needed and the step has no stability restriction.
//! T_q(t) = u(0) + t u'(0) carries the extra Cauchy datum when an order
//! exceeds one.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{GridField, GridSpec};
use crate::fracops::grid::{trapezoid_start, trapezoid_toeplitz};
use crate::fracops::{caputo_grid, rl_integral_grid, SampledFn, TimeMesh};
use crate::regions::{region_of, FracOrderPair, Region};
use crate::specfun::gamma;

/// Residuals are taken on nodes with t >= RESIDUAL_WINDOW * t_end; near
/// t = 0 the solution behaves like t^alpha and no grid operator converges
/// there at its nominal order.
pub const RESIDUAL_WINDOW: f64 = 0.25;

/// Relative slack when matching a requested end time to a mesh node.
const NODE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FluidParams {
    rho0: f64,
    c_s: f64,
}

impl FluidParams {
    pub fn new(rho0: f64, c_s: f64) -> Result<Self> {
        if !(rho0.is_finite() && rho0 > 0.0 && c_s.is_finite() && c_s > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "rho0 and c_s must be finite and > 0, got {rho0}, {c_s}"
            )));
        }
        Ok(Self { rho0, c_s })
    }

    pub fn rho0(&self) -> f64 {
        self.rho0
    }

    pub fn c_s(&self) -> f64 {
        self.c_s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoupledState {
    pub rho_p: GridField,
    pub w_p: GridField,
    pub t: f64,
}

impl CoupledState {
    pub fn new(rho_p: GridField, w_p: GridField, t: f64) -> Result<Self> {
        rho_p.check_same_grid(&w_p)?;
        if !(t.is_finite() && t >= 0.0) {
            return Err(Error::InvalidTime(t));
        }
        Ok(Self { rho_p, w_p, t })
    }
}

/// First time derivatives at t = 0, required data only for orders above
/// one. Missing entries default to zero.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct InitialRates {
    pub rho_dot: Option<GridField>,
    pub w_dot: Option<GridField>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimConfig {
    pub orders: FracOrderPair,
    pub fluid: FluidParams,
    pub mesh: TimeMesh,
    pub grid: GridSpec,
    /// Longest memory (in steps) the convolution may hold.
    pub history_cap: Option<usize>,
    /// With a cap, drop memory older than the cap instead of failing.
    /// Reduces accuracy.
    pub truncate_history: bool,
}

impl SimConfig {
    pub fn new(orders: FracOrderPair, fluid: FluidParams, mesh: TimeMesh, grid: GridSpec) -> Result<Self> {
        let cfg = Self {
            orders,
            fluid,
            mesh,
            grid,
            history_cap: None,
            truncate_history: false,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if region_of(&self.orders) == Region::Outside {
            return Err(Error::InvalidConfig(format!(
                "orders ({}, {}) lie outside regions A-D",
                self.orders.alpha(),
                self.orders.beta()
            )));
        }
        if self.history_cap == Some(0) {
            return Err(Error::InvalidConfig("history_cap must be positive".into()));
        }
        GridSpec::new(self.grid.z_min, self.grid.z_max, self.grid.n).map(|_| ())
    }

    /// Equivalent sequential problem for rho': lambda = c_s^2.
    pub fn lambda(&self) -> f64 {
        self.fluid.c_s * self.fluid.c_s
    }

    fn steps_to(&self, t_end: f64) -> Result<usize> {
        let dt = self.mesh.dt();
        let k = (t_end / dt).round();
        if !(t_end.is_finite() && t_end >= 0.0) || (k * dt - t_end).abs() > NODE_TOL * t_end.max(dt) {
            return Err(Error::InvalidConfig(format!(
                "t_end = {t_end} is not a node of the mesh with dt = {dt}"
            )));
        }
        let k = k as usize;
        if k > self.mesh.n_steps() {
            return Err(Error::InvalidConfig(format!(
                "t_end = {t_end} lies past the mesh end {}",
                self.mesh.end_time()
            )));
        }
        Ok(k)
    }
}

/// Node-by-node output of a run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimRun {
    /// States at t_0 = 0, t_1, ..., t_end.
    pub history: Vec<CoupledState>,
    pub rates: InitialRates,
    /// True if memory was cut by `history_cap`.
    pub truncated: bool,
}

impl SimRun {
    pub fn last(&self) -> &CoupledState {
        self.history.last().expect("history holds the initial state")
    }

    pub fn rho_history(&self) -> Vec<GridField> {
        self.history.iter().map(|s| s.rho_p.clone()).collect()
    }
}

fn rate_field(rate: &Option<GridField>, order: f64, grid: &GridField, name: &str) -> Result<Option<Vec<Complex64>>> {
    match rate {
        None => Ok(None),
        Some(r) => {
            r.check_same_grid(grid)?;
            if order <= 1.0 && r.max_abs() != 0.0 {
                return Err(Error::InvalidConfig(format!(
                    "{name} is not a Cauchy datum when its order is <= 1"
                )));
            }
            Ok(Some(r.spectrum()))
        }
    }
}

/// Memory sum s_n u_0 + sum_{j=1}^{n-1} c_{n-j} u_j, optionally limited to
/// the last `window` samples.
fn memory(u: &[Complex64], c: &[f64], start: f64, n: usize, window: Option<usize>) -> Complex64 {
    let first = window.map_or(1, |w| n.saturating_sub(w).max(1));
    let mut acc = if window.is_none_or(|w| n <= w) {
        u[0] * start
    } else {
        Complex64::new(0.0, 0.0)
    };
    for j in first..n {
        acc += u[j] * c[n - j];
    }
    acc
}

/// Integrates the system from `init` (which must sit at t = 0) to `t_end`
/// and returns every node.
pub fn simulate(cfg: &SimConfig, init: &CoupledState, rates: &InitialRates, t_end: f64) -> Result<SimRun> {
    cfg.validate()?;
    if init.t != 0.0 {
        return Err(Error::InvalidConfig(format!(
            "runs start at t = 0 (the memory term needs the full past), got t = {}",
            init.t
        )));
    }
    if init.rho_p.spec() != cfg.grid {
        return Err(Error::GridMismatch("initial state does not live on the configured grid".into()));
    }
    init.rho_p.check_same_grid(&init.w_p)?;
    let steps = cfg.steps_to(t_end)?;
    let mut truncated = false;
    let window = match cfg.history_cap {
        Some(cap) if steps > cap => {
            if !cfg.truncate_history {
                return Err(Error::HistoryOverflow { steps, cap });
            }
            truncated = true;
            Some(cap)
        }
        _ => None,
    };

    let (alpha, beta) = (cfg.orders.alpha(), cfg.orders.beta());
    let grid = &init.rho_p;
    let rho_dot = rate_field(&rates.rho_dot, alpha, grid, "rho_dot")?;
    let w_dot = rate_field(&rates.w_dot, beta, grid, "w_dot")?;
    let rho_hat0 = init.rho_p.spectrum();
    let w_hat0 = init.w_p.spectrum();

    let n = cfg.grid.n;
    let dt = cfg.mesh.dt();
    let ka = dt.powf(alpha) / gamma(alpha + 2.0);
    let kb = dt.powf(beta) / gamma(beta + 2.0);
    let ca = trapezoid_toeplitz(alpha, steps);
    let cb = trapezoid_toeplitz(beta, steps);
    let sa: Vec<f64> = (0..=steps).map(|k| if k == 0 { 0.0 } else { trapezoid_start(alpha, k) }).collect();
    let sb: Vec<f64> = (0..=steps).map(|k| if k == 0 { 0.0 } else { trapezoid_start(beta, k) }).collect();
    let rho0 = cfg.fluid.rho0;
    let c2 = cfg.lambda();

    // per-mode time series for bins 0..=n/2
    let modes: Vec<(Vec<Complex64>, Vec<Complex64>)> = (0..=n / 2)
        .into_par_iter()
        .map(|k| {
            // the Nyquist bin is uncoupled, matching the spectral derivative
            let omega = if 2 * k == n { 0.0 } else { grid.wavenumber(k) };
            let iw = Complex64::new(0.0, omega);
            let a = -rho0 * iw * ka;
            let b = -(c2 / rho0) * iw * kb;
            let det = Complex64::new(1.0, 0.0) - a * b;
            let r1 = rho_dot.as_ref().map_or(Complex64::new(0.0, 0.0), |s| s[k]);
            let w1 = w_dot.as_ref().map_or(Complex64::new(0.0, 0.0), |s| s[k]);
            let mut rho = vec![rho_hat0[k]; steps + 1];
            let mut w = vec![w_hat0[k]; steps + 1];
            for m in 1..=steps {
                let t = m as f64 * dt;
                let h_rho = rho_hat0[k] + r1 * t + a * memory(&w, &ca, sa[m], m, window);
                let h_w = w_hat0[k] + w1 * t + b * memory(&rho, &cb, sb[m], m, window);
                let r = (h_rho + a * h_w) / det;
                rho[m] = r;
                w[m] = h_w + b * r;
            }
            (rho, w)
        })
        .collect();

    let history = (0..=steps)
        .into_par_iter()
        .map(|m| {
            let mut rs = vec![Complex64::new(0.0, 0.0); n];
            let mut ws = vec![Complex64::new(0.0, 0.0); n];
            for (k, (r, w)) in modes.iter().enumerate() {
                rs[k] = r[m];
                ws[k] = w[m];
                if k != 0 && 2 * k != n {
                    rs[n - k] = r[m].conj();
                    ws[n - k] = w[m].conj();
                }
            }
            CoupledState {
                rho_p: grid.from_spectrum(rs),
                w_p: grid.from_spectrum(ws),
                t: m as f64 * dt,
            }
        })
        .collect();
    Ok(SimRun {
        history,
        rates: rates.clone(),
        truncated,
    })
}

/// State at `t_end` from `init` at t = 0 with zero extra Cauchy data.
pub fn step_to(cfg: &SimConfig, init: &CoupledState, t_end: f64) -> Result<CoupledState> {
    let run = simulate(cfg, init, &InitialRates::default(), t_end)?;
    Ok(run.last().clone())
}

/// w'(., t_end) = w0 - (c_s^2/rho0) J^beta d_z rho'(., t_end), with J^beta
/// applied nodewise in time by [`rl_integral_grid`]. The history must be
/// sampled on `cfg.mesh` starting at t = 0; its last entry is t_end.
pub fn recover_velocity(rho_history: &[GridField], cfg: &SimConfig, w0: &GridField) -> Result<GridField> {
    let nodes = rho_history.len();
    if nodes < 2 || nodes > cfg.mesh.n_nodes() {
        return Err(Error::MeshMismatch(format!(
            "history of {nodes} snapshots does not fit a mesh of {} nodes",
            cfg.mesh.n_nodes()
        )));
    }
    for r in rho_history {
        r.check_same_grid(w0)?;
    }
    let mesh = TimeMesh::new(cfg.mesh.dt(), nodes - 1)?;
    let dz_rho: Vec<GridField> = rho_history.par_iter().map(|r| r.derivative()).collect();
    let coef = cfg.lambda() / cfg.fluid.rho0;
    let beta = cfg.orders.beta();
    let out = (0..w0.n())
        .into_par_iter()
        .map(|j| {
            let series: Vec<f64> = dz_rho.iter().map(|f| f.values()[j]).collect();
            let s = SampledFn::new(mesh, series, None)?;
            let integral = rl_integral_grid(&s, beta)?;
            Ok(w0.values()[j] - coef * integral.values()[nodes - 1])
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(w0.with_values(out))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ResidualReport {
    /// max |d_t^alpha rho' + rho0 d_z w'|
    pub continuity_res: f64,
    /// max |d_t^beta w' + (c_s^2/rho0) d_z rho'|
    pub momentum_res: f64,
}

/// Residuals of both equations on a run, with [`caputo_grid`] in time and
/// the spectral derivative in space, over nodes t >= RESIDUAL_WINDOW t_end.
pub fn residual_report(run: &SimRun, cfg: &SimConfig) -> Result<ResidualReport> {
    let h = &run.history;
    let nodes = h.len();
    if nodes < 4 {
        return Err(Error::MeshTooShort {
            n_steps: nodes.saturating_sub(1),
            required: 3,
        });
    }
    let mesh = TimeMesh::new(cfg.mesh.dt(), nodes - 1)?;
    let (alpha, beta) = (cfg.orders.alpha(), cfg.orders.beta());
    let rho0 = cfg.fluid.rho0;
    let coef = cfg.lambda() / rho0;
    let dz_rho: Vec<GridField> = h.par_iter().map(|s| s.rho_p.derivative()).collect();
    let dz_w: Vec<GridField> = h.par_iter().map(|s| s.w_p.derivative()).collect();
    let first = ((RESIDUAL_WINDOW * (nodes - 1) as f64).ceil() as usize).max(1);
    let rate = |r: &Option<GridField>, j: usize| r.as_ref().map_or(0.0, |f| f.values()[j]);

    let per_node = (0..cfg.grid.n)
        .into_par_iter()
        .map(|j| {
            let rho: Vec<f64> = h.iter().map(|s| s.rho_p.values()[j]).collect();
            let w: Vec<f64> = h.iter().map(|s| s.w_p.values()[j]).collect();
            let rho_s = SampledFn::new(mesh, rho.clone(), Some(vec![rho[0], rate(&run.rates.rho_dot, j)]))?;
            let w_s = SampledFn::new(mesh, w.clone(), Some(vec![w[0], rate(&run.rates.w_dot, j)]))?;
            let da = caputo_grid(&rho_s, alpha)?;
            let db = caputo_grid(&w_s, beta)?;
            let mut cont: f64 = 0.0;
            let mut mom: f64 = 0.0;
            for m in first..nodes {
                cont = cont.max((da.values()[m] + rho0 * dz_w[m].values()[j]).abs());
                mom = mom.max((db.values()[m] + coef * dz_rho[m].values()[j]).abs());
            }
            Ok((cont, mom))
        })
        .collect::<Result<Vec<(f64, f64)>>>()?;
    let (c, m) = per_node
        .iter()
        .fold((0.0f64, 0.0f64), |(a, b), &(x, y)| (a.max(x), b.max(y)));
    Ok(ResidualReport {
        continuity_res: c,
        momentum_res: m,
    })
}
