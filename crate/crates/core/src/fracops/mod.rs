//! Caputo derivatives and Riemann-Liouville integrals.
//!
//! Two layers: exact rules on power functions ([`PowerTerm`]) and discrete
//! convolution operators on uniformly sampled functions ([`SampledFn`]).

pub(crate) mod grid;
mod power;

use serde::Serialize;

use crate::error::{Error, Result};

pub use grid::{caputo_grid, rl_integral_grid};
pub use power::{caputo_power, rl_integral_power, PowerTerm};

/// Uniform time grid t_k = k dt, k = 0..=n_steps.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TimeMesh {
    dt: f64,
    n_steps: usize,
}

impl TimeMesh {
    pub fn new(dt: f64, n_steps: usize) -> Result<Self> {
        if !(dt.is_finite() && dt > 0.0) {
            return Err(Error::InvalidParams(format!("time step must be > 0, got {dt}")));
        }
        if n_steps == 0 {
            return Err(Error::MeshTooShort {
                n_steps,
                required: 1,
            });
        }
        Ok(Self { dt, n_steps })
    }

    /// Mesh covering [0, t_end] with `n_steps` steps.
    pub fn covering(t_end: f64, n_steps: usize) -> Result<Self> {
        if !(t_end.is_finite() && t_end > 0.0) {
            return Err(Error::InvalidTime(t_end));
        }
        Self::new(t_end / n_steps.max(1) as f64, n_steps)
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn n_steps(&self) -> usize {
        self.n_steps
    }

    pub fn n_nodes(&self) -> usize {
        self.n_steps + 1
    }

    pub fn time(&self, k: usize) -> f64 {
        k as f64 * self.dt
    }

    pub fn end_time(&self) -> f64 {
        self.time(self.n_steps)
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_nodes()).map(move |k| self.time(k))
    }

    pub(crate) fn same_as(&self, other: &TimeMesh) -> bool {
        self.n_steps == other.n_steps && (self.dt - other.dt).abs() <= 1e-14 * self.dt
    }
}

/// Samples of f on a [`TimeMesh`], plus optional initial derivatives
/// f(0), f'(0), ... used by orders above one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampledFn {
    mesh: TimeMesh,
    values: Vec<f64>,
    init_derivs: Vec<f64>,
}

impl SampledFn {
    pub fn new(mesh: TimeMesh, values: Vec<f64>, init_derivs: Option<Vec<f64>>) -> Result<Self> {
        if values.len() != mesh.n_nodes() {
            return Err(Error::MeshMismatch(format!(
                "{} values for a mesh with {} nodes",
                values.len(),
                mesh.n_nodes()
            )));
        }
        let init_derivs = init_derivs.unwrap_or_default();
        Ok(Self {
            mesh,
            values,
            init_derivs,
        })
    }

    /// Samples `f` at every node.
    pub fn from_fn(mesh: TimeMesh, f: impl Fn(f64) -> f64, init_derivs: Option<Vec<f64>>) -> Self {
        let values = mesh.times().map(f).collect();
        Self {
            mesh,
            values,
            init_derivs: init_derivs.unwrap_or_default(),
        }
    }

    pub fn mesh(&self) -> &TimeMesh {
        &self.mesh
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn init_derivs(&self) -> &[f64] {
        &self.init_derivs
    }

    /// f^(k)(0): the supplied value if present, otherwise a one-sided
    /// second-order difference (k <= 1 only).
    pub fn init_deriv(&self, k: usize) -> f64 {
        if let Some(&v) = self.init_derivs.get(k) {
            return v;
        }
        let f = &self.values;
        let dt = self.mesh.dt;
        match k {
            0 => f[0],
            1 if f.len() >= 3 => (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * dt),
            1 => (f[1] - f[0]) / dt,
            _ => f64::NAN,
        }
    }

    pub(crate) fn with_values(&self, values: Vec<f64>) -> Self {
        Self {
            mesh: self.mesh,
            values,
            init_derivs: Vec::new(),
        }
    }

    /// Linear combination a*self + b*other on the same mesh.
    pub fn combine(&self, a: f64, other: &SampledFn, b: f64) -> Result<Self> {
        if !self.mesh.same_as(&other.mesh) {
            return Err(Error::MeshMismatch("operands live on different meshes".into()));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(x, y)| a * x + b * y)
            .collect();
        let n = self.init_derivs.len().min(other.init_derivs.len());
        let init_derivs = (0..n)
            .map(|k| a * self.init_derivs[k] + b * other.init_derivs[k])
            .collect();
        Ok(Self {
            mesh: self.mesh,
            values,
            init_derivs,
        })
    }
}

/// Operand of [`check_law_of_exponents`].
#[derive(Debug, Clone, Copy)]
pub enum LawOperand<'a> {
    Power(&'a PowerTerm),
    Grid(&'a SampledFn),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LawReport {
    /// sup |D^beta D^alpha f - D^(alpha+beta) f| over the evaluation set.
    pub max_abs_gap: f64,
    /// Gap at t = 1 (power terms) or at the last node (grids).
    pub gap_at_end: f64,
    pub holds: bool,
}

/// Evaluation points for power-term gaps: t = k/64, k = 1..=64.
const POWER_GAP_POINTS: usize = 64;

/// Compares D^beta D^alpha f with D^(alpha+beta) f.
///
/// Power terms are compared exactly: when both sides reduce to the same
/// exponent the gap is the coefficient difference, which is exactly zero
/// whenever the weights agree. Sampled functions use the grid operators and
/// the gap is taken over nodes 1..=N.
pub fn check_law_of_exponents(
    f: LawOperand<'_>,
    alpha: f64,
    beta: f64,
    tol: f64,
) -> Result<LawReport> {
    check_order(alpha, "alpha")?;
    check_order(beta, "beta")?;
    let (max_abs_gap, gap_at_end) = match f {
        LawOperand::Power(p) => {
            let lhs = caputo_power(&caputo_power(p, alpha)?, beta)?;
            let rhs = caputo_power(p, alpha + beta)?;
            let mut worst = 0.0f64;
            let mut end = 0.0;
            for k in 1..=POWER_GAP_POINTS {
                let t = k as f64 / POWER_GAP_POINTS as f64;
                let g = lhs.gap(&rhs, t);
                worst = worst.max(g);
                end = g;
            }
            (worst, end)
        }
        LawOperand::Grid(s) => {
            let inner = caputo_grid(s, alpha)?;
            let lhs = caputo_grid(&inner, beta)?;
            let rhs = caputo_grid(s, alpha + beta)?;
            let gaps: Vec<f64> = lhs
                .values()
                .iter()
                .zip(rhs.values())
                .skip(1)
                .map(|(a, b)| (a - b).abs())
                .collect();
            let worst = gaps.iter().copied().fold(0.0, f64::max);
            (worst, gaps.last().copied().unwrap_or(0.0))
        }
    };
    Ok(LawReport {
        max_abs_gap,
        gap_at_end,
        holds: max_abs_gap <= tol,
    })
}

pub(crate) fn check_order(alpha: f64, name: &str) -> Result<()> {
    if alpha.is_finite() && alpha > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidOrder(format!("{name} must be finite and > 0, got {alpha}")))
    }
}
