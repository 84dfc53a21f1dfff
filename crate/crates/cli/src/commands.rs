use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde::Serialize;

use fracwave_core::coupledsim::{self, CoupledState, FluidParams, InitialRates, SimConfig};
use fracwave_core::field::{GridField, GridSpec};
use fracwave_core::fracops::{
    caputo_grid, caputo_power, rl_integral_grid, rl_integral_power, PowerTerm, SampledFn, TimeMesh,
};
use fracwave_core::greens::{self, SeqCauchyProblem};
use fracwave_core::regions::{region_of, FracOrderPair};
use fracwave_core::specfun::{mittag_leffler_with, wright_with, EvalResult, MlParams, SpecFunConfig, WrightParams};
use fracwave_core::verify::{run_suite, Suite};

use crate::output::{fmt_f64, Artifacts};
use crate::CliError;

/// False for NaN as well as for x <= 0.
fn positive(x: f64) -> bool {
    x > 0.0
}

/// Special-function accuracy settings shared by every command that
/// evaluates Mittag-Leffler or Wright functions.
#[derive(Debug, Clone, Copy, Args, Serialize)]
pub struct SpecTol {
    /// Target accuracy (absolute below one, relative above)
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    /// Series term cap before reporting non-convergence
    #[arg(long, default_value_t = 2000)]
    pub term_cap: usize,
    /// Largest |y| summed directly on negative arguments
    #[arg(long, default_value_t = 15.0)]
    pub series_radius: f64,
}

impl SpecTol {
    fn config(&self) -> Result<SpecFunConfig, CliError> {
        if !positive(self.tol) || self.term_cap == 0 || !positive(self.series_radius) {
            return Err(CliError::Usage("tolerances must be positive".into()));
        }
        Ok(SpecFunConfig {
            tol: self.tol,
            term_cap: self.term_cap,
            series_radius: self.series_radius,
        })
    }

    fn record(&self, art: &mut Artifacts) {
        art.tolerance("tol", self.tol);
        art.tolerance("term_cap", self.term_cap as f64);
        art.tolerance("series_radius", self.series_radius);
    }
}

/// Either a single point printed to stdout, or a range written as CSV.
#[derive(Debug, Clone, Args, Serialize)]
pub struct YRange {
    /// Single argument; prints the value
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["y_min", "y_max"], required_unless_present_all = ["y_min", "y_max"])]
    pub y: Option<f64>,
    #[arg(long, allow_hyphen_values = true, requires_all = ["y_max", "out"])]
    pub y_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true, requires = "y_min")]
    pub y_max: Option<f64>,
    #[arg(long, default_value_t = 100)]
    pub n_points: usize,
    /// Output directory for the CSV and manifest
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct MlArgs {
    #[arg(long)]
    pub eta: f64,
    #[arg(long)]
    pub gamma: f64,
    #[command(flatten)]
    pub range: YRange,
    #[command(flatten)]
    pub tol: SpecTol,
}

#[derive(Debug, Args, Serialize)]
pub struct WrightArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: f64,
    #[arg(long)]
    pub eta: f64,
    #[command(flatten)]
    pub range: YRange,
    #[command(flatten)]
    pub tol: SpecTol,
}

fn eval_range(
    name: &'static str,
    args: &impl Serialize,
    range: &YRange,
    tol: &SpecTol,
    f: impl Fn(f64) -> fracwave_core::Result<EvalResult>,
) -> Result<(), CliError> {
    if let Some(y) = range.y {
        let r = f(y)?;
        println!("{}", r.value);
        return Ok(());
    }
    let (lo, hi) = (range.y_min.unwrap_or_default(), range.y_max.unwrap_or_default());
    if range.n_points < 2 || !positive(hi - lo) {
        return Err(CliError::Usage("need y-min < y-max and n-points >= 2".into()));
    }
    let out = range.out.as_ref().ok_or_else(|| CliError::Usage("--out is required for a range".into()))?;
    let mut rows = Vec::with_capacity(range.n_points);
    for i in 0..range.n_points {
        let y = lo + (hi - lo) * i as f64 / (range.n_points - 1) as f64;
        let r = f(y)?;
        rows.push(vec![fmt_f64(y), fmt_f64(r.value), fmt_f64(r.est_abs_error)]);
    }
    let mut art = Artifacts::new(out, name, args)?;
    tol.record(&mut art);
    art.csv(&format!("{name}.csv"), &["y", "value", "est_abs_error"], rows)?;
    art.finish()?;
    Ok(())
}

pub fn ml(a: &MlArgs) -> Result<(), CliError> {
    let p = MlParams::new(a.eta, a.gamma)?;
    let cfg = a.tol.config()?;
    eval_range("ml", a, &a.range, &a.tol, |y| mittag_leffler_with(p, y, &cfg))
}

pub fn wright(a: &WrightArgs) -> Result<(), CliError> {
    let p = WrightParams::new(a.kappa, a.eta)?;
    let cfg = a.tol.config()?;
    eval_range("wright", a, &a.range, &a.tol, |y| wright_with(p, y, &cfg))
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OperatorKind {
    Caputo,
    Rl,
}

#[derive(Debug, Args, Serialize)]
pub struct DerivArgs {
    /// Operator order
    #[arg(long)]
    pub alpha: f64,
    /// f(t) = coeff * t^exponent
    #[arg(long)]
    pub exponent: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub coeff: f64,
    #[arg(long, value_enum, default_value_t = OperatorKind::Caputo)]
    pub kind: OperatorKind,
    #[arg(long, default_value_t = 1.0)]
    pub t_end: f64,
    #[arg(long, default_value_t = 256)]
    pub steps: usize,
    #[arg(long)]
    pub out: PathBuf,
}

pub fn deriv(a: &DerivArgs) -> Result<(), CliError> {
    let f = PowerTerm::new(a.coeff, a.exponent)?;
    let mesh = TimeMesh::covering(a.t_end, a.steps)?;
    let (exact, grid) = match a.kind {
        OperatorKind::Caputo => {
            // f(0), f'(0) for orders above one
            let f0 = if a.exponent == 0.0 { a.coeff } else { 0.0 };
            let f1 = if a.exponent == 1.0 { a.coeff } else { 0.0 };
            let s = SampledFn::from_fn(mesh, |t| f.eval(t), Some(vec![f0, f1]));
            (caputo_power(&f, a.alpha)?, caputo_grid(&s, a.alpha)?)
        }
        OperatorKind::Rl => {
            let s = SampledFn::from_fn(mesh, |t| f.eval(t), None);
            (rl_integral_power(&f, a.alpha)?, rl_integral_grid(&s, a.alpha)?)
        }
    };
    let rows = mesh.times().zip(grid.values()).map(|(t, g)| {
        let e = exact.eval(t);
        vec![fmt_f64(t), fmt_f64(*g), fmt_f64(e), fmt_f64((g - e).abs())]
    });
    let mut art = Artifacts::new(&a.out, "deriv", a)?;
    art.csv("deriv.csv", &["t", "grid", "exact", "abs_error"], rows)?;
    art.finish()?;
    Ok(())
}

#[derive(Debug, Args, Serialize)]
pub struct RegionsArgs {
    /// Nodes per axis; the raster holds alpha, beta = 2i/resolution, 0 < i < resolution
    #[arg(long, default_value_t = 64)]
    pub resolution: usize,
    #[arg(long)]
    pub out: PathBuf,
}

pub fn regions(a: &RegionsArgs) -> Result<(), CliError> {
    if a.resolution < 16 {
        return Err(CliError::Usage(format!("resolution must be at least 16, got {}", a.resolution)));
    }
    let r = a.resolution;
    let node = |i: usize| (2 * i) as f64 / r as f64;
    let mut rows = Vec::with_capacity((r - 1) * (r - 1));
    for i in 1..r {
        for j in 1..r {
            let p = FracOrderPair::new(node(i), node(j))?;
            rows.push(vec![fmt_f64(node(i)), fmt_f64(node(j)), region_of(&p).label().to_string()]);
        }
    }
    let mut art = Artifacts::new(&a.out, "regions", a)?;
    art.csv("regions.csv", &["alpha", "beta", "label"], rows)?;
    art.finish()?;
    Ok(())
}

#[derive(Debug, Args, Serialize)]
pub struct GreenArgs {
    /// Order gamma in (0, 2)
    #[arg(long)]
    pub gamma: f64,
    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,
    #[arg(long)]
    pub t: f64,
    /// Samples cover [-z-max, z-max]
    #[arg(long, default_value_t = 6.0)]
    pub z_max: f64,
    #[arg(long, default_value_t = 241)]
    pub n_points: usize,
    #[arg(long)]
    pub out: PathBuf,
}

pub fn green(a: &GreenArgs) -> Result<(), CliError> {
    if a.n_points < 2 || !positive(a.z_max) {
        return Err(CliError::Usage("need z-max > 0 and n-points >= 2".into()));
    }
    let mut rows = Vec::with_capacity(a.n_points);
    for i in 0..a.n_points {
        let z = -a.z_max + 2.0 * a.z_max * i as f64 / (a.n_points - 1) as f64;
        rows.push(vec![fmt_f64(z), fmt_f64(greens::fundamental_solution(a.gamma, a.lambda, z, a.t)?)]);
    }
    let mut art = Artifacts::new(&a.out, "green", a)?;
    art.csv("green.csv", &["z", "value"], rows)?;
    art.finish()?;
    Ok(())
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InitShape {
    /// exp(-z^2)
    Gaussian,
    /// unit mass on the node at z = 0
    Delta,
    /// sin(pi z / box), one period over the box
    Sine,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GBar {
    Zero,
    /// -2 z exp(-z^2)
    GaussianSlope,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    Spectral,
    Realspace,
}

fn initial_field(shape: InitShape, grid: GridSpec) -> Result<GridField, CliError> {
    let half = 0.5 * (grid.z_max - grid.z_min);
    let dz = 2.0 * half / grid.n as f64;
    let f = grid.from_fn(|z| match shape {
        InitShape::Gaussian => (-z * z).exp(),
        InitShape::Delta if z.abs() < 0.5 * dz => 1.0 / dz,
        InitShape::Delta => 0.0,
        InitShape::Sine => (std::f64::consts::PI * z / half).sin(),
    })?;
    Ok(f)
}

#[derive(Debug, Args, Serialize)]
pub struct SequentialArgs {
    #[arg(long)]
    pub alpha: f64,
    #[arg(long)]
    pub beta: f64,
    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,
    #[arg(long)]
    pub t: f64,
    #[arg(long, default_value_t = 256)]
    pub grid_n: usize,
    /// Half-width of the periodic box [-box, box]; defaults to a width where the kernel tails are negligible
    #[arg(long = "box")]
    pub half_width: Option<f64>,
    #[arg(long, value_enum, default_value_t = InitShape::Gaussian)]
    pub init: InitShape,
    #[arg(long, value_enum, default_value_t = GBar::Zero)]
    pub g_bar: GBar,
    #[arg(long, value_enum, default_value_t = Route::Spectral)]
    pub route: Route,
    /// Also write the auxiliary field phi with this coupling constant
    #[arg(long)]
    pub kappa: Option<f64>,
    #[arg(long)]
    pub out: PathBuf,
    #[command(flatten)]
    pub tol: SpecTol,
}

pub fn sequential(a: &SequentialArgs) -> Result<(), CliError> {
    let orders = FracOrderPair::new(a.alpha, a.beta)?;
    let half = a
        .half_width
        .unwrap_or_else(|| greens::default_half_width(orders.gamma().min(1.99), a.lambda, a.t.max(1e-3)));
    let grid = GridSpec::new(-half, half, a.grid_n)?;
    let g = initial_field(a.init, grid)?;
    let g_bar = match a.g_bar {
        GBar::Zero => grid.zeros()?,
        GBar::GaussianSlope => grid.from_fn(|z| -2.0 * z * (-z * z).exp())?,
    };
    let cfg = a.tol.config()?;
    let p = SeqCauchyProblem::new(orders, a.lambda, g, g_bar)?;
    let f = match a.route {
        Route::Spectral => greens::solve_sequential_with(&p, a.t, &cfg)?,
        Route::Realspace => greens::solve_sequential_realspace(&p, a.t)?,
    };
    let mut art = Artifacts::new(&a.out, "sequential", a)?;
    a.tol.record(&mut art);
    match a.kappa {
        None => {
            let rows = (0..f.n()).map(|k| vec![fmt_f64(f.z(k)), fmt_f64(f.values()[k])]);
            art.csv("sequential.csv", &["z", "f"], rows)?;
        }
        Some(kappa) => {
            let aux = greens::build_auxiliary(&p, kappa)?;
            let phi = greens::solve_auxiliary(&aux, &p, a.t)?;
            art.diagnostic("auxiliary_residual", aux.residual);
            let rows = (0..f.n()).map(|k| vec![fmt_f64(f.z(k)), fmt_f64(f.values()[k]), fmt_f64(phi.values()[k])]);
            art.csv("sequential.csv", &["z", "f", "phi"], rows)?;
        }
    }
    art.finish()?;
    Ok(())
}

#[derive(Debug, Args, Serialize)]
pub struct SimulateArgs {
    #[arg(long)]
    pub alpha: f64,
    #[arg(long)]
    pub beta: f64,
    #[arg(long, default_value_t = 1.0)]
    pub rho0: f64,
    /// Sound speed
    #[arg(long, default_value_t = 1.0)]
    pub cs: f64,
    #[arg(long, default_value_t = 256)]
    pub grid_n: usize,
    /// Half-width of the periodic box [-box, box]
    #[arg(long = "box", default_value_t = 12.0)]
    pub half_width: f64,
    #[arg(long, default_value_t = 1.0)]
    pub t_end: f64,
    #[arg(long, default_value_t = 1.0 / 1024.0)]
    pub dt: f64,
    /// Initial density perturbation; the velocity starts at rest
    #[arg(long, value_enum, default_value_t = InitShape::Gaussian)]
    pub init: InitShape,
    /// Number of snapshot intervals; snapshots include t = 0 and t = t-end
    #[arg(long, default_value_t = 4)]
    pub snapshots: usize,
    /// Abort with a numerical error if the run needs more stored steps
    #[arg(long)]
    pub history_cap: Option<usize>,
    /// Keep only the newest history-cap steps in the memory sums instead of aborting
    #[arg(long, requires = "history_cap")]
    pub truncate_history: bool,
    /// Also report the continuity and momentum residuals
    #[arg(long)]
    pub residuals: bool,
    #[arg(long)]
    pub out: PathBuf,
}

pub fn simulate(a: &SimulateArgs) -> Result<(), CliError> {
    if !positive(a.dt) || !positive(a.t_end) || a.snapshots == 0 {
        return Err(CliError::Usage("need dt > 0, t-end > 0 and snapshots >= 1".into()));
    }
    let steps = (a.t_end / a.dt).round() as usize;
    if steps == 0 || (steps as f64 * a.dt - a.t_end).abs() > 1e-9 * a.t_end {
        return Err(CliError::Usage(format!("t-end {} is not a multiple of dt {}", a.t_end, a.dt)));
    }
    let grid = GridSpec::new(-a.half_width, a.half_width, a.grid_n)?;
    let mut cfg = SimConfig::new(
        FracOrderPair::new(a.alpha, a.beta)?,
        FluidParams::new(a.rho0, a.cs)?,
        TimeMesh::new(a.dt, steps)?,
        grid,
    )?;
    cfg.history_cap = a.history_cap;
    cfg.truncate_history = a.truncate_history;
    let init = CoupledState::new(initial_field(a.init, grid)?, grid.zeros()?, 0.0)?;
    let run = coupledsim::simulate(&cfg, &init, &InitialRates::default(), a.t_end)?;

    let mut art = Artifacts::new(&a.out, "simulate", a)?;
    let mut picks: Vec<usize> = (0..=a.snapshots).map(|j| (j * steps + a.snapshots / 2) / a.snapshots).collect();
    picks.dedup();
    for (j, &k) in picks.iter().enumerate() {
        let s = &run.history[k];
        let rows = (0..grid.n).map(|i| {
            vec![fmt_f64(s.rho_p.z(i)), fmt_f64(s.rho_p.values()[i]), fmt_f64(s.w_p.values()[i])]
        });
        art.csv(&format!("snapshot_{j:03}.csv"), &["z", "rho_p", "w_p"], rows)?;
    }
    let times: Vec<f64> = picks.iter().map(|&k| run.history[k].t).collect();
    art.json("snapshot_times.json", &times)?;
    if run.truncated {
        art.diagnostic("history_truncated", 1.0);
    }
    if a.residuals {
        let r = coupledsim::residual_report(&run, &cfg)?;
        art.diagnostic("continuity_residual", r.continuity_res);
        art.diagnostic("momentum_residual", r.momentum_res);
    }
    art.finish()?;
    Ok(())
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    /// specfun, fracops, regions, greens, coupledsim or all
    pub suite: String,
    /// Also write the report and a manifest here
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn verify(a: &VerifyArgs) -> Result<(), CliError> {
    let suite: Suite = a.suite.parse().map_err(|e: fracwave_core::Error| CliError::Usage(e.to_string()))?;
    let report = run_suite(suite);
    println!("{}", serde_json::to_string_pretty(&report)?);
    if let Some(dir) = &a.out {
        let mut art = Artifacts::new(dir, "verify", a)?;
        for c in &report.checks {
            art.tolerance(&format!("{}.{}", c.suite, c.name), c.bound);
        }
        art.json(&format!("verify_{}.json", a.suite), &report)?;
        art.finish()?;
    }
    let failed = report.checks.iter().filter(|c| !c.passed).count();
    if failed > 0 {
        return Err(CliError::ChecksFailed(failed));
    }
    Ok(())
}
