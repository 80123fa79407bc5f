//! Randomised verification campaigns, constant tables and report files.
//!
//! Every trial draws from its own ChaCha stream keyed by `(seed, theorem,
//! trial)`, so results do not depend on how trials are scheduled across
//! workers.

use std::collections::BTreeMap;
use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::binning::build_binning;
use crate::block::{bennett_bound_check, to_blocks};
use crate::ensemble::{
    random_bounded, random_clustered, random_hermitian, random_multiplier, random_positive, Ensemble, PositiveSpec,
};
use crate::error::{Error, Result};
use crate::fourier::{derivation_as_schur, exact_schur_identity, CircleModel, IdentityResidual};
use crate::functions::{log_beta_split, FunctionSpec, HolderBound};
use crate::inequality::{
    binomial, check_abs_cont, check_abs_first, check_abs_higher, check_gbeta, check_holder, check_log_interp, check_lp,
    check_tilde_log, optimized_log_constant, PositiveInstance,
};
use crate::multipliers::abs_row_bound;
use crate::operator::{Complex64, HermitianOperator};
use crate::report::{de_extended, ser_extended, InequalityReport, InstanceDigest, TheoremId, Tolerance};

/// Optional environment variable capping the worker count.
pub const WORKERS_ENV: &str = "COMMSCHUR_WORKERS";

/// Hölder classes cycled through when none is configured.
pub const DEFAULT_HOLDER: [(f64, f64, f64); 3] = [(1.0, 0.0, 1.0), (0.5, 1.0, 1.0), (0.25, 0.0, 2.0)];
pub const DEFAULT_BETAS: [f64; 3] = [0.125, 1.0, 8.0];
pub const DEFAULT_PS: [f64; 3] = [1.0, 1.5, 1.9];
pub const DEFAULT_ORDERS: [u32; 3] = [1, 2, 3];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub theorems: Vec<TheoremId>,
    /// Trials per theorem.
    pub trials: u64,
    pub dim_range: [usize; 2],
    pub spectral_radius: f64,
    pub positive_only: bool,
    /// Probability that a positive instance gets exact-zero eigenvalues.
    pub kernel_fraction: f64,
    pub alpha: Option<f64>,
    #[serde(rename = "A")]
    pub a: Option<f64>,
    #[serde(rename = "B")]
    pub b: Option<f64>,
    pub beta: Option<f64>,
    pub p: Option<f64>,
    pub n: Option<u32>,
    pub seed: u64,
    pub ensemble: Ensemble,
    pub tolerance: Tolerance,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        Self {
            theorems: vec![TheoremId::AbsFirst],
            trials: 200,
            dim_range: [2, 24],
            spectral_radius: 30.0,
            positive_only: false,
            kernel_fraction: 0.25,
            alpha: None,
            a: None,
            b: None,
            beta: None,
            p: None,
            n: None,
            seed: 0,
            ensemble: Ensemble::Dense,
            tolerance: Tolerance::default(),
        }
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::ConfigInvalid(msg.into())
}

impl CampaignConfig {
    pub fn for_theorem(theorem: TheoremId) -> Self {
        Self {
            theorems: vec![theorem],
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.theorems.is_empty() {
            return Err(invalid("no theorem selected"));
        }
        let [lo, hi] = self.dim_range;
        if lo < 2 || lo > hi {
            return Err(invalid(format!("dimension range {lo}..{hi} must satisfy 2 <= min <= max")));
        }
        if !(self.spectral_radius > 0.0 && self.spectral_radius.is_finite()) {
            return Err(invalid(format!("spectral radius {} must be positive", self.spectral_radius)));
        }
        if !(0.0..=1.0).contains(&self.kernel_fraction) {
            return Err(invalid(format!("kernel fraction {} outside [0, 1]", self.kernel_fraction)));
        }
        if let Some(p) = self.p {
            if self.theorems.contains(&TheoremId::Lp) && !(1.0..2.0).contains(&p) {
                return Err(invalid(format!("p = {p} outside [1, 2)")));
            }
        }
        if let Some(beta) = self.beta {
            if !(beta > 0.0 && beta.is_finite()) {
                return Err(invalid(format!("beta = {beta} must be positive")));
            }
        }
        if self.n == Some(0) {
            return Err(invalid("order n must be >= 1"));
        }
        if self.alpha.is_some() || self.a.is_some() || self.b.is_some() {
            let hb = self.holder_override().expect("some field set")?;
            if hb.alpha > 1.0 {
                return Err(invalid(format!("alpha = {} > 1 has no non-constant sample", hb.alpha)));
            }
        }
        let Tolerance { relative, absolute } = self.tolerance;
        // Negative relative tolerances down to -1 demand headroom: a bound
        // must then hold with slack ratio below 1 + relative.
        if !(relative > -1.0 && absolute >= 0.0) {
            return Err(invalid("need relative tolerance > -1 and absolute tolerance >= 0"));
        }
        Ok(())
    }

    fn holder_override(&self) -> Option<Result<HolderBound>> {
        if self.alpha.is_none() && self.a.is_none() && self.b.is_none() {
            return None;
        }
        let hb = HolderBound::new(self.alpha.unwrap_or(1.0), self.a.unwrap_or(0.0), self.b.unwrap_or(1.0))
            .map_err(|e| invalid(e.to_string()));
        Some(hb)
    }
}

fn cycle<T: Copy>(options: &[T], trial: u64) -> T {
    options[(trial % options.len() as u64) as usize]
}

fn trial_rng(seed: u64, theorem: TheoremId, trial: u64) -> ChaCha8Rng {
    let index = TheoremId::ALL.iter().position(|&t| t == theorem).unwrap_or(0) as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((index << 48) | trial);
    rng
}

struct Trial<'c> {
    config: &'c CampaignConfig,
    trial: u64,
    rng: ChaCha8Rng,
    dim: usize,
}

impl Trial<'_> {
    fn kernel_dim(&mut self) -> usize {
        if self.rng.random_bool(self.config.kernel_fraction) {
            self.rng.random_range(1..=(self.dim / 2).max(1))
        } else {
            0
        }
    }

    fn positive(&mut self, kernel_dim: usize, beta: Option<f64>) -> Result<PositiveInstance> {
        let spec = PositiveSpec {
            dim: self.dim,
            radius: self.config.spectral_radius,
            kernel_dim,
            beta,
        };
        random_positive(&mut self.rng, spec)
    }

    fn generator(&mut self) -> Result<HermitianOperator> {
        if self.config.positive_only {
            let k = self.kernel_dim();
            Ok(self.positive(k, None)?.operator().clone())
        } else {
            random_hermitian(&mut self.rng, self.dim, self.config.spectral_radius)
        }
    }

    fn bounded(&mut self, dim: usize) -> crate::operator::BoundedOperator {
        random_bounded(&mut self.rng, dim, self.config.ensemble)
    }

    fn beta(&mut self) -> f64 {
        match self.config.beta {
            Some(b) => b,
            None => 10f64.powf(self.rng.random_range(-1.0..=1.0)),
        }
    }

    fn run(&mut self, theorem: TheoremId) -> Result<InequalityReport> {
        let trial = self.trial;
        let cfg = self.config;
        let mut report = match theorem {
            TheoremId::Bennett => {
                let d = random_clustered(&mut self.rng, 8, 4, cfg.spectral_radius.max(4.0))?;
                let binning = build_binning(&d);
                let y = self.bounded(d.dim());
                let s = random_multiplier(&mut self.rng, &binning.occupied());
                bennett_bound_check(&s, &to_blocks(&binning, &y)?)
            }
            TheoremId::HoldThm => {
                let hb = match cfg.holder_override() {
                    Some(hb) => hb?,
                    None => {
                        let (alpha, a, b) = cycle(&DEFAULT_HOLDER, trial);
                        HolderBound::new(alpha, a, b)?
                    }
                };
                let shift = self.rng.random_range(-cfg.spectral_radius..=cfg.spectral_radius);
                let g = FunctionSpec::power_step(hb.alpha, hb.a, hb.b, shift)?;
                let d = self.generator()?;
                let y = self.bounded(d.dim());
                let mut r = check_holder(&d, &y, &g)?;
                r.params.insert("shift".into(), shift);
                r
            }
            TheoremId::AbsCont => {
                let (g, split, beta) = if trial.is_multiple_of(2) {
                    let g = FunctionSpec::arctan();
                    let split = g.split().expect("arctan has a split");
                    (g, split, None)
                } else {
                    let beta = self.beta();
                    (FunctionSpec::log_beta(beta)?, log_beta_split(beta), Some(beta))
                };
                let d = self.generator()?;
                let y = self.bounded(d.dim());
                let mut r = check_abs_cont(&d, &y, &g, split)?;
                if let Some(beta) = beta {
                    r.params.insert("beta".into(), beta);
                }
                r
            }
            TheoremId::Lp => {
                let p = cfg.p.unwrap_or_else(|| cycle(&DEFAULT_PS, trial));
                let (g, beta) = if p == 1.0 || (trial / 3).is_multiple_of(2) {
                    (FunctionSpec::arctan(), None)
                } else {
                    let beta = self.beta();
                    (FunctionSpec::log_beta(beta)?, Some(beta))
                };
                let d = self.generator()?;
                let y = self.bounded(d.dim());
                let mut r = check_lp(&d, &y, &g, p)?;
                if let Some(beta) = beta {
                    r.params.insert("beta".into(), beta);
                }
                r
            }
            TheoremId::GBeta => {
                let beta = cfg.beta.unwrap_or_else(|| cycle(&DEFAULT_BETAS, trial));
                let k = self.kernel_dim();
                let inst = self.positive(k, Some(beta))?;
                let y = self.bounded(self.dim);
                check_gbeta(&inst, &y)?
            }
            TheoremId::TildeLogInv | TheoremId::LogInterp13 => {
                let beta = cfg.beta;
                let inst = self.positive(0, beta)?;
                let y = self.bounded(self.dim);
                if theorem == TheoremId::TildeLogInv {
                    check_tilde_log(&inst, &y)?
                } else {
                    check_log_interp(&inst, &y)?
                }
            }
            TheoremId::TildeLogNonInv => {
                let k = self.rng.random_range(1..=(self.dim / 2).max(1));
                let inst = self.positive(k, cfg.beta)?;
                let y = self.bounded(self.dim);
                check_tilde_log(&inst, &y)?
            }
            TheoremId::AbsFirst => {
                let d = self.generator()?;
                let y = self.bounded(d.dim());
                check_abs_first(&d, &y)?
            }
            TheoremId::AbsHigher => {
                let n = cfg.n.unwrap_or_else(|| cycle(&DEFAULT_ORDERS, trial));
                let d = self.generator()?;
                let y = self.bounded(d.dim());
                check_abs_higher(&d, &y, n as usize)?
            }
        };
        report.instance_digest.seed = Some(cfg.seed);
        report.instance_digest.trial = Some(trial);
        Ok(report.with_tolerance(cfg.tolerance))
    }
}

/// Runs a single trial; the building block of [`run_campaign`].
pub fn run_trial(config: &CampaignConfig, theorem: TheoremId, trial: u64) -> Result<InequalityReport> {
    let mut rng = trial_rng(config.seed, theorem, trial);
    let [lo, hi] = config.dim_range;
    let dim = rng.random_range(lo..=hi);
    Trial {
        config,
        trial,
        rng,
        dim,
    }
    .run(theorem)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportHeader {
    pub artifact_version: String,
    pub config: CampaignConfig,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportSummary {
    pub trials: u64,
    pub passed: u64,
    pub failed: u64,
    #[serde(serialize_with = "ser_extended", deserialize_with = "de_extended")]
    pub max_slack_ratio: f64,
    pub argmax_theorem: Option<TheoremId>,
    pub argmax: Option<InstanceDigest>,
}

impl ReportSummary {
    pub fn of(records: &[InequalityReport]) -> Self {
        let passed = records.iter().filter(|r| r.pass).count() as u64;
        let worst = records
            .iter()
            .max_by(|a, b| a.slack_ratio.total_cmp(&b.slack_ratio));
        Self {
            trials: records.len() as u64,
            passed,
            failed: records.len() as u64 - passed,
            max_slack_ratio: worst.map_or(0.0, |r| r.slack_ratio),
            argmax_theorem: worst.map(|r| r.theorem_id),
            argmax: worst.map(|r| r.instance_digest.clone()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub header: ReportHeader,
    pub records: Vec<InequalityReport>,
    pub summary: ReportSummary,
}

impl ReportFile {
    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    /// 0 when every trial passes, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Io(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Io(e.to_string()))
    }

    pub fn write_json(&self, mut out: impl Write) -> Result<()> {
        out.write_all(self.to_json()?.as_bytes())?;
        out.write_all(b"\n")?;
        Ok(())
    }

    /// One row per record; `params` flattened to `key=value` pairs.
    pub fn write_csv(&self, out: impl Write) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record([
            "theorem_id",
            "seed",
            "trial",
            "dim",
            "spectral_min",
            "spectral_max",
            "lhs",
            "rhs",
            "slack_ratio",
            "pass",
            "params",
        ])
        .map_err(io)?;
        for r in &self.records {
            let d = &r.instance_digest;
            let opt = |v: Option<u64>| v.map(|v| v.to_string()).unwrap_or_default();
            w.write_record([
                r.theorem_id.name().to_string(),
                opt(d.seed),
                opt(d.trial),
                d.dim.to_string(),
                d.spectral_min.to_string(),
                d.spectral_max.to_string(),
                r.lhs.to_string(),
                r.rhs.to_string(),
                r.slack_ratio.to_string(),
                r.pass.to_string(),
                flatten_params(&r.params),
            ])
            .map_err(io)?;
        }
        w.flush()?;
        Ok(())
    }
}

fn flatten_params(params: &BTreeMap<String, f64>) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

/// Worker count: `requested`, else all cores, capped by [`WORKERS_ENV`].
pub fn resolve_workers(requested: Option<usize>) -> usize {
    let base = requested.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let cap = std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&v| v > 0);
    cap.map_or(base, |c| base.min(c)).max(1)
}

/// Runs every configured trial on a pool of `workers` threads.
pub fn run_campaign(config: &CampaignConfig, workers: usize) -> Result<ReportFile> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    let jobs: Vec<(TheoremId, u64)> = config
        .theorems
        .iter()
        .flat_map(|&t| (0..config.trials).map(move |k| (t, k)))
        .collect();
    let records = pool.install(|| {
        jobs.par_iter()
            .map(|&(t, k)| run_trial(config, t, k))
            .collect::<Result<Vec<_>>>()
    })?;
    let timestamp = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map_or(0, |d| d.as_secs());
    Ok(ReportFile {
        header: ReportHeader {
            artifact_version: env!("CARGO_PKG_VERSION").to_string(),
            config: config.clone(),
            timestamp,
        },
        summary: ReportSummary::of(&records),
        records,
    })
}

// ---------------------------------------------------------------------------
// Constants
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantRow {
    pub quantity: String,
    pub params: BTreeMap<String, f64>,
    pub value: f64,
}

fn row(quantity: &str, params: &[(&str, f64)], value: f64) -> ConstantRow {
    ConstantRow {
        quantity: quantity.to_string(),
        params: params.iter().map(|(k, v)| ((*k).to_string(), *v)).collect(),
        value,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConstantsGrid {
    pub holder: Vec<HolderBound>,
    pub betas: Vec<f64>,
    pub ps: Vec<f64>,
    pub orders: Vec<u32>,
}

impl Default for ConstantsGrid {
    fn default() -> Self {
        Self {
            holder: DEFAULT_HOLDER
                .iter()
                .map(|&(alpha, a, b)| HolderBound { alpha, a, b })
                .collect(),
            betas: DEFAULT_BETAS.to_vec(),
            ps: DEFAULT_PS.to_vec(),
            orders: DEFAULT_ORDERS.to_vec(),
        }
    }
}

/// Right-hand-side constants over a parameter grid.
pub fn constants_table(grid: &ConstantsGrid) -> Result<Vec<ConstantRow>> {
    if grid.holder.is_empty() && grid.betas.is_empty() && grid.ps.is_empty() && grid.orders.is_empty() {
        return Err(Error::InvalidParameter("empty constants grid".into()));
    }
    let k = abs_row_bound();
    let mut rows = vec![
        row("abs_row_bound", &[], k),
        row("log_interp_constant", &[], 13.0),
        row("log_interp_optimized_constant", &[], optimized_log_constant()),
    ];
    for hb in &grid.holder {
        let n = hb.order();
        let sf = hb.sqrt_factor(n)?;
        let p = [("alpha", hb.alpha), ("A", hb.a), ("B", hb.b), ("n", f64::from(n))];
        rows.push(row("holder_row_norm_factor", &p, hb.row_norm_factor(n)?));
        rows.push(row("holder_y_coefficient", &p, 2.0 * (hb.a + hb.b) * (1.0 + sf)));
        for j in 1..=n as usize {
            let mut pj = p.to_vec();
            pj.push(("k", j as f64));
            rows.push(row(
                "holder_delta_coefficient",
                &pj,
                2.0 * (hb.a + hb.b) * sf * binomial(n as usize, j),
            ));
        }
    }
    for &p in &grid.ps {
        if !(1.0..2.0).contains(&p) {
            return Err(Error::POutOfRange(p));
        }
        let q = 1.0 / (2.0 - p).sqrt();
        rows.push(row("lp_y_coefficient_per_unit_norm", &[("p", p)], 2.0 * (1.0 + q)));
        rows.push(row("lp_delta_coefficient_per_unit_norm", &[("p", p)], 2.0 * q));
    }
    for &beta in &grid.betas {
        if !(beta > 0.0) {
            return Err(Error::NotPositive(beta));
        }
        let w = beta.powf(-1.0 / 3.0);
        let p = [("beta", beta)];
        rows.push(row("g_beta_derivative_l3/2_norm", &p, 2f64.powf(2.0 / 3.0) * w));
        rows.push(row("g_beta_y_coefficient", &p, 8.0 * w));
        rows.push(row("g_beta_delta_coefficient", &p, 5.0 * w));
        rows.push(row("tilde_log_kernel_y_coefficient", &p, 8.0 * w + beta.ln().abs()));
        rows.push(row("tilde_log_kernel_delta_coefficient", &p, 5.0 * w));
        rows.push(row("log_interp_coefficient", &p, 13.0 * w));
    }
    for &n in &grid.orders {
        if n == 0 {
            return Err(Error::InvalidParameter("order n must be >= 1".into()));
        }
        let nf = f64::from(n);
        rows.push(row("abs_higher_y_coefficient", &[("n", nf)], 2f64.powi(n as i32) * k));
        let n = n as usize;
        for l in 1..=n + 1 {
            rows.push(row(
                "abs_higher_delta_coefficient",
                &[("n", nf), ("l", l as f64)],
                k * binomial(n + 1, l) * 2f64.powi((n + 1 - l) as i32),
            ));
        }
    }
    Ok(rows)
}

pub fn write_constants_json(rows: &[ConstantRow], mut out: impl Write) -> Result<()> {
    let text = serde_json::to_string_pretty(rows).map_err(|e| Error::Io(e.to_string()))?;
    out.write_all(text.as_bytes())?;
    out.write_all(b"\n")?;
    Ok(())
}

pub fn write_constants_csv(rows: &[ConstantRow], out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(["quantity", "params", "value"]).map_err(io)?;
    for r in rows {
        w.write_record([r.quantity.clone(), flatten_params(&r.params), r.value.to_string()])
            .map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

// ---------------------------------------------------------------------------
// Circle model demo
// ---------------------------------------------------------------------------

/// Looks up a function by name; `name:value` supplies a parameter
/// (`log_beta:0.5`, `sine:2`, `constant:3`).
pub fn parse_function(spec: &str) -> Result<FunctionSpec> {
    let (name, arg) = match spec.split_once(':') {
        Some((n, a)) => {
            let v: f64 = a
                .parse()
                .map_err(|_| invalid(format!("bad parameter in function `{spec}`")))?;
            (n, Some(v))
        }
        None => (spec, None),
    };
    let need = |v: Option<f64>| v.ok_or_else(|| invalid(format!("function `{name}` needs `:value`")));
    Ok(match name {
        "abs" => FunctionSpec::abs_value(),
        "square" => FunctionSpec::square(),
        "phase" | "exp_i" => FunctionSpec::phase(),
        "identity" => FunctionSpec::identity(),
        "arctan" => FunctionSpec::arctan(),
        "tilde_log" => FunctionSpec::tilde_log(),
        "log_beta" => FunctionSpec::log_beta(need(arg)?).map_err(|e| invalid(e.to_string()))?,
        "sine" => FunctionSpec::sine(need(arg)?),
        "constant" => FunctionSpec::constant(Complex64::new(need(arg)?, 0.0)),
        other => return Err(invalid(format!("unknown function `{other}`"))),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FourierRecord {
    pub trial: u64,
    pub schur: IdentityResidual,
    pub derivation: IdentityResidual,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FourierReport {
    pub m: usize,
    pub function: String,
    pub seed: u64,
    pub records: Vec<FourierRecord>,
    pub max_schur_residual: f64,
    pub max_derivation_residual: f64,
    pub pass: bool,
}

/// Both circle-model identities on `trials` random `y`.
pub fn run_fourier(m: usize, function: &str, seed: u64, trials: u64, ensemble: Ensemble) -> Result<FourierReport> {
    let g = parse_function(function)?;
    let model = CircleModel::new(m)?;
    let mut records = Vec::new();
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        let y = random_bounded(&mut rng, model.dim(), ensemble);
        records.push(FourierRecord {
            trial,
            schur: exact_schur_identity(&model, &g, &y)?,
            derivation: derivation_as_schur(&model, &y)?,
        });
    }
    let max_of = |f: fn(&FourierRecord) -> f64| records.iter().map(f).fold(0.0, f64::max);
    Ok(FourierReport {
        m,
        function: function.to_string(),
        seed,
        max_schur_residual: max_of(|r| r.schur.residual),
        max_derivation_residual: max_of(|r| r.derivation.residual),
        pass: records.iter().all(|r| r.schur.pass && r.derivation.pass),
        records,
    })
}
