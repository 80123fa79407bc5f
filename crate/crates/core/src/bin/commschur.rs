//! `commschur verify | constants | fourier`
//!
//! Exit status: 0 all pass, 1 an inequality or identity failed, 2 bad
//! configuration or usage.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use schur_commutators::campaign::{resolve_workers, write_constants_csv, write_constants_json};
use schur_commutators::{
    constants_table, run_campaign, run_fourier, CampaignConfig, ConstantsGrid, Ensemble, Error, HolderBound, TheoremId,
    Tolerance,
};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EnsembleArg {
    Dense,
    Band,
}

impl From<EnsembleArg> for Ensemble {
    fn from(e: EnsembleArg) -> Self {
        match e {
            EnsembleArg::Dense => Ensemble::Dense,
            EnsembleArg::Band => Ensemble::Band,
        }
    }
}

#[derive(Parser)]
#[command(name = "commschur", version, about = "Check commutator norm inequalities on random matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a randomised verification campaign.
    Verify(VerifyArgs),
    /// Tabulate right-hand-side constants.
    Constants(ConstantsArgs),
    /// Check the exact Schur identities on the truncated circle model.
    Fourier(FourierArgs),
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Theorem id (repeatable), or `all`.
    #[arg(long, required = true)]
    theorem: Vec<String>,
    #[arg(long, default_value_t = 200)]
    trials: u64,
    /// Dimension `N` or range `MIN-MAX`.
    #[arg(long, default_value = "2-24")]
    dim: String,
    #[arg(long, default_value_t = 30.0)]
    radius: f64,
    /// Draw positive generators for every theorem.
    #[arg(long)]
    positive: bool,
    #[arg(long = "kernel-frac", default_value_t = 0.25)]
    kernel_frac: f64,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long = "A")]
    a: Option<f64>,
    #[arg(long = "B")]
    b: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Relative tolerance; the absolute floor stays at 1e-12.
    #[arg(long)]
    tol: Option<f64>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, value_enum, default_value_t = EnsembleArg::Dense)]
    ensemble: EnsembleArg,
    /// Worker threads (capped by COMMSCHUR_WORKERS when set).
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(clap::Args)]
struct ConstantsArgs {
    /// Hölder classes as `alpha,A,B` (repeatable).
    #[arg(long = "holder")]
    holder: Vec<String>,
    #[arg(long = "beta")]
    beta: Vec<f64>,
    #[arg(long = "p")]
    p: Vec<f64>,
    #[arg(long = "n")]
    n: Vec<u32>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(clap::Args)]
struct FourierArgs {
    /// Mode cutoff; the model has dimension 2M + 1.
    #[arg(long = "M", default_value_t = 16)]
    m: usize,
    /// abs, square, phase, identity, arctan, tilde_log, log_beta:β, sine:ω, constant:c
    #[arg(long = "g", default_value = "abs")]
    g: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    trials: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn output(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn parse_dims(s: &str) -> Result<[usize; 2], Error> {
    let bad = || Error::ConfigInvalid(format!("bad --dim `{s}`"));
    match s.split_once('-') {
        Some((lo, hi)) => Ok([lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?]),
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            Ok([n, n])
        }
    }
}

fn parse_theorems(names: &[String]) -> Result<Vec<TheoremId>, Error> {
    if names.iter().any(|n| n.eq_ignore_ascii_case("all")) {
        return Ok(TheoremId::ALL.to_vec());
    }
    names.iter().map(|n| n.parse()).collect()
}

fn verify(args: VerifyArgs) -> Result<i32, Error> {
    let mut tolerance = Tolerance::default();
    if let Some(t) = args.tol {
        tolerance.relative = t;
    }
    let config = CampaignConfig {
        theorems: parse_theorems(&args.theorem)?,
        trials: args.trials,
        dim_range: parse_dims(&args.dim)?,
        spectral_radius: args.radius,
        positive_only: args.positive,
        kernel_fraction: args.kernel_frac,
        alpha: args.alpha,
        a: args.a,
        b: args.b,
        beta: args.beta,
        p: args.p,
        n: args.n,
        seed: args.seed,
        ensemble: args.ensemble.into(),
        tolerance,
    };
    config.validate()?;
    let report = run_campaign(&config, resolve_workers(args.workers))?;
    let out = output(&args.out)?;
    match args.format {
        Format::Json => report.write_json(out)?,
        Format::Csv => report.write_csv(out)?,
    }
    let s = &report.summary;
    eprintln!(
        "{}/{} passed, max slack ratio {:.6e}",
        s.passed, s.trials, s.max_slack_ratio
    );
    Ok(report.exit_code())
}

fn constants(args: ConstantsArgs) -> Result<i32, Error> {
    let mut grid = ConstantsGrid::default();
    if !args.holder.is_empty() {
        grid.holder = args
            .holder
            .iter()
            .map(|h| {
                let v: Vec<f64> = h
                    .split(',')
                    .map(|x| x.trim().parse::<f64>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| Error::ConfigInvalid(format!("bad --holder `{h}`")))?;
                match v[..] {
                    [alpha, a, b] => HolderBound::new(alpha, a, b),
                    _ => Err(Error::ConfigInvalid(format!("--holder expects alpha,A,B, got `{h}`"))),
                }
            })
            .collect::<Result<_, _>>()?;
    }
    if !args.beta.is_empty() {
        grid.betas = args.beta;
    }
    if !args.p.is_empty() {
        grid.ps = args.p;
    }
    if !args.n.is_empty() {
        grid.orders = args.n;
    }
    let rows = constants_table(&grid)?;
    let out = output(&args.out)?;
    match args.format {
        Format::Json => write_constants_json(&rows, out)?,
        Format::Csv => write_constants_csv(&rows, out)?,
    }
    Ok(0)
}

fn fourier(args: FourierArgs) -> Result<i32, Error> {
    let report = run_fourier(args.m, &args.g, args.seed, args.trials, Ensemble::Dense)?;
    let mut out = output(&args.out)?;
    let text = serde_json::to_string_pretty(&report).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out, "{text}")?;
    eprintln!(
        "M={} g={}: max residuals {:.3e} (Schur), {:.3e} (derivation)",
        report.m, report.function, report.max_schur_residual, report.max_derivation_residual
    );
    Ok(if report.pass { 0 } else { 1 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => verify(a),
        Command::Constants(a) => constants(a),
        Command::Fourier(a) => fourier(a),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
