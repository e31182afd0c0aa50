//! Command-line front end: spectra, reference tables, figure data,
//! wavefunction samples, and the independent-oracle verification report, as
//! CSV (default) or JSON.
//!
//! Exit codes: 0 success, 1 usage error, 2 convergence failure, 3 the
//! requested family/branch admits no bound states.

use crate::model::{self, Branch, PhysicalConstants};
use crate::oracle::{self, OracleFamily, OracleFields, ShootingProblem};
use crate::spectrum::{self, SpectralLine, SpectrumError};
use crate::wavefun::{self, BoundFamily};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CONVERGENCE: i32 = 2;
pub const EXIT_NO_BOUND_STATES: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Spinsym,
    Pseudospin,
    Electrostatic,
    /// The general machinery restricted to the couplings expressible from
    /// the command line (pure vector term); spectra coincide with
    /// `electrostatic`.
    General,
}

impl Family {
    fn as_str(&self) -> &'static str {
        match self {
            Family::Spinsym => "spinsym",
            Family::Pseudospin => "pseudospin",
            Family::Electrostatic => "electrostatic",
            Family::General => "general",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "UPPER")]
pub enum BranchArg {
    #[value(alias = "a")]
    A,
    #[value(alias = "b")]
    B,
}

impl From<BranchArg> for Branch {
    fn from(b: BranchArg) -> Branch {
        match b {
            BranchArg::A => Branch::A,
            BranchArg::B => Branch::B,
        }
    }
}

#[derive(Args, Debug, Default, Clone)]
pub struct CommonArgs {
    /// Field configuration family.
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Eigenvalue subset: A (ψ_A(0) = 0) or B (ψ_B(0) = 0).
    #[arg(long, value_enum)]
    branch: Option<BranchArg>,
    /// Dimensionless coupling V1²/(mħc³); mutually exclusive with --v1.
    #[arg(long)]
    lambda: Option<f64>,
    /// Mass (used with --v1).
    #[arg(long)]
    m: Option<f64>,
    /// Reduced Planck constant (used with --v1).
    #[arg(long)]
    hbar: Option<f64>,
    /// Speed of light (used with --v1).
    #[arg(long)]
    c: Option<f64>,
    /// Potential strength V1; mutually exclusive with --lambda.
    #[arg(long)]
    v1: Option<f64>,
    /// Number of levels.
    #[arg(long = "n-max")]
    n_max: Option<u32>,
    /// Output format.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Output path (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Convergence tolerance override.
    #[arg(long)]
    tol: Option<f64>,
    /// Flat key=value config file; flags take precedence over its entries.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Parser, Debug)]
#[command(
    name = "dirac-invsqrt",
    version,
    about = "Bound-state spectra of the 1D Dirac equation with inverse-square-root potentials"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Exact spectrum with the per-level closed-form approximation.
    Spectrum(CommonArgs),
    /// Reference comparison tables 1–4 (exact vs approximate rows).
    Tables {
        /// Table number.
        which: u8,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Figure data: 1 = quantization function vs its approximation over ν;
    /// 2 = phase function f(E) with its rational approximation.
    Figdata {
        /// Figure number.
        which: u8,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Normalized spinor samples of one bound state.
    Wavefunction {
        /// Level index (per-branch numbering).
        #[arg(long)]
        level: Option<u32>,
        /// Number of grid points (odd; symmetric about the origin).
        #[arg(long)]
        points: Option<u32>,
        /// Half-width of the x grid (defaults to the state's envelope).
        #[arg(long = "x-max")]
        x_max: Option<f64>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Independent shooting-method verification plus the discrepancy report.
    Verify(CommonArgs),
}

/// Fully resolved run configuration (flags > config file > defaults).
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub family: Family,
    pub branch: Branch,
    pub k: PhysicalConstants,
    pub v1: f64,
    pub lambda: f64,
    pub n_max: u32,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub tol: f64,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Oracle(#[from] oracle::OracleError),
    #[error(transparent)]
    Wavefun(#[from] wavefun::WavefunError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Spectrum(SpectrumError::NoBoundStates) => EXIT_NO_BOUND_STATES,
            _ => EXIT_CONVERGENCE,
        }
    }
}

fn parse_config_file(path: &PathBuf) -> Result<HashMap<String, String>, CliError> {
    let text = std::fs::read_to_string(path)?;
    let mut map = HashMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(CliError::Usage(format!(
                "{}:{}: expected key=value, got {line:?}",
                path.display(),
                i + 1
            )));
        };
        map.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(map)
}

fn cfg_parse<T: std::str::FromStr>(
    map: &HashMap<String, String>,
    key: &str,
) -> Result<Option<T>, CliError> {
    match map.get(key) {
        None => Ok(None),
        Some(raw) => raw
            .parse::<T>()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("config key {key}: cannot parse {raw:?}"))),
    }
}

fn resolve(common: &CommonArgs) -> Result<RunConfig, CliError> {
    let file = match &common.config {
        Some(path) => parse_config_file(path)?,
        None => HashMap::new(),
    };
    let family = match common.family {
        Some(f) => f,
        None => match file.get("family").map(String::as_str) {
            None => Family::Spinsym,
            Some("spinsym") => Family::Spinsym,
            Some("pseudospin") => Family::Pseudospin,
            Some("electrostatic") => Family::Electrostatic,
            Some("general") => Family::General,
            Some(other) => return Err(CliError::Usage(format!("config: unknown family {other:?}"))),
        },
    };
    let branch = match common.branch {
        Some(b) => b.into(),
        None => match file.get("branch").map(String::as_str) {
            None => Branch::A,
            Some("A") | Some("a") => Branch::A,
            Some("B") | Some("b") => Branch::B,
            Some(other) => return Err(CliError::Usage(format!("config: unknown branch {other:?}"))),
        },
    };
    let lambda_in = match common.lambda {
        Some(l) => Some(l),
        None => cfg_parse::<f64>(&file, "lambda")?,
    };
    let v1_in = match common.v1 {
        Some(v) => Some(v),
        None => cfg_parse::<f64>(&file, "v1")?,
    };
    if common.lambda.is_some() && common.v1.is_some() {
        return Err(CliError::Usage(
            "--lambda and --v1 are mutually exclusive".to_string(),
        ));
    }
    let m = common.m.or(cfg_parse::<f64>(&file, "m")?).unwrap_or(1.0);
    let hbar = common.hbar.or(cfg_parse::<f64>(&file, "hbar")?).unwrap_or(1.0);
    let c = common.c.or(cfg_parse::<f64>(&file, "c")?).unwrap_or(1.0);
    if m <= 0.0 || hbar <= 0.0 || c <= 0.0 {
        return Err(CliError::Usage("m, hbar, c must be positive".to_string()));
    }
    let k = PhysicalConstants { m, hbar, c };
    let (v1, lambda) = match (v1_in, lambda_in) {
        (Some(v1), None) => {
            if v1 == 0.0 {
                return Err(CliError::Usage("--v1 must be nonzero".to_string()));
            }
            (v1, v1 * v1 / (m * hbar * c.powi(3)))
        }
        (None, lam) => {
            let lambda = lam.unwrap_or(1.0);
            if lambda <= 0.0 {
                return Err(CliError::Usage("--lambda must be positive".to_string()));
            }
            // attractive sign convention per family: the pseudo-spin family
            // binds for V1 > 0, all others for V1 < 0
            let mag = -model::v1_from_lambda(lambda, &k); // positive magnitude
            let v1 = match family {
                Family::Pseudospin => mag,
                _ => -mag,
            };
            (v1, lambda)
        }
        (Some(_), Some(_)) => {
            return Err(CliError::Usage(
                "lambda and v1 are mutually exclusive (config file included)".to_string(),
            ));
        }
    };
    let n_max = common
        .n_max
        .or(cfg_parse::<u32>(&file, "n_max")?)
        .unwrap_or(7);
    if n_max < 1 {
        return Err(CliError::Usage("--n-max must be at least 1".to_string()));
    }
    let format = match common.format {
        Some(f) => f,
        None => match file.get("format").map(String::as_str) {
            None => Format::Csv,
            Some("csv") => Format::Csv,
            Some("json") => Format::Json,
            Some(other) => return Err(CliError::Usage(format!("config: unknown format {other:?}"))),
        },
    };
    let out = common
        .out
        .clone()
        .or_else(|| file.get("out").map(PathBuf::from));
    let tol = common.tol.or(cfg_parse::<f64>(&file, "tol")?).unwrap_or(1e-10);
    if tol <= 0.0 {
        return Err(CliError::Usage("--tol must be positive".to_string()));
    }
    Ok(RunConfig { family, branch, k, v1, lambda, n_max, format, out, tol })
}

fn emit(cfg: &RunConfig, text: String) -> Result<(), CliError> {
    match &cfg.out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            use std::io::Write;
            std::io::stdout().write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

fn fmt_opt(v: Option<f64>, prec: usize) -> String {
    match v {
        Some(v) => format!("{v:.prec$}"),
        None => String::new(),
    }
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct OutputRecord {
    n: u32,
    branch: Branch,
    nu: Option<f64>,
    e_exact: f64,
    e_approx: Option<f64>,
    method: &'static str,
    residual: f64,
}

/// Exact lines for the configured family/branch, in the per-branch
/// numbering.  Pseudo-spin spectra are the energy-negated spin-symmetric
/// spectra with swapped component roles.
fn exact_lines(cfg: &RunConfig) -> Result<Vec<SpectralLine>, SpectrumError> {
    match cfg.family {
        Family::Spinsym => spectrum::solve_spinsym_spectrum(cfg.v1, cfg.branch, cfg.n_max, &cfg.k),
        Family::Pseudospin => {
            if cfg.v1 <= 0.0 {
                return Err(SpectrumError::NoBoundStates);
            }
            let mirrored = match cfg.branch {
                Branch::A => Branch::B,
                Branch::B => Branch::A,
            };
            let lines = spectrum::solve_spinsym_spectrum(-cfg.v1, mirrored, cfg.n_max, &cfg.k)?;
            Ok(lines
                .into_iter()
                .map(|l| SpectralLine { branch: cfg.branch, e: -l.e, ..l })
                .collect())
        }
        Family::Electrostatic | Family::General => {
            spectrum::solve_electrostatic_spectrum(cfg.lambda, cfg.branch, cfg.n_max, &cfg.k)
        }
    }
}

fn residual_at(cfg: &RunConfig, line: &SpectralLine) -> f64 {
    match cfg.family {
        Family::Spinsym => line
            .nu
            .and_then(|nu| spectrum::quantization_residual_spinsym(nu, line.branch).ok())
            .unwrap_or(f64::NAN),
        Family::Pseudospin => {
            let mirrored = match line.branch {
                Branch::A => Branch::B,
                Branch::B => Branch::A,
            };
            line.nu
                .and_then(|nu| spectrum::quantization_residual_spinsym(nu, mirrored).ok())
                .unwrap_or(f64::NAN)
        }
        Family::Electrostatic | Family::General => {
            let v1 = model::v1_from_lambda(cfg.lambda, &cfg.k);
            spectrum::electrostatic_residual(line.e, v1, line.branch, &cfg.k).unwrap_or(f64::NAN)
        }
    }
}

fn approx_for(cfg: &RunConfig, line: &SpectralLine) -> Option<f64> {
    match cfg.family {
        Family::Spinsym => Some(spectrum::approx_energy_expansion(
            line.branch,
            line.n,
            cfg.lambda,
            &cfg.k,
        )),
        Family::Pseudospin => {
            let mirrored = match line.branch {
                Branch::A => Branch::B,
                Branch::B => Branch::A,
            };
            Some(-spectrum::approx_energy_expansion(mirrored, line.n, cfg.lambda, &cfg.k))
        }
        Family::Electrostatic | Family::General => {
            spectrum::approx_electrostatic_energy(line.n, cfg.lambda, line.branch, &cfg.k).primary
        }
    }
}

fn cmd_spectrum(cfg: &RunConfig) -> Result<(), CliError> {
    let lines = exact_lines(cfg)?;
    let records: Vec<OutputRecord> = lines
        .iter()
        .map(|l| OutputRecord {
            n: l.n,
            branch: l.branch,
            nu: l.nu,
            e_exact: l.e,
            e_approx: approx_for(cfg, l),
            method: l.method.as_str(),
            residual: residual_at(cfg, l),
        })
        .collect();
    let text = match cfg.format {
        Format::Csv => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "# family={} branch={} lambda={:.9} energies in units of mc^2={:.9}",
                cfg.family.as_str(),
                cfg.branch,
                cfg.lambda,
                cfg.k.mc2()
            );
            s.push_str("n,branch,nu,E_exact,E_approx,method,residual\n");
            for r in &records {
                let _ = writeln!(
                    s,
                    "{},{},{},{:.9},{},{},{:.3e}",
                    r.n,
                    r.branch,
                    fmt_opt(r.nu, 9),
                    r.e_exact,
                    fmt_opt(r.e_approx, 9),
                    r.method,
                    r.residual
                );
            }
            s
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&serde_json::json!({
                "family": cfg.family.as_str(),
                "branch": cfg.branch,
                "lambda": cfg.lambda,
                "mc2": cfg.k.mc2(),
                "records": records,
            }))
            .expect("serialization cannot fail");
            s.push('\n');
            s
        }
    };
    emit(cfg, text)
}

// ---------------------------------------------------------------------------
// tables
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct TableRow {
    n: u32,
    e_exact: f64,
    e_approx: Option<f64>,
    abs_dev: Option<f64>,
    note: &'static str,
}

fn cmd_tables(which: u8, cfg: &RunConfig) -> Result<(), CliError> {
    let k = &cfg.k;
    let lambda = cfg.lambda;
    let (title, rows): (String, Vec<TableRow>) = match which {
        1 | 2 => {
            let branch = if which == 1 { Branch::A } else { Branch::B };
            let v1 = model::v1_from_lambda(lambda, k);
            let lines = spectrum::solve_spinsym_spectrum(v1, branch, cfg.n_max, k)?;
            let rows = lines
                .iter()
                .map(|l| {
                    let a = spectrum::approx_energy_expansion(branch, l.n, lambda, k);
                    TableRow {
                        n: l.n,
                        e_exact: l.e,
                        e_approx: Some(a),
                        abs_dev: Some((a - l.e).abs()),
                        note: "",
                    }
                })
                .collect();
            (
                format!(
                    "table 1: spin-symmetric branch {branch}, exact vs second-order expansion, lambda={lambda:.6}"
                )
                .replacen("table 1", &format!("table {which}"), 1),
                rows,
            )
        }
        3 => {
            let lines = spectrum::solve_electrostatic_spectrum(lambda, Branch::A, cfg.n_max, k)?;
            let rows = lines
                .iter()
                .map(|l| {
                    let a = spectrum::approx_electrostatic_energy(l.n, lambda, Branch::A, k).primary;
                    TableRow {
                        n: l.n,
                        e_exact: l.e,
                        e_approx: a,
                        abs_dev: a.map(|a| (a - l.e).abs()),
                        note: "provenance=printed-formula-unreconciled",
                    }
                })
                .collect();
            (
                format!("table 3: electrostatic branch A, exact vs printed closed form, lambda={lambda:.6}"),
                rows,
            )
        }
        4 => {
            // exact levels of both electrostatic branches side by side;
            // reuse the row shape with branch B in the approx column
            let la = spectrum::solve_electrostatic_spectrum(lambda, Branch::A, cfg.n_max, k)?;
            let lb = spectrum::solve_electrostatic_spectrum(lambda, Branch::B, cfg.n_max, k)?;
            let rows = la
                .iter()
                .zip(lb.iter())
                .map(|(a, b)| TableRow {
                    n: a.n,
                    e_exact: a.e,
                    e_approx: Some(b.e),
                    abs_dev: None,
                    note: "columns: branch A exact, branch B exact",
                })
                .collect();
            (
                format!("table 4: electrostatic exact levels, branch A vs branch B, lambda={lambda:.6}"),
                rows,
            )
        }
        other => {
            return Err(CliError::Usage(format!(
                "tables: expected 1, 2, 3 or 4, got {other}"
            )));
        }
    };
    let text = match cfg.format {
        Format::Csv => {
            let mut s = String::new();
            let _ = writeln!(s, "# {title}");
            s.push_str("n,E_exact,E_approx,abs_dev,note\n");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{},{:.6},{},{},{}",
                    r.n,
                    r.e_exact,
                    fmt_opt(r.e_approx, 6),
                    fmt_opt(r.abs_dev, 6),
                    r.note
                );
            }
            s
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&serde_json::json!({
                "title": title,
                "rows": rows,
            }))
            .expect("serialization cannot fail");
            s.push('\n');
            s
        }
    };
    emit(cfg, text)
}

// ---------------------------------------------------------------------------
// figdata
// ---------------------------------------------------------------------------

fn cmd_figdata(which: u8, cfg: &RunConfig) -> Result<(), CliError> {
    match which {
        1 => {
            // quantization function in ratio form vs its oscillatory
            // approximation over ν ∈ [0.2, 8]
            let n = 600usize;
            let mut rows = Vec::with_capacity(n + 1);
            for i in 0..=n {
                let nu = 0.2 + (8.0 - 0.2) * i as f64 / n as f64;
                let r = spectrum::f_ratio_function(nu, cfg.branch)
                    .map_err(SpectrumError::from)?;
                rows.push((nu, r.exact, r.approx, r.pole));
            }
            let text = match cfg.format {
                Format::Csv => {
                    let mut s = String::new();
                    let _ = writeln!(s, "# quantization function vs approximation, branch {}", cfg.branch);
                    s.push_str("nu,exact,approx,pole\n");
                    for (nu, e, a, p) in &rows {
                        let _ = writeln!(s, "{nu:.6},{e:.9e},{a:.9e},{}", u8::from(*p));
                    }
                    s
                }
                Format::Json => {
                    let recs: Vec<_> = rows
                        .iter()
                        .map(|(nu, e, a, p)| {
                            serde_json::json!({"nu": nu, "exact": e, "approx": a, "pole": p})
                        })
                        .collect();
                    let mut s = serde_json::to_string_pretty(&serde_json::json!({
                        "branch": cfg.branch,
                        "records": recs,
                    }))
                    .expect("serialization cannot fail");
                    s.push('\n');
                    s
                }
            };
            emit(cfg, text)
        }
        2 => {
            // phase function f(E) with the rational approximation and the
            // integer gridline counter
            let mc2 = cfg.k.mc2();
            let ch = spectrum::phase_characteristics(cfg.lambda, cfg.branch);
            let a = (4.0 - 3.0 * std::f64::consts::PI) / (24.0 * std::f64::consts::PI);
            let b = 3.0 / 4.0;
            let n = 800usize;
            let mut rows = Vec::with_capacity(n - 1);
            for i in 1..n {
                let e = -mc2 + 2.0 * mc2 * i as f64 / n as f64;
                let f = spectrum::f_phase(e, cfg.lambda, cfg.branch, &cfg.k)
                    .map_err(SpectrumError::from)?;
                let eps = e / mc2;
                let nu = cfg.lambda * (1.0 - eps * eps).powf(-1.5);
                let f_approx = nu + ch.f_inf + a * cfg.lambda * cfg.lambda / (nu + b * cfg.lambda);
                rows.push((e, f, f_approx, f.floor()));
            }
            let text = match cfg.format {
                Format::Csv => {
                    let mut s = String::new();
                    let _ = writeln!(
                        s,
                        "# phase function, lambda={:.6} branch {}; f_min={:.6} f0={:.6} f_inf={:.6}",
                        cfg.lambda, cfg.branch, ch.f_min, ch.f0, ch.f_inf
                    );
                    s.push_str("E,f,f_approx,floor_f\n");
                    for (e, f, fa, fl) in &rows {
                        let _ = writeln!(s, "{e:.6},{f:.9},{fa:.9},{fl}");
                    }
                    s
                }
                Format::Json => {
                    let recs: Vec<_> = rows
                        .iter()
                        .map(|(e, f, fa, fl)| {
                            serde_json::json!({"E": e, "f": f, "f_approx": fa, "floor_f": fl})
                        })
                        .collect();
                    let mut s = serde_json::to_string_pretty(&serde_json::json!({
                        "lambda": cfg.lambda,
                        "branch": cfg.branch,
                        "f_min": ch.f_min,
                        "f0": ch.f0,
                        "f_inf": ch.f_inf,
                        "records": recs,
                    }))
                    .expect("serialization cannot fail");
                    s.push('\n');
                    s
                }
            };
            emit(cfg, text)
        }
        other => Err(CliError::Usage(format!(
            "figdata: expected 1 or 2, got {other}"
        ))),
    }
}

// ---------------------------------------------------------------------------
// wavefunction
// ---------------------------------------------------------------------------

fn bound_family(cfg: &RunConfig) -> BoundFamily {
    match cfg.family {
        Family::Spinsym => BoundFamily::SpinSym { v1: cfg.v1 },
        Family::Pseudospin => BoundFamily::PseudoSpin { v1: cfg.v1 },
        Family::Electrostatic | Family::General => BoundFamily::Electrostatic {
            v1: model::v1_from_lambda(cfg.lambda, &cfg.k),
        },
    }
}

fn cmd_wavefunction(
    cfg: &RunConfig,
    level: Option<u32>,
    points: Option<u32>,
    x_half: Option<f64>,
) -> Result<(), CliError> {
    let start = match (cfg.family, cfg.branch) {
        (Family::Spinsym, Branch::B) | (Family::Pseudospin, Branch::A) => 0,
        _ => 1,
    };
    let level = level.unwrap_or(start);
    if level < start {
        return Err(CliError::Usage(format!(
            "level {level} does not exist: this family/branch starts at {start}"
        )));
    }
    let mut sub = cfg.clone();
    sub.n_max = (level - start + 1).max(1);
    let lines = exact_lines(&sub)?;
    let line = lines
        .iter()
        .find(|l| l.n == level)
        .ok_or_else(|| CliError::Usage(format!("level {level} not found")))?;
    let state = wavefun::assemble_bound_state(
        bound_family(cfg),
        cfg.branch,
        line.e,
        &cfg.k,
        wavefun::CONTINUITY_TOL,
    )?;
    let points = points.unwrap_or(801).max(3) | 1; // force odd
    let half = x_half.unwrap_or_else(|| state.x_envelope());
    if half <= 0.0 {
        return Err(CliError::Usage("--x-max must be positive".to_string()));
    }
    let mut rows = Vec::with_capacity(points as usize);
    for i in 0..points {
        let x = -half + 2.0 * half * i as f64 / (points - 1) as f64;
        let s = state.sample(x)?;
        rows.push(s);
    }
    let text = match cfg.format {
        Format::Csv => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "# family={} branch={} level={} E={:.12} nu={:.12}",
                cfg.family.as_str(),
                cfg.branch,
                level,
                line.e,
                state.nu
            );
            s.push_str("x,re_psi_a,im_psi_a,re_psi_b,im_psi_b\n");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{:.6},{:.9e},{:.9e},{:.9e},{:.9e}",
                    r.x, r.psi_a.re, r.psi_a.im, r.psi_b.re, r.psi_b.im
                );
            }
            s
        }
        Format::Json => {
            let recs: Vec<_> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "x": r.x,
                        "re_psi_a": r.psi_a.re,
                        "im_psi_a": r.psi_a.im,
                        "re_psi_b": r.psi_b.re,
                        "im_psi_b": r.psi_b.im,
                    })
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&serde_json::json!({
                "family": cfg.family.as_str(),
                "branch": cfg.branch,
                "level": level,
                "E": line.e,
                "nu": state.nu,
                "records": recs,
            }))
            .expect("serialization cannot fail");
            s.push('\n');
            s
        }
    };
    emit(cfg, text)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn shooting_problem(cfg: &RunConfig) -> ShootingProblem {
    let (family, fields) = match cfg.family {
        Family::Spinsym => (OracleFamily::SpinSymmetric, OracleFields::spin_symmetric(cfg.v1)),
        Family::Pseudospin => (OracleFamily::PseudoSpin, OracleFields::pseudo_spin(cfg.v1)),
        Family::Electrostatic | Family::General => (
            OracleFamily::Electrostatic,
            OracleFields::electrostatic(model::v1_from_lambda(cfg.lambda, &cfg.k)),
        ),
    };
    ShootingProblem::new(family, cfg.branch, fields, cfg.k)
}

#[derive(Serialize)]
struct VerifyRow {
    n: u32,
    e_exact: f64,
    e_oracle: f64,
    abs_dev: f64,
    residual_exact: f64,
    det_oracle: f64,
}

#[derive(Serialize)]
struct Discrepancy {
    measurement: &'static str,
    key: String,
    value: f64,
    note: &'static str,
}

/// The reported-not-asserted measurements at the λ = 1 reference point: the
/// measured accuracy of the order approximation, the phase-integer offsets
/// at the exact electrostatic levels, and the reproduction status of the
/// printed positive-level closed form.
fn discrepancy_report(k: &PhysicalConstants) -> Result<Vec<Discrepancy>, SpectrumError> {
    let mut out = Vec::new();
    let roots = spectrum::solve_nu_roots(Branch::A, 7)?;
    for (i, &root) in roots.iter().enumerate() {
        let n = i as u32 + 1;
        let approx = spectrum::approx_nu(Branch::A, n);
        out.push(Discrepancy {
            measurement: "nu-approx-rel-error",
            key: format!("branch=A n={n}"),
            value: (approx - root).abs() / root,
            note: "claimed below 1e-4 for n >= 2; measured value reported as-is",
        });
    }
    for branch in [Branch::A, Branch::B] {
        let lines = spectrum::solve_electrostatic_spectrum(1.0, branch, 7, k)?;
        for l in &lines {
            let f = spectrum::f_phase(l.e, 1.0, branch, k)?;
            out.push(Discrepancy {
                measurement: "f-integer-offset",
                key: format!("branch={branch} n={}", l.n),
                value: f - f.round(),
                note: "offset of the phase function from the nearest integer at an exact level",
            });
        }
    }
    let lines = spectrum::solve_electrostatic_spectrum(1.0, Branch::A, 7, k)?;
    for l in &lines {
        if let Some(a) = spectrum::approx_electrostatic_energy(l.n, 1.0, Branch::A, k).primary {
            out.push(Discrepancy {
                measurement: "table3-approx-deviation",
                key: format!("branch=A n={}", l.n),
                value: (a - l.e).abs(),
                note: "provenance=printed-formula-unreconciled",
            });
        }
    }
    Ok(out)
}

fn cmd_verify(cfg: &RunConfig) -> Result<i32, CliError> {
    let exact = exact_lines(cfg)?;
    let problem = shooting_problem(cfg);
    let oracle_spec = oracle::find_eigenvalues(&problem, cfg.n_max)?;
    let mc2 = cfg.k.mc2();
    let mut rows = Vec::new();
    let mut all_ok = true;
    for (e_line, o_line) in exact.iter().zip(oracle_spec.lines.iter()) {
        let dev = (e_line.e - o_line.e).abs();
        if dev > 1e-4 * mc2 {
            all_ok = false;
        }
        let det = oracle::integrate_halfline(&problem, o_line.e)?.det;
        rows.push(VerifyRow {
            n: e_line.n,
            e_exact: e_line.e,
            e_oracle: o_line.e,
            abs_dev: dev,
            residual_exact: residual_at(cfg, e_line),
            det_oracle: det,
        });
    }
    if oracle_spec.lines.len() < exact.len() {
        all_ok = false;
    }
    let disc = discrepancy_report(&PhysicalConstants { m: 1.0, hbar: 1.0, c: 1.0 })?;
    let text = match cfg.format {
        Format::Csv => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "# spectrum-vs-oracle family={} branch={} lambda={:.9}",
                cfg.family.as_str(),
                cfg.branch,
                cfg.lambda
            );
            s.push_str("n,E_exact,E_oracle,abs_dev,residual_exact,det_oracle\n");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{},{:.9},{:.9},{:.3e},{:.3e},{:.3e}",
                    r.n, r.e_exact, r.e_oracle, r.abs_dev, r.residual_exact, r.det_oracle
                );
            }
            for w in &oracle_spec.warnings {
                let _ = writeln!(s, "# warning: {w}");
            }
            s.push_str("# discrepancy-report (reported, not asserted; lambda=1 reference)\n");
            s.push_str("measurement,key,value,note\n");
            for d in &disc {
                let _ = writeln!(s, "{},{},{:.6e},{}", d.measurement, d.key, d.value, d.note);
            }
            s
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&serde_json::json!({
                "family": cfg.family.as_str(),
                "branch": cfg.branch,
                "lambda": cfg.lambda,
                "levels": rows,
                "warnings": oracle_spec.warnings,
                "discrepancy_report": disc,
            }))
            .expect("serialization cannot fail");
            s.push('\n');
            s
        }
    };
    emit(cfg, text)?;
    Ok(if all_ok { EXIT_OK } else { EXIT_CONVERGENCE })
}

// ---------------------------------------------------------------------------
// entry point
// ---------------------------------------------------------------------------

/// Parse the command line, run the requested subcommand, and return the
/// process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are successes, everything else is usage
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    let outcome: Result<i32, CliError> = (|| {
        match &cli.cmd {
            Cmd::Spectrum(common) => {
                let cfg = resolve(common)?;
                cmd_spectrum(&cfg)?;
                Ok(EXIT_OK)
            }
            Cmd::Tables { which, common } => {
                let cfg = resolve(common)?;
                cmd_tables(*which, &cfg)?;
                Ok(EXIT_OK)
            }
            Cmd::Figdata { which, common } => {
                let cfg = resolve(common)?;
                cmd_figdata(*which, &cfg)?;
                Ok(EXIT_OK)
            }
            Cmd::Wavefunction { level, points, x_max, common } => {
                let cfg = resolve(common)?;
                cmd_wavefunction(&cfg, *level, *points, *x_max)?;
                Ok(EXIT_OK)
            }
            Cmd::Verify(common) => {
                let cfg = resolve(common)?;
                cmd_verify(&cfg)
            }
        }
    })();
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
