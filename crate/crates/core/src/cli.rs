// SPDX-License-Identifier: Apache-2.0

//! The `dyson` command line: `verify`, `spectrum` and `potential`.
//!
//! Settings resolve as flag, then `--config` file (`key = value` lines),
//! then built-in default. `DYSON_THREADS` caps the worker pool. Exit codes
//! are 0 on success, 1 when a check fails or a time point cannot be
//! evaluated, and 2 on usage or configuration errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use crate::coefficients::{coefficient_set, couplings_from_sigma, doublewell_coefficients, potential_eval, Potential};
use crate::error::Error;
use crate::fmt_f64;
use crate::gridref::{fd_doublewell_auto, write_grid_csv, Grid};
use crate::operators::Basis;
use crate::profiles::{parse_profile, polynomial_profile, TimeProfile};
use crate::spectra::{default_omega_sweep, write_spectrum_csv, OmegaChoice};
use crate::verify::{
    error_report, operator_spectrum, verify_bch, verify_bch_exact, verify_constraint, verify_dyson_residual,
    verify_gauge_forms, verify_spectral_equivalence, verify_transcription, DysonOptions, SpectralOptions,
    VerificationReport, Which,
};

/// Truncation used by the suites that need η itself.
pub const ETA_DIM: usize = 48;

#[derive(Parser, Debug)]
#[command(name = "dyson", version, about = "Spectral-equivalence toolkit for the time-dependent unstable anharmonic oscillator")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Run verification suites over a time grid and write a report.
    Verify(Flags),
    /// Write converged low-lying levels of one operator over a time grid.
    Spectrum(Flags),
    /// Write V(z,t) and/or Ṽ(y,t) curves.
    Potential(Flags),
}

#[derive(Args, Debug, Default)]
struct Flags {
    /// key = value settings file; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    /// σ(t) expression, e.g. "cosh(t)".
    #[arg(long)]
    profile: Option<String>,
    /// Quadratic profile κ₀,κ₁,κ₂.
    #[arg(long, allow_hyphen_values = true)]
    poly: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c2: Option<String>,
    /// Single time.
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    /// start:stop:step, inclusive.
    #[arg(long = "t-grid", allow_hyphen_values = true)]
    t_grid: Option<String>,
    /// Basis size N (spectra use N and 2N).
    #[arg(long)]
    n: Option<String>,
    /// Basis scale ω, or "auto" for the sweep.
    #[arg(long)]
    omega: Option<String>,
    #[arg(long)]
    levels: Option<String>,
    #[arg(long)]
    tol: Option<String>,
    #[arg(long)]
    out: Option<String>,
    /// verify: suites; spectrum: operator; potential: curve family.
    #[arg(long)]
    which: Option<String>,
    /// Coordinate range start:stop:step for `potential`.
    #[arg(long, allow_hyphen_values = true)]
    range: Option<String>,
}

const KEYS: [&str; 14] = [
    "profile", "poly", "c1", "c2", "t", "t-grid", "n", "omega", "levels", "tol", "out", "which", "range", "config",
];

impl Flags {
    fn get(&self, key: &str) -> Option<String> {
        match key {
            "profile" => self.profile.clone(),
            "poly" => self.poly.clone(),
            "c1" => self.c1.clone(),
            "c2" => self.c2.clone(),
            "t" => self.t.clone(),
            "t-grid" => self.t_grid.clone(),
            "n" => self.n.clone(),
            "omega" => self.omega.clone(),
            "levels" => self.levels.clone(),
            "tol" => self.tol.clone(),
            "out" => self.out.clone(),
            "which" => self.which.clone(),
            "range" => self.range.clone(),
            _ => None,
        }
    }
}

/// Usage or configuration problem; maps to exit code 2.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn cfg_err<T>(msg: impl Into<String>) -> Result<T, ConfigError> {
    Err(ConfigError(msg.into()))
}

/// Parse `key = value` lines; `#` starts a comment, values may be quoted.
pub fn parse_config_file(text: &str) -> Result<BTreeMap<String, String>, ConfigError> {
    let mut out = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return cfg_err(format!("config line {}: expected key = value", lineno + 1));
        };
        let mut key = k.trim().replace('_', "-");
        if key == "profile.poly" {
            key = "poly".into();
        }
        if !KEYS.contains(&key.as_str()) || key == "config" {
            return cfg_err(format!("config line {}: unknown key '{}'", lineno + 1, k.trim()));
        }
        let v = v.trim();
        let v = v.strip_prefix('"').and_then(|s| s.strip_suffix('"')).unwrap_or(v);
        let v = v.strip_prefix('[').and_then(|s| s.strip_suffix(']')).unwrap_or(v);
        out.insert(key, v.trim().to_string());
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Verify,
    Spectrum,
    Potential,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Constraint,
    Transcription,
    Bch,
    Dyson,
    Gauge,
    Spectral,
}

impl Suite {
    const ALL: [Suite; 6] =
        [Suite::Constraint, Suite::Transcription, Suite::Bch, Suite::Dyson, Suite::Gauge, Suite::Spectral];

    fn parse(s: &str) -> Option<Suite> {
        Some(match s {
            "constraint" => Suite::Constraint,
            "transcription" => Suite::Transcription,
            "bch" => Suite::Bch,
            "dyson" => Suite::Dyson,
            "gauge" => Suite::Gauge,
            "spectral" => Suite::Spectral,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Curves {
    Anharmonic,
    Doublewell,
    Both,
}

/// Fully resolved settings for one run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub profile: TimeProfile,
    pub c1: f64,
    pub c2: f64,
    pub times: Vec<f64>,
    pub n: usize,
    /// `None` selects the ω sweep.
    pub omega: Option<f64>,
    pub levels: usize,
    pub tol: f64,
    pub out: Option<PathBuf>,
    pub suites: Vec<Suite>,
    pub spectrum_of: Option<Which>,
    pub grid_spectrum: bool,
    pub curves: Curves,
    pub range: Vec<f64>,
}

/// Inclusive `start:stop:step` grid, evaluated without accumulation.
pub fn parse_grid(s: &str) -> Result<Vec<f64>, ConfigError> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return cfg_err(format!("grid '{s}' must be start:stop:step"));
    }
    let v: Vec<f64> = parts
        .iter()
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| ConfigError(format!("grid '{s}' has a non-numeric field")))?;
    let (a, b, h) = (v[0], v[1], v[2]);
    if !(a.is_finite() && b.is_finite() && h.is_finite()) || h <= 0.0 {
        return cfg_err(format!("grid '{s}' needs finite bounds and a positive step"));
    }
    if b < a {
        return cfg_err(format!("grid '{s}' is empty"));
    }
    let count = ((b - a) / h + 1e-9).floor() as usize + 1;
    if count > 1_000_000 {
        return cfg_err(format!("grid '{s}' has too many points"));
    }
    Ok((0..count).map(|i| a + i as f64 * h).collect())
}

fn num<T: std::str::FromStr>(key: &str, v: &str) -> Result<T, ConfigError> {
    v.trim().parse().map_err(|_| ConfigError(format!("invalid value '{v}' for {key}")))
}

fn resolve(command: Command, flags: &Flags) -> Result<RunConfig, ConfigError> {
    let file = match &flags.config {
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| ConfigError(format!("cannot read {}: {e}", p.display())))?;
            parse_config_file(&text)?
        }
        None => BTreeMap::new(),
    };
    let get = |k: &str| flags.get(k).or_else(|| file.get(k).cloned());

    // A flag-level profile choice overrides either kind from the file.
    let (expr, poly) = if flags.profile.is_some() || flags.poly.is_some() {
        (flags.profile.clone(), flags.poly.clone())
    } else {
        (file.get("profile").cloned(), file.get("poly").cloned())
    };
    let profile = match (expr, poly) {
        (Some(_), Some(_)) => return cfg_err("give either a profile expression or --poly, not both"),
        (Some(e), None) => parse_profile(&e).map_err(|e| ConfigError(format!("profile: {e}")))?,
        (None, Some(p)) => {
            let k: Vec<f64> = p.split(',').map(|s| num("poly", s)).collect::<Result<_, _>>()?;
            if k.len() != 3 {
                return cfg_err("poly needs exactly three coefficients κ0,κ1,κ2");
            }
            polynomial_profile(k[0], k[1], k[2])
        }
        (None, None) => return cfg_err("missing profile: pass --profile EXPR or --poly K0,K1,K2"),
    };

    let c1 = get("c1").map(|v| num("c1", &v)).transpose()?.unwrap_or(0.0);
    let c2 = get("c2").map(|v| num("c2", &v)).transpose()?.unwrap_or(0.0);

    let times = match (flags.t.clone(), flags.t_grid.clone()) {
        (Some(_), Some(_)) => return cfg_err("give either --t or --t-grid, not both"),
        (Some(t), None) => vec![num("t", &t)?],
        (None, Some(g)) => parse_grid(&g)?,
        (None, None) => match (file.get("t"), file.get("t-grid")) {
            (Some(_), Some(_)) => return cfg_err("config sets both t and t-grid"),
            (Some(t), None) => vec![num("t", t)?],
            (None, Some(g)) => parse_grid(g)?,
            (None, None) => vec![1.0],
        },
    };

    let n: usize = get("n").map(|v| num("n", &v)).transpose()?.unwrap_or(256);
    if !(8..=512).contains(&n) {
        return cfg_err(format!("n = {n} outside [8, 512] (spectra also use 2N ≤ 1024)"));
    }
    let omega = match get("omega") {
        None => None,
        Some(v) if v.trim() == "auto" => None,
        Some(v) => {
            let w: f64 = num("omega", &v)?;
            if !(w > 0.0 && w.is_finite()) {
                return cfg_err("omega must be positive");
            }
            Some(w)
        }
    };
    let levels: usize = get("levels").map(|v| num("levels", &v)).transpose()?.unwrap_or(5);
    if levels == 0 || levels > n {
        return cfg_err(format!("levels = {levels} must be in [1, n]"));
    }
    let tol: f64 = get("tol").map(|v| num("tol", &v)).transpose()?.unwrap_or(1e-5);
    if !(tol > 0.0) {
        return cfg_err("tol must be positive");
    }
    let out = get("out").map(PathBuf::from);
    let which = get("which");

    let mut cfg = RunConfig {
        command,
        profile,
        c1,
        c2,
        times,
        n,
        omega,
        levels,
        tol,
        out,
        suites: Suite::ALL.to_vec(),
        spectrum_of: Some(Which::H),
        grid_spectrum: false,
        curves: Curves::Both,
        range: parse_grid(&get("range").unwrap_or_else(|| "-4:4:0.01".into()))?,
    };
    match command {
        Command::Verify => {
            if let Some(w) = which.filter(|w| w != "all") {
                cfg.suites = w
                    .split(',')
                    .map(|s| Suite::parse(s.trim()).ok_or_else(|| ConfigError(format!("unknown suite '{s}'"))))
                    .collect::<Result<_, _>>()?;
            }
        }
        Command::Spectrum => match which.as_deref().unwrap_or("h") {
            "h" => cfg.spectrum_of = Some(Which::H),
            "hhat" => cfg.spectrum_of = Some(Which::Hhat),
            "htilde" => cfg.spectrum_of = Some(Which::Htilde),
            "energy-op" => cfg.spectrum_of = Some(Which::Energy),
            "gridref" => {
                cfg.spectrum_of = None;
                cfg.grid_spectrum = true;
            }
            other => return cfg_err(format!("unknown operator '{other}' (h|hhat|htilde|energy-op|gridref)")),
        },
        Command::Potential => {
            cfg.curves = match which.as_deref().unwrap_or("both") {
                "anharmonic-z" => Curves::Anharmonic,
                "doublewell-y" => Curves::Doublewell,
                "both" => Curves::Both,
                other => return cfg_err(format!("unknown curve '{other}' (anharmonic-z|doublewell-y|both)")),
            }
        }
    }
    Ok(cfg)
}

fn thread_pool() -> Result<rayon::ThreadPool, ConfigError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("DYSON_THREADS") {
        let n: usize = num("DYSON_THREADS", &v)?;
        if n == 0 {
            return cfg_err("DYSON_THREADS must be at least 1");
        }
        b = b.num_threads(n);
    }
    b.build().map_err(|e| ConfigError(format!("thread pool: {e}")))
}

fn spectral_options(cfg: &RunConfig) -> SpectralOptions {
    let mut o = SpectralOptions { levels: cfg.levels, n: cfg.n, tol_htilde: cfg.tol, tol_energy: cfg.tol, ..Default::default() };
    match cfg.omega {
        Some(w) => {
            o.omega = OmegaChoice::Fixed;
            o.fixed_omega = w;
        }
        None => o.omega = OmegaChoice::Sweep(default_omega_sweep()),
    }
    o
}

fn run_suites(cfg: &RunConfig, t: f64) -> Vec<VerificationReport> {
    let eta_basis = Basis::new(ETA_DIM, cfg.omega.unwrap_or(1.0)).expect("fixed basis is valid");
    let mut out = Vec::new();
    for s in &cfg.suites {
        let r = match s {
            Suite::Constraint => Ok(verify_constraint(&cfg.profile, &[t], cfg.c2)),
            Suite::Transcription => verify_transcription(&cfg.profile, t),
            Suite::Bch => coefficient_set(&cfg.profile, t, cfg.c1, cfg.c2).and_then(|cs| {
                let exact = verify_bch_exact(&cs.dyson, 1e-12)?;
                out.push(exact);
                verify_bch(&cs.dyson, &eta_basis, 1e-7)
            }),
            Suite::Dyson => {
                let opts = DysonOptions { k: ETA_DIM / 2, tol: cfg.tol, ..DysonOptions::for_basis(&eta_basis) };
                verify_dyson_residual(&cfg.profile, t, cfg.c1, cfg.c2, &eta_basis, &opts)
            }
            Suite::Gauge => verify_gauge_forms(&cfg.profile, t, cfg.c1, cfg.c2, &eta_basis, cfg.tol),
            Suite::Spectral => {
                verify_spectral_equivalence(&cfg.profile, t, cfg.c1, cfg.c2, &spectral_options(cfg)).map(|(r, _)| r)
            }
        };
        let name = format!("{s:?}").to_lowercase();
        out.push(r.unwrap_or_else(|e| error_report(&name, Some(t), None, &e)));
    }
    out
}

enum Sink<'a> {
    File(PathBuf),
    Stdout(&'a mut Vec<u8>),
}

fn emit(sink: Sink<'_>, bytes: &[u8]) -> io::Result<()> {
    match sink {
        Sink::File(p) => fs::write(p, bytes),
        Sink::Stdout(w) => w.write_all(bytes),
    }
}

fn cmd_verify(cfg: &RunConfig, stdout: &mut Vec<u8>, stderr: &mut Vec<u8>) -> io::Result<i32> {
    let reports: Vec<Vec<VerificationReport>> = cfg.times.par_iter().map(|&t| run_suites(cfg, t)).collect();
    let reports: Vec<VerificationReport> = reports.into_iter().flatten().collect();
    let mut csv = Vec::new();
    writeln!(csv, "{}", VerificationReport::csv_header())?;
    for r in &reports {
        r.write_csv_rows(&mut csv)?;
    }
    let text: String = reports.iter().map(|r| r.to_string()).collect();
    let pass = reports.iter().all(|r| r.pass());
    match &cfg.out {
        Some(p) => {
            emit(Sink::File(p.clone()), &csv)?;
            write!(stdout, "{text}")?;
        }
        None => {
            emit(Sink::Stdout(stdout), &csv)?;
            write!(stderr, "{text}")?;
        }
    }
    writeln!(stderr, "overall: {}", if pass { "PASS" } else { "FAIL" })?;
    Ok(if pass { 0 } else { 1 })
}

fn cmd_spectrum(cfg: &RunConfig, stdout: &mut Vec<u8>, stderr: &mut Vec<u8>) -> io::Result<i32> {
    let opts = spectral_options(cfg);
    let mut failures = Vec::new();
    let mut csv = Vec::new();
    if cfg.grid_spectrum {
        let rows: Vec<(f64, Result<_, Error>)> = cfg
            .times
            .par_iter()
            .map(|&t| {
                let r = cfg
                    .profile
                    .eval_jet(t, 4)
                    .and_then(|j| doublewell_coefficients(&j, cfg.c1, cfg.c2))
                    .and_then(|pp| fd_doublewell_auto(&pp, &Grid::default(), cfg.levels));
                (t, r)
            })
            .collect();
        let mut ok = Vec::new();
        for (t, r) in rows {
            match r {
                Ok(s) => ok.push((t, s)),
                Err(e) => failures.push(format!("t={t}: {e}")),
            }
        }
        write_grid_csv(&mut csv, &ok, cfg.tol)?;
    } else {
        let which = cfg.spectrum_of.expect("operator selected");
        let rows: Vec<(f64, Result<_, Error>)> = cfg
            .times
            .par_iter()
            .map(|&t| (t, coefficient_set(&cfg.profile, t, cfg.c1, cfg.c2).and_then(|cs| operator_spectrum(&cs, which, &opts))))
            .collect();
        let mut ok = Vec::new();
        for (t, r) in rows {
            match r {
                Ok(s) => ok.push((t, s)),
                Err(e) => failures.push(format!("t={t}: {e}")),
            }
        }
        write_spectrum_csv(&mut csv, &ok)?;
    }
    match &cfg.out {
        Some(p) => emit(Sink::File(p.clone()), &csv)?,
        None => emit(Sink::Stdout(stdout), &csv)?,
    }
    for f in &failures {
        writeln!(stderr, "error: {f}")?;
    }
    Ok(if failures.is_empty() { 0 } else { 1 })
}

fn cmd_potential(cfg: &RunConfig, stdout: &mut Vec<u8>, stderr: &mut Vec<u8>) -> io::Result<i32> {
    let mut failures = Vec::new();
    let mut csv = Vec::new();
    writeln!(csv, "curve,t,coordinate,v")?;
    let mut times = cfg.times.clone();
    times.sort_by(f64::total_cmp);
    for family in [Curves::Anharmonic, Curves::Doublewell] {
        if cfg.curves != Curves::Both && cfg.curves != family {
            continue;
        }
        for &t in &times {
            let jet = cfg.profile.eval_jet(t, 4);
            let curve = match family {
                Curves::Anharmonic => jet.and_then(|j| couplings_from_sigma(&j, cfg.c2)).map(|c| {
                    cfg.range.iter().map(|&z| (z, potential_eval(Potential::AnharmonicZ(&c), z))).collect::<Vec<_>>()
                }),
                _ => jet.and_then(|j| doublewell_coefficients(&j, cfg.c1, cfg.c2)).map(|p| {
                    cfg.range.iter().map(|&y| (y, potential_eval(Potential::DoublewellY(&p), y))).collect()
                }),
            };
            let label = if family == Curves::Anharmonic { "anharmonic-z" } else { "doublewell-y" };
            match curve {
                Ok(points) => {
                    for (q, v) in points {
                        writeln!(csv, "{label},{},{},{}", fmt_f64(t), fmt_f64(q), fmt_f64(v))?;
                    }
                }
                Err(e) => failures.push(format!("{label} t={t}: {e}")),
            }
        }
    }
    match &cfg.out {
        Some(p) => emit(Sink::File(p.clone()), &csv)?,
        None => emit(Sink::Stdout(stdout), &csv)?,
    }
    for f in &failures {
        writeln!(stderr, "error: {f}")?;
    }
    Ok(if failures.is_empty() { 0 } else { 1 })
}

/// Entry point shared by the binary and the tests; returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    2
                }
            };
            return code;
        }
    };
    let (command, flags) = match &cli.cmd {
        Cmd::Verify(f) => (Command::Verify, f),
        Cmd::Spectrum(f) => (Command::Spectrum, f),
        Cmd::Potential(f) => (Command::Potential, f),
    };
    let cfg = match resolve(command, flags) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}\n\nUsage: dyson <verify|spectrum|potential> --profile EXPR [options]");
            return 2;
        }
    };
    let pool = match thread_pool() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    let (mut out_buf, mut err_buf) = (Vec::new(), Vec::new());
    let result = pool.install(|| match command {
        Command::Verify => cmd_verify(&cfg, &mut out_buf, &mut err_buf),
        Command::Spectrum => cmd_spectrum(&cfg, &mut out_buf, &mut err_buf),
        Command::Potential => cmd_potential(&cfg, &mut out_buf, &mut err_buf),
    });
    let result = result.and_then(|code| {
        stdout.write_all(&out_buf)?;
        stderr.write_all(&err_buf)?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: cannot write output: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        assert_eq!(parse_grid("0.5:2.0:0.5").unwrap(), vec![0.5, 1.0, 1.5, 2.0]);
        assert_eq!(parse_grid("1:1:0.1").unwrap(), vec![1.0]);
        assert_eq!(parse_grid("0.5:3.0:0.25").unwrap().len(), 11);
        assert!(parse_grid("2:1:0.1").is_err());
        assert!(parse_grid("0:1:0").is_err());
        assert!(parse_grid("0:1").is_err());
        assert!(parse_grid("a:1:0.1").is_err());
    }

    #[test]
    fn config_file_syntax() {
        let m = parse_config_file("# run\nprofile = \"cosh(t)\"\nprofile.poly = [1, 0, 1]\nt_grid = 0.5:1:0.5\n").unwrap();
        assert_eq!(m["profile"], "cosh(t)");
        assert_eq!(m["poly"], "1, 0, 1");
        assert_eq!(m["t-grid"], "0.5:1:0.5");
        assert!(parse_config_file("bogus = 1").is_err());
        assert!(parse_config_file("no equals sign").is_err());
    }

    #[test]
    fn flags_override_file() {
        let dir = std::env::temp_dir().join(format!("dyson-cli-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("run.cfg");
        fs::write(&path, "profile = cosh(t)\nn = 64\nlevels = 3\nc2 = 0.25\n").unwrap();
        let flags = Flags { config: Some(path), n: Some("32".into()), ..Default::default() };
        let cfg = resolve(Command::Spectrum, &flags).unwrap();
        assert_eq!(cfg.n, 32);
        assert_eq!(cfg.levels, 3);
        assert_eq!(cfg.c2, 0.25);
        assert_eq!(cfg.times, vec![1.0]);
        assert_eq!(cfg.c1, 0.0);
    }

    #[test]
    fn missing_profile_is_config_error() {
        assert!(resolve(Command::Verify, &Flags::default()).is_err());
    }
}
