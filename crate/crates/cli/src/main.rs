//! `orbit`: generate elements, run the invariant suites, compute orbit
//! points and evaluate the symplectic forms.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on usage or parse
//! errors.

mod report;
mod suite;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use orbit_core::coadjoint::{orbit_point, symplecto_check};
use orbit_core::kernel::rng_from_seed;
use orbit_core::siegel::random_point;
use orbit_core::symplectic::{
    random_sp_algebra, random_symplectic, SpAlgebraElement, SymplecticElement,
};

use report::Report;
use suite::{SuiteConfig, SuiteId};

#[derive(Parser)]
#[command(
    name = "orbit",
    version,
    about = "Numerics for the restricted symplectic group, the Siegel disc and its coadjoint-orbit model"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Truncation dimension of each polarized summand.
    #[arg(long, default_value_t = 4)]
    n: usize,

    /// Central parameter of the orbit.
    #[arg(long, default_value_t = 1.0)]
    gamma: f64,

    /// RNG seed; falls back to the ORBIT_SEED environment variable.
    #[arg(long, env = "ORBIT_SEED", default_value_t = 42)]
    seed: u64,

    /// Randomized trials per check.
    #[arg(long, default_value_t = 100)]
    trials: usize,

    /// Tolerance overrides, `--tol <check-name>=<value>` (also accepted as
    /// `--tol.<check-name> <value>`).
    #[arg(long = "tol", value_name = "NAME=VALUE")]
    tol: Vec<String>,

    /// Write output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random element and emit it as JSON.
    Gen {
        #[command(flatten)]
        common: CommonOpts,
        /// What to generate.
        #[arg(long, value_enum)]
        kind: GenKind,
    },
    /// Run randomized invariant suites and write a JSON report.
    Check {
        #[command(flatten)]
        common: CommonOpts,
        /// Which suite to run.
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Corrupt one designated check to demonstrate failure reporting.
        #[arg(long, default_value_t = false)]
        inject_violation: bool,
    },
    /// Map a symplectic element to its orbit point `(-gamma sigma(a), gamma)`.
    Orbit {
        #[command(flatten)]
        common: CommonOpts,
        /// JSON file holding the symplectic element.
        element_file: PathBuf,
    },
    /// Evaluate the disc and orbit two-forms on a pair of algebra elements.
    Forms {
        #[command(flatten)]
        common: CommonOpts,
        /// JSON file holding the first algebra element.
        a_file: PathBuf,
        /// JSON file holding the second algebra element.
        b_file: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    SpAlgebra,
    Symplectic,
    SiegelPoint,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Polarized,
    Symplectic,
    Siegel,
    Coadjoint,
    All,
}

impl SuiteArg {
    fn ids(self) -> Vec<SuiteId> {
        match self {
            SuiteArg::Polarized => vec![SuiteId::Polarized],
            SuiteArg::Symplectic => vec![SuiteId::Symplectic],
            SuiteArg::Siegel => vec![SuiteId::Siegel],
            SuiteArg::Coadjoint => vec![SuiteId::Coadjoint],
            SuiteArg::All => vec![
                SuiteId::Polarized,
                SuiteId::Symplectic,
                SuiteId::Siegel,
                SuiteId::Coadjoint,
            ],
        }
    }

    fn name(self) -> &'static str {
        match self {
            SuiteArg::Polarized => "polarized",
            SuiteArg::Symplectic => "symplectic",
            SuiteArg::Siegel => "siegel",
            SuiteArg::Coadjoint => "coadjoint",
            SuiteArg::All => "all",
        }
    }
}

fn fail_usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

/// Rewrites `--tol.name value` / `--tol.name=value` into `--tol name=value`
/// so the spelled-out flag form works alongside clap's static parser.
fn normalize_args() -> Vec<String> {
    let mut out = Vec::new();
    let mut args = std::env::args().peekable();
    while let Some(arg) = args.next() {
        if let Some(rest) = arg.strip_prefix("--tol.") {
            if let Some((name, value)) = rest.split_once('=') {
                out.push("--tol".into());
                out.push(format!("{name}={value}"));
            } else if let Some(value) = args.next() {
                out.push("--tol".into());
                out.push(format!("{rest}={value}"));
            } else {
                out.push("--tol".into());
                out.push(rest.to_string());
            }
        } else {
            out.push(arg);
        }
    }
    out
}

fn parse_tol_overrides(pairs: &[String]) -> Result<BTreeMap<String, f64>, String> {
    let mut map = BTreeMap::new();
    for pair in pairs {
        let (name, value) = pair
            .split_once('=')
            .ok_or_else(|| format!("tolerance override '{pair}' is not of the form name=value"))?;
        let value: f64 = value
            .parse()
            .map_err(|_| format!("tolerance override '{pair}' has a non-numeric value"))?;
        if !(value.is_finite() && value > 0.0) {
            return Err(format!(
                "tolerance override '{pair}' must be positive and finite"
            ));
        }
        map.insert(name.to_string(), value);
    }
    Ok(map)
}

fn emit(out: &Option<PathBuf>, payload: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, payload),
        None => {
            println!("{}", payload.trim_end());
            Ok(())
        }
    }
}

fn to_pretty<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON serialization cannot fail");
    s.push('\n');
    s
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("cannot parse {}: {e}", path.display()))
}

fn run_gen(common: &CommonOpts, kind: GenKind) -> ExitCode {
    if common.n == 0 {
        return fail_usage("--n must be at least 1");
    }
    let mut rng = rng_from_seed(common.seed);
    let scale = 0.5 / (common.n as f64).sqrt();
    let payload = match kind {
        GenKind::SpAlgebra => to_pretty(&random_sp_algebra(common.n, scale, &mut rng)),
        GenKind::Symplectic => to_pretty(&random_symplectic(common.n, scale, &mut rng)),
        GenKind::SiegelPoint => to_pretty(&random_point(common.n, &mut rng)),
    };
    match emit(&common.out, &payload) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail_usage(&format!("cannot write output: {e}")),
    }
}

fn run_check(common: &CommonOpts, suite: SuiteArg, inject_violation: bool) -> ExitCode {
    if common.n == 0 || common.trials == 0 {
        return fail_usage("--n and --trials must be at least 1");
    }
    let overrides = match parse_tol_overrides(&common.tol) {
        Ok(map) => map,
        Err(msg) => return fail_usage(&msg),
    };
    let ids = suite.ids();
    let known: Vec<&'static str> = ids.iter().flat_map(|id| suite::check_names(*id)).collect();
    for name in overrides.keys() {
        if !known.contains(&name.as_str()) {
            return fail_usage(&format!(
                "unknown tolerance override '{name}'; known checks: {}",
                known.join(", ")
            ));
        }
    }

    let config = SuiteConfig {
        n: common.n,
        gamma: common.gamma,
        seed: common.seed,
        trials: common.trials,
        inject_violation,
        tol_overrides: overrides,
    };

    let mut checks = Vec::new();
    for id in ids {
        checks.extend(suite::run_suite(id, &config));
    }
    let report = Report::new(suite.name(), &config, checks);
    let payload = to_pretty(&report);
    if let Err(e) = emit(&common.out, &payload) {
        return fail_usage(&format!("cannot write report: {e}"));
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        for failed in report.failed_checks() {
            eprintln!(
                "check failed: {} (max residual {:.3e} > tolerance {:.3e})",
                failed.name, failed.max_residual, failed.tolerance
            );
        }
        ExitCode::from(1)
    }
}

fn run_orbit(common: &CommonOpts, element_file: &PathBuf) -> ExitCode {
    if common.gamma == 0.0 {
        return fail_usage("--gamma must be nonzero for orbit commands");
    }
    let element: SymplecticElement = match read_json(element_file) {
        Ok(e) => e,
        Err(msg) => return fail_usage(&msg),
    };
    let point = match orbit_point(&element, common.gamma) {
        Ok(p) => p,
        Err(e) => return fail_usage(&format!("cannot compute orbit point: {e}")),
    };
    match emit(&common.out, &to_pretty(&point)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail_usage(&format!("cannot write output: {e}")),
    }
}

#[derive(serde::Serialize)]
struct FormsOutput {
    omega_d: f64,
    omega_hat: f64,
    kks: f64,
    ratio: Option<f64>,
    residual: f64,
    degenerate: bool,
    gamma: f64,
}

fn run_forms(common: &CommonOpts, a_file: &PathBuf, b_file: &PathBuf) -> ExitCode {
    if common.gamma == 0.0 {
        return fail_usage("--gamma must be nonzero for form evaluation");
    }
    let a: SpAlgebraElement = match read_json(a_file) {
        Ok(e) => e,
        Err(msg) => return fail_usage(&msg),
    };
    let b: SpAlgebraElement = match read_json(b_file) {
        Ok(e) => e,
        Err(msg) => return fail_usage(&msg),
    };
    let chk = match symplecto_check(&a, &b, common.gamma) {
        Ok(c) => c,
        Err(e) => return fail_usage(&format!("cannot evaluate forms: {e}")),
    };
    let out = FormsOutput {
        omega_d: chk.omega_d,
        omega_hat: chk.omega_hat,
        kks: chk.kks,
        ratio: chk.ratio,
        residual: chk.residual,
        degenerate: !chk.conclusive,
        gamma: common.gamma,
    };
    match emit(&common.out, &to_pretty(&out)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail_usage(&format!("cannot write output: {e}")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse_from(normalize_args());
    match &cli.command {
        Command::Gen { common, kind } => run_gen(common, *kind),
        Command::Check {
            common,
            suite,
            inject_violation,
        } => run_check(common, *suite, *inject_violation),
        Command::Orbit {
            common,
            element_file,
        } => run_orbit(common, element_file),
        Command::Forms {
            common,
            a_file,
            b_file,
        } => run_forms(common, a_file, b_file),
    }
}
