//! `lattice-ineq`: runs verification suites, sweeps, searches and constant
//! tables, and writes deterministic JSON or CSV reports.
//!
//! Exit status: 0 when every check holds, 1 on a failed check (the first
//! counterexample goes to stderr), 2 on an invalid configuration.

mod report;
mod suites;

use clap::{Args, Parser, Subcommand};
use lattice_ineq::highdim::ConstantName;
use lattice_ineq::lattice::Exponent;
use lattice_ineq::rearrange_lattice::{Labelling, SearchBudget};
use lattice_ineq::report::Json;
use report::{document, emit_report, first_failure, table_csv, Check, Format};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

/// Evaluation count used when the budget is given as a time limit.
const DEFAULT_SEARCH_EVALUATIONS: usize = 20_000;

#[derive(Parser, Debug)]
#[command(name = "lattice-ineq", version, about = "Verification toolkit for discrete functional inequalities")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Seed of every random choice in the run.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format; `tables` defaults to csv, everything else to json.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Power-weight Hardy inequalities on the half line.
    Hardy1d {
        /// Weight exponents.
        #[arg(long, value_delimiter = ',', default_value = "0,0.5,5,6", allow_hyphen_values = true)]
        alphas: Vec<f64>,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        /// Largest support point of the random functions.
        #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(i64).range(1..))]
        nmax: i64,
    },
    /// Combinatorial identity, higher-order constants and the one-dimensional inequalities.
    HardyFourier {
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(i64).range(1..))]
        kmax: i64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Higher-order Hardy quotients on Z^d and the planar plateau family.
    HardyNd {
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(3..=16))]
        dmax: u32,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
    /// Lattice-torus identities and the Richardson check of singular integrals.
    Torus {
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(2..=4))]
        dmax: u32,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(0..=2))]
        kmax: u32,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        /// Coarsest midpoint grid of the Richardson check.
        #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u64).range(4..=64))]
        grid: u64,
    },
    /// Antisymmetric Hardy quotients, sphere spectra and the Poincare constant.
    Antisym {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        /// Largest sphere radius of the spectrum check.
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
        rmax: u64,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..=10))]
        dmax: u32,
    },
    /// Weighted Polya-Szego and companion inequalities on the half line.
    RearrangeAxis {
        #[arg(long, value_delimiter = ',', default_value = "1,1.5,2,3")]
        pvalues: Vec<f64>,
        #[arg(long, default_value_t = 500)]
        trials: usize,
    },
    /// Fourier rearrangement: closed form, series and sample-level inequalities.
    RearrangeFourier {
        /// Midpoint grid size for the closed-form comparison.
        #[arg(long, default_value_t = 4096, value_parser = clap::value_parser!(u64).range(64..=65536))]
        grid: u64,
        #[arg(long, default_value_t = 50)]
        trials: usize,
    },
    /// Lattice rearrangement bounds, isoperimetric numbers and the comparison tree.
    RearrangeLattice {
        /// spiral, wang-wang or l1-lex; all three when omitted.
        #[arg(long)]
        labelling: Option<String>,
        #[arg(long, value_delimiter = ',', default_value = "1,1.5,2,3,inf")]
        pvalues: Vec<String>,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        /// Largest label whose lattice edges are mapped to tree paths.
        #[arg(long, default_value_t = 2000, value_parser = clap::value_parser!(u64).range(1..=100_000))]
        imax: u64,
    },
    /// Exact check of the binomial identity and coefficient closed forms.
    Identity {
        #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(i64).range(1..=64))]
        kmax: i64,
    },
    /// Random search for f with a larger rearranged gradient norm.
    Search {
        #[arg(long, default_value = "spiral")]
        labelling: String,
        #[arg(long, default_value = "2")]
        p: String,
        /// Evaluation count (`5000`) or wall-clock limit (`30s`, `500ms`).
        #[arg(long, default_value = "5000")]
        budget: String,
        /// Support size of the candidate functions.
        #[arg(long, default_value_t = 5)]
        support: usize,
    },
    /// Table of the explicit constants over d and k.
    Tables {
        /// Columns among H, HR, R, C, Ct.
        #[arg(long, value_delimiter = ',', default_value = "H,HR,R,C,Ct")]
        constants: Vec<String>,
        #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..=4096))]
        dmax: u32,
        /// Rows for k = 0, -1, ..., -kmax.
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(i64).range(0..=16))]
        kmax: i64,
        /// Order of the iterated constants C and Ct.
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
}

/// Configuration error: reported with usage, exit 2.
#[derive(Debug)]
struct ConfigError(String);

fn config_error(msg: impl Into<String>) -> ConfigError {
    ConfigError(msg.into())
}

fn parse_labelling(s: &str) -> Result<Labelling, ConfigError> {
    s.parse().map_err(|e| config_error(format!("--labelling: {e}")))
}

fn parse_exponent(s: &str) -> Result<Exponent, ConfigError> {
    let p: Exponent = s.parse().map_err(|e| config_error(format!("invalid exponent {s}: {e}")))?;
    if p.value() < 1.0 {
        return Err(config_error(format!("exponent {s} must be at least 1")));
    }
    Ok(p)
}

fn parse_budget(s: &str) -> Result<SearchBudget, ConfigError> {
    let bad = || config_error(format!("invalid --budget {s}: expected an evaluation count or a duration such as 30s"));
    let limit = |n: &str, scale: f64| -> Result<SearchBudget, ConfigError> {
        let x: f64 = n.parse().map_err(|_| bad())?;
        if !(x > 0.0 && x.is_finite()) {
            return Err(bad());
        }
        Ok(SearchBudget { evaluations: DEFAULT_SEARCH_EVALUATIONS, time_limit: Some(Duration::from_secs_f64(x * scale)) })
    };
    if let Some(n) = s.strip_suffix("ms") {
        limit(n, 1e-3)
    } else if let Some(n) = s.strip_suffix('s') {
        limit(n, 1.0)
    } else {
        let n: usize = s.parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        Ok(SearchBudget::evaluations(n))
    }
}

fn floats(xs: &[f64]) -> Json {
    Json::floats(xs.iter().copied())
}

fn strings(xs: &[String]) -> Json {
    Json::Array(xs.iter().map(|s| Json::Str(s.clone())).collect())
}

/// Output of a run before formatting.
struct Run {
    name: &'static str,
    config: Json,
    checks: Vec<Check>,
    /// Column names and rows of a data table, for `tables`.
    table: Option<(Vec<String>, Vec<Json>)>,
}

fn execute(command: &Command, seed: u64) -> Result<Run, ConfigError> {
    let int = |n: usize| Json::Int(n as i64);
    let core = |e: lattice_ineq::Error| config_error(e.to_string());
    let mut table = None;
    let (name, config, checks) = match command {
        Command::Hardy1d { alphas, trials, nmax } => (
            "hardy1d",
            Json::object([("alphas", floats(alphas)), ("trials", int(*trials)), ("nmax", Json::Int(*nmax))]),
            suites::hardy1d(alphas, *trials, *nmax, seed),
        ),
        Command::HardyFourier { kmax, trials } => (
            "hardy-fourier",
            Json::object([("kmax", Json::Int(*kmax)), ("trials", int(*trials))]),
            suites::hardy_fourier(*kmax, *trials, seed),
        ),
        Command::HardyNd { dmax, trials } => (
            "hardy-nd",
            Json::object([("dmax", Json::Int(*dmax as i64)), ("trials", int(*trials))]),
            suites::hardy_nd(*dmax, *trials, seed),
        ),
        Command::Torus { dmax, kmax, trials, grid } => (
            "torus",
            Json::object([
                ("dmax", Json::Int(*dmax as i64)),
                ("kmax", Json::Int(*kmax as i64)),
                ("trials", int(*trials)),
                ("grid", Json::Int(*grid as i64)),
            ]),
            suites::torus(*dmax, *kmax, *trials, *grid as usize, seed),
        ),
        Command::Antisym { trials, rmax, dmax } => (
            "antisym",
            Json::object([("trials", int(*trials)), ("rmax", Json::Int(*rmax as i64)), ("dmax", Json::Int(*dmax as i64))]),
            suites::antisym(*trials, *rmax, *dmax, seed),
        ),
        Command::RearrangeAxis { pvalues, trials } => {
            if let Some(p) = pvalues.iter().find(|p| !(**p >= 1.0 && p.is_finite())) {
                return Err(config_error(format!("--pvalues: {p} must be a finite number at least 1")));
            }
            (
                "rearrange-axis",
                Json::object([("pvalues", floats(pvalues)), ("trials", int(*trials))]),
                suites::rearrange_axis(pvalues, *trials, seed),
            )
        }
        Command::RearrangeFourier { grid, trials } => {
            if grid % 2 != 0 {
                return Err(config_error("--grid must be even"));
            }
            (
                "rearrange-fourier",
                Json::object([("grid", Json::Int(*grid as i64)), ("trials", int(*trials))]),
                suites::rearrange_fourier(*grid as usize, *trials, seed),
            )
        }
        Command::RearrangeLattice { labelling, pvalues, trials, imax } => {
            let selection = labelling.as_deref().map(parse_labelling).transpose()?;
            let ps: Vec<Exponent> = pvalues.iter().map(|s| parse_exponent(s)).collect::<Result<_, _>>()?;
            (
                "rearrange-lattice",
                Json::object([
                    ("labelling", labelling.clone().map_or(Json::Str("all".into()), Json::Str)),
                    ("pvalues", strings(pvalues)),
                    ("trials", int(*trials)),
                    ("imax", Json::Int(*imax as i64)),
                ]),
                suites::rearrange_lattice(selection, &ps, *trials, *imax as usize, seed),
            )
        }
        Command::Identity { kmax } => {
            ("identity", Json::object([("kmax", Json::Int(*kmax))]), suites::identity(*kmax))
        }
        Command::Search { labelling, p, budget, support } => {
            let l = parse_labelling(labelling)?;
            let exponent = parse_exponent(p)?;
            let b = parse_budget(budget)?;
            if !(1..=49).contains(support) {
                return Err(config_error("--support must be in 1..=49"));
            }
            (
                "search",
                Json::object([
                    ("labelling", Json::Str(l.to_string())),
                    ("p", Json::Str(suites::exponent_label(exponent))),
                    ("budget", Json::Str(budget.clone())),
                    ("evaluations", int(b.evaluations)),
                    ("support", int(*support)),
                ]),
                suites::search(l, exponent, *support, b, seed),
            )
        }
        Command::Tables { constants, dmax, kmax, m } => {
            let names: Vec<(String, ConstantName)> = constants
                .iter()
                .map(|c| c.parse().map(|n| (c.clone(), n)).map_err(|e| config_error(format!("--constants: {e}"))))
                .collect::<Result<_, _>>()?;
            let rows = suites::constant_table(&names, *dmax, *kmax, *m).map_err(core)?;
            let checks = suites::monotone_checks(&names, &rows, *kmax);
            let header = ["d", "k"].iter().map(|s| s.to_string()).chain(names.iter().map(|n| n.0.clone())).collect();
            table = Some((header, rows));
            (
                "tables",
                Json::object([
                    ("constants", strings(constants)),
                    ("dmax", Json::Int(*dmax as i64)),
                    ("kmax", Json::Int(*kmax)),
                    ("m", Json::Int(*m as i64)),
                ]),
                Ok(checks),
            )
        }
    };
    Ok(Run { name, config, checks: checks.map_err(core)?, table })
}

fn render(run: &Run, format: Format, seed: u64) -> String {
    match (format, &run.table) {
        (Format::Csv, Some((header, rows))) => table_csv(header, rows),
        (Format::Csv, None) => emit_report(&run.checks, Format::Csv),
        (Format::Json, table) => {
            let extra = table.as_ref().map(|(_, rows)| ("table", Json::Array(rows.clone())));
            let mut text = document(run.name, run.config.clone(), seed, &run.checks, extra).render();
            text.push('\n');
            text
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = cli.common.seed;
    let run = match execute(&cli.command, seed) {
        Ok(run) => run,
        Err(ConfigError(msg)) => {
            use clap::CommandFactory;
            let mut cmd = Cli::command();
            cmd.error(clap::error::ErrorKind::ValueValidation, msg).print().ok();
            return ExitCode::from(2);
        }
    };
    let format = cli.common.format.unwrap_or(if run.table.is_some() { Format::Csv } else { Format::Json });
    let text = render(&run, format, seed);
    match &cli.common.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    match first_failure(&run.checks) {
        None => ExitCode::SUCCESS,
        Some(c) => {
            eprintln!("check failed: {}", c.to_json().render());
            ExitCode::from(1)
        }
    }
}
