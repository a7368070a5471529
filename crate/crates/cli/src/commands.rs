use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use gamma_core::families::cartesian_product;
use serde::Serialize;

use crate::analysis::{analyse, verification_failures, Requests};
use crate::bench::{parse_sizes, run_bench, Method};
use crate::caps::Caps;
use crate::edgelist::{read_graph, write_edge_list, write_graph};
use crate::error::{exit, CliError};
use crate::family::parse_family;
use crate::suite::run_suite;

#[derive(Debug, Parser)]
#[command(name = "gamma", version, about = "Exact l-infinity algebraic connectivity of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Print JSON instead of text.
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,

    /// Print text (the default).
    #[arg(long, global = true)]
    pub text: bool,

    /// Tolerance for floating-point bound comparisons.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,

    /// Seed for random corpora and random benchmark graphs.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args, Clone, Copy)]
pub struct Extras {
    /// Cross-check with the per-vertex linear programs.
    #[arg(long)]
    pub lp: bool,

    /// Distance spectral radius, algebraic connectivity and normalized
    /// Laplacian gap.
    #[arg(long)]
    pub spectral: bool,

    /// Exact Cheeger constant by subset enumeration.
    #[arg(long)]
    pub cheeger: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute gamma and optional extras for an edge-list file.
    Compute {
        input: PathBuf,
        #[command(flatten)]
        extras: Extras,
    },
    /// Check every bound on a connected graph, or on a random corpus.
    Verify {
        #[arg(required_unless_present = "suite")]
        input: Option<PathBuf>,
        #[command(flatten)]
        extras: Extras,
        /// Run on the family corpus plus seeded random graphs and trees.
        #[arg(long, conflicts_with = "input")]
        suite: bool,
        /// Random graphs and random trees in suite mode (each).
        #[arg(long, default_value_t = 100, requires = "suite")]
        count: usize,
    },
    /// Write a family member as an edge list.
    Generate {
        #[arg(long)]
        family: String,
        /// Comma-separated parameters, e.g. `--params 2,3`.
        #[arg(long, value_delimiter = ',')]
        params: Vec<usize>,
        /// Output path (default: stdout).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Cartesian product of two or more edge-list files.
    ///
    /// Vertex (v_1, ..., v_k) gets id ((v_1 n_2 + v_2) n_3 + v_3) ..., the
    /// first file being the most significant digit.
    Product {
        #[arg(num_args = 2.., required = true)]
        inputs: Vec<PathBuf>,
        /// Output path (default: stdout).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Time the transmission formula against the LP oracle.
    Bench {
        #[arg(long)]
        family: String,
        /// Sizes: `10,20`, `10..50` or `10..50:5`.
        #[arg(long)]
        sizes: String,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
}

#[derive(Serialize)]
struct Written<'a> {
    path: &'a str,
    n: usize,
    m: usize,
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes())
        .and_then(|_| if text.ends_with('\n') { Ok(()) } else { out.write_all(b"\n") })
        .map_err(|source| CliError::Write { path: "<stdout>".into(), source })
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    emit(out, &serde_json::to_string_pretty(value).expect("reports serialize"))
}

fn requests(extras: Extras, bounds: bool) -> Requests {
    Requests { lp: extras.lp, spectral: extras.spectral, cheeger: extras.cheeger, bounds }
}

/// Runs one command, writing its report to `out`. Returns the exit code on
/// completion; errors carry their own.
pub fn run(cli: Cli, caps: &Caps, out: &mut dyn Write) -> Result<u8, CliError> {
    if !(cli.tol.is_finite() && cli.tol > 0.0) {
        return Err(CliError::Input(format!("--tol must be a positive number, got {}", cli.tol)));
    }
    match cli.command {
        Command::Compute { input, extras } => {
            let g = read_graph(&input)?;
            let doc = analyse(&g, requests(extras, false), caps, cli.tol)?;
            emit(out, &if cli.json { doc.to_json() } else { doc.to_text() })?;
            Ok(exit::OK)
        }
        Command::Verify { suite: true, count, .. } => {
            let report = run_suite(cli.seed, count, caps, cli.tol);
            if cli.json {
                emit_json(out, &report)?;
            } else {
                emit(out, &report.to_text())?;
            }
            Ok(if report.passed() { exit::OK } else { exit::VERIFICATION })
        }
        Command::Verify { input, extras, .. } => {
            let input = input.ok_or_else(|| CliError::Input("verify needs an input file or --suite".into()))?;
            let g = read_graph(&input)?;
            let doc = analyse(&g, requests(extras, true), caps, cli.tol)?;
            let failures = verification_failures(&doc);
            emit(out, &if cli.json { doc.to_json() } else { doc.to_text() })?;
            if !cli.json && !failures.is_empty() {
                emit(out, &format!("VERIFICATION FAILED:\n  {}", failures.join("\n  ")))?;
            }
            Ok(if failures.is_empty() { exit::OK } else { exit::VERIFICATION })
        }
        Command::Generate { family, params, output } => {
            let g = parse_family(&family, &params)?.generate()?;
            write_or_print(&g, output, cli.json, out)
        }
        Command::Product { inputs, output } => {
            let factors = inputs.iter().map(|p| read_graph(p)).collect::<Result<Vec<_>, _>>()?;
            let total = factors.iter().try_fold(1usize, |acc, g| acc.checked_mul(g.n()));
            if total.is_none_or(|n| n > crate::edgelist::MAX_VERTICES) {
                return Err(CliError::Input(format!(
                    "product has more than {} vertices",
                    crate::edgelist::MAX_VERTICES
                )));
            }
            let g = cartesian_product(&factors)?;
            write_or_print(&g, output, cli.json, out)
        }
        Command::Bench { family, sizes, method } => {
            let report = run_bench(&family, &parse_sizes(&sizes)?, method, cli.seed, caps)?;
            if cli.json {
                emit_json(out, &report)?;
            } else {
                emit(out, &report.to_text())?;
            }
            Ok(if report.all_agree() { exit::OK } else { exit::VERIFICATION })
        }
    }
}

/// With `-o`, writes the file and reports what was written; otherwise the
/// edge list itself goes to `out`.
fn write_or_print(
    g: &gamma_core::Graph,
    output: Option<PathBuf>,
    json: bool,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    match output {
        Some(path) => {
            write_graph(g, &path)?;
            let shown = path.display().to_string();
            if json {
                emit_json(out, &Written { path: &shown, n: g.n(), m: g.m() })?;
            } else {
                emit(out, &format!("wrote {shown}: n = {}, m = {}", g.n(), g.m()))?;
            }
        }
        None => emit(out, &write_edge_list(g))?,
    }
    Ok(exit::OK)
}
