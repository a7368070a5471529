//! Wall-clock comparison of the transmission formula and the LP oracle.

use std::fmt::Write as _;
use std::time::Instant;

use gamma_core::families::FamilySpec;
use gamma_core::lp::oracle::gamma_lp;
use gamma_core::{gamma, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::LP_AGREEMENT;
use crate::caps::{check, Caps};
use crate::corpus::random_connected_with_edges;
use crate::error::CliError;
use crate::report::Fraction;

pub const BENCH_FAMILIES: &[&str] = &["path", "cycle", "complete", "star", "hypercube", "random"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Formula,
    Lp,
    Both,
}

/// Parses `10,20,30`, `10..50` (inclusive) and `10..50:5`, or a
/// comma-separated mix.
pub fn parse_sizes(text: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Input(format!("invalid size list {text:?}; use e.g. 10,20 or 10..50 or 10..50:5"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let mut out = Vec::new();
    for part in text.split(',') {
        match part.split_once("..") {
            None => out.push(num(part)?),
            Some((lo, rest)) => {
                let (hi, step) = match rest.split_once(':') {
                    Some((hi, step)) => (num(hi)?, num(step)?),
                    None => (num(rest)?, 1),
                };
                let lo = num(lo)?;
                if step == 0 || lo > hi {
                    return Err(bad());
                }
                out.extend((lo..=hi).step_by(step));
            }
        }
    }
    if out.is_empty() {
        return Err(bad());
    }
    Ok(out)
}

/// The benchmark graph for one size. `random` has `n` vertices and
/// `min(5n, n(n-1)/2)` edges.
pub fn bench_graph(family: &str, size: usize, seed: u64) -> Result<Graph, CliError> {
    let spec = match family.to_ascii_lowercase().as_str() {
        "path" => FamilySpec::Path(size),
        "cycle" => FamilySpec::Cycle(size),
        "complete" => FamilySpec::Complete(size),
        "star" => FamilySpec::Star(size),
        "hypercube" => FamilySpec::Hypercube(size),
        "random" => {
            if size < 2 {
                return Err(CliError::Input("random graphs need at least 2 vertices".into()));
            }
            check("random benchmark graphs", size, crate::edgelist::MAX_VERTICES)?;
            let m = (5 * size).min(size * (size - 1) / 2);
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ size as u64);
            return Ok(random_connected_with_edges(&mut rng, size, m));
        }
        _ => {
            return Err(CliError::Input(format!(
                "family {family:?} cannot be benchmarked; expected one of {}",
                BENCH_FAMILIES.join(", ")
            )))
        }
    };
    let g = spec.generate()?;
    if g.n() < 2 {
        return Err(CliError::Input(format!("{spec} has fewer than 2 vertices")));
    }
    Ok(g)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub size: usize,
    pub n: usize,
    pub m: usize,
    pub formula_seconds: Option<f64>,
    pub lp_seconds: Option<f64>,
    pub gamma: Option<Fraction>,
    pub lp_gamma: Option<f64>,
    pub lp_per_k: Option<Vec<f64>>,
    pub agrees: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub family: String,
    pub method: Method,
    pub seed: u64,
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.agrees != Some(false))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "{:>8} {:>8} {:>10} {:>14} {:>14} {:>16} {:>16} {:>7}",
            "size", "n", "m", "formula_s", "lp_s", "gamma", "lp_gamma", "agree"
        )
        .unwrap();
        let opt = |v: Option<f64>, prec: usize| v.map_or("-".to_string(), |v| format!("{v:.prec$}"));
        for r in &self.rows {
            writeln!(
                out,
                "{:>8} {:>8} {:>10} {:>14} {:>14} {:>16} {:>16} {:>7}",
                r.size,
                r.n,
                r.m,
                opt(r.formula_seconds, 6),
                opt(r.lp_seconds, 6),
                r.gamma.as_ref().map_or("-".to_string(), |f| f.to_string()),
                opt(r.lp_gamma, 10),
                r.agrees.map_or("-".to_string(), |a| a.to_string()),
            )
            .unwrap();
        }
        out
    }
}

/// Builds every graph and checks the LP cap before timing anything.
pub fn run_bench(
    family: &str,
    sizes: &[usize],
    method: Method,
    seed: u64,
    caps: &Caps,
) -> Result<BenchReport, CliError> {
    let graphs = sizes.iter().map(|&s| bench_graph(family, s, seed).map(|g| (s, g))).collect::<Result<Vec<_>, _>>()?;
    if method != Method::Formula {
        for (_, g) in &graphs {
            check("the LP benchmark", g.n(), caps.lp)?;
        }
    }
    let mut rows = Vec::with_capacity(graphs.len());
    for (size, g) in graphs {
        let mut row = BenchRow {
            size,
            n: g.n(),
            m: g.m(),
            formula_seconds: None,
            lp_seconds: None,
            gamma: None,
            lp_gamma: None,
            lp_per_k: None,
            agrees: None,
        };
        if method != Method::Lp {
            let start = Instant::now();
            let cert = gamma(&g)?;
            row.formula_seconds = Some(start.elapsed().as_secs_f64());
            row.gamma = Some(Fraction::from(&cert.gamma));
        }
        if method != Method::Formula {
            let start = Instant::now();
            let lp = gamma_lp(&g)?;
            row.lp_seconds = Some(start.elapsed().as_secs_f64());
            row.lp_gamma = Some(lp.gamma);
            row.lp_per_k = Some(lp.per_k);
        }
        if let (Some(exact), Some(lp)) = (&row.gamma, row.lp_gamma) {
            row.agrees = Some((exact.approx - lp).abs() <= LP_AGREEMENT);
        }
        rows.push(row);
    }
    Ok(BenchReport { family: family.to_string(), method, seed, rows })
}
