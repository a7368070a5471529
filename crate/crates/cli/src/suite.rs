//! `verify --suite`: the bound report over the family corpus and seeded
//! random graphs and trees.

use std::fmt::Write as _;

use gamma_core::invariants::bounds::{bound_report_with, BoundOptions};
use gamma_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::caps::Caps;
use crate::corpus::{family_corpus, random_connected_gnp, random_tree};

/// Largest family member in the suite corpus.
pub const FAMILY_MAX_N: usize = 24;
pub const RANDOM_MAX_N: usize = 16;
pub const TREE_MAX_N: usize = 50;
/// The `b(G)` entry is only evaluated up to this size in suite mode.
pub const SUITE_B_MAX_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteIssue {
    pub graph: String,
    pub entry: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub graphs: usize,
    pub entries_evaluated: usize,
    pub entries_skipped: usize,
    pub failures: Vec<SuiteIssue>,
    pub equality_mismatches: Vec<SuiteIssue>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.equality_mismatches.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "suite seed {}: {} graphs, {} entries evaluated, {} skipped",
            self.seed, self.graphs, self.entries_evaluated, self.entries_skipped
        )
        .unwrap();
        for (label, issues) in [("failure", &self.failures), ("equality mismatch", &self.equality_mismatches)] {
            for i in issues {
                writeln!(out, "{label}: {} {}: {}", i.graph, i.entry, i.detail).unwrap();
            }
        }
        writeln!(out, "{}", if self.passed() { "all bounds hold" } else { "VERIFICATION FAILED" }).unwrap();
        out
    }
}

/// Family members up to [`FAMILY_MAX_N`] vertices, then `count` random
/// connected graphs (2 to [`RANDOM_MAX_N`] vertices, edge probability drawn
/// from `[0.15, 0.85]`), then `count` random trees (2 to [`TREE_MAX_N`]).
pub fn suite_corpus(seed: u64, count: usize) -> Vec<(String, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<(String, Graph)> = family_corpus(FAMILY_MAX_N)
        .into_iter()
        .map(|s| (s.to_string(), s.generate().expect("corpus members are valid")))
        .collect();
    for i in 0..count {
        let n = rng.gen_range(2..=RANDOM_MAX_N);
        let p = rng.gen_range(0.15..0.85);
        out.push((format!("random #{i} (n = {n}, p = {p:.2})"), random_connected_gnp(&mut rng, n, p)));
    }
    for i in 0..count {
        let n = rng.gen_range(2..=TREE_MAX_N);
        out.push((format!("tree #{i} (n = {n})"), random_tree(&mut rng, n)));
    }
    out
}

pub fn run_suite(seed: u64, count: usize, caps: &Caps, tol: f64) -> SuiteReport {
    let opts = BoundOptions {
        tol,
        cheeger_max_n: Some(caps.cheeger),
        b_oracle_max_n: Some(caps.b_oracle.min(SUITE_B_MAX_N)),
        ..BoundOptions::default()
    };
    let corpus = suite_corpus(seed, count);
    let mut report = SuiteReport {
        seed,
        graphs: corpus.len(),
        entries_evaluated: 0,
        entries_skipped: 0,
        failures: Vec::new(),
        equality_mismatches: Vec::new(),
    };
    for (label, g) in &corpus {
        let issue = |entry: &str, detail: String| SuiteIssue { graph: label.clone(), entry: entry.to_string(), detail };
        let r = match bound_report_with(g, &opts) {
            Ok(r) => r,
            Err(e) => {
                report.failures.push(issue("report", e.to_string()));
                continue;
            }
        };
        for e in &r.entries {
            use gamma_core::invariants::bounds::EntryStatus::*;
            match &e.status {
                Evaluated => report.entries_evaluated += 1,
                Skipped(_) => report.entries_skipped += 1,
                Failed(err) => report.failures.push(issue(e.name, err.to_string())),
            }
            if e.is_evaluated() && !e.holds {
                report.failures.push(issue(e.name, format!("{} vs {}", e.lhs, e.rhs)));
            }
            if e.equality_mismatch() {
                report.equality_mismatches.push(issue(
                    e.name,
                    format!("expected equality {:?}, attained {}", e.equality_expected, e.equality_attained),
                ));
            }
        }
    }
    report
}
