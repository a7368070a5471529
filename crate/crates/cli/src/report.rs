//! Result documents and their JSON and text renderings.
//!
//! Every key is present in every run. Analyses that were not run hold
//! `{"skipped": reason}` and analyses that errored hold `{"error": message}`.

use std::fmt::Write as _;

use gamma_core::invariants::bounds::{BoundEntry, Comparison, EntryStatus};
use gamma_core::invariants::cheeger::CheegerCut;
use gamma_core::invariants::spectral::SpectralEstimate;
use gamma_core::{Rational, Vertex};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Fraction {
    pub num: i128,
    pub den: i128,
    pub approx: f64,
}

impl From<&Rational> for Fraction {
    fn from(r: &Rational) -> Self {
        Fraction { num: *r.numer(), den: *r.denom(), approx: *r.numer() as f64 / *r.denom() as f64 }
    }
}

impl std::fmt::Display for Fraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Section<T> {
    Computed(T),
    Skipped { skipped: String },
    Failed { error: String },
}

impl<T> Section<T> {
    pub fn skipped(reason: impl Into<String>) -> Self {
        Section::Skipped { skipped: reason.into() }
    }

    pub fn from_result<E: std::fmt::Display>(r: Result<T, E>) -> Self {
        match r {
            Ok(v) => Section::Computed(v),
            Err(e) => Section::Failed { error: e.to_string() },
        }
    }

    pub fn computed(&self) -> Option<&T> {
        match self {
            Section::Computed(v) => Some(v),
            _ => None,
        }
    }

    fn render(&self, f: impl FnOnce(&T) -> String) -> String {
        match self {
            Section::Computed(v) => f(v),
            Section::Skipped { skipped } => format!("skipped ({skipped})"),
            Section::Failed { error } => format!("error ({error})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub tree: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectral {
    pub value: f64,
    pub residual: f64,
    pub iterations: usize,
    pub converged: bool,
}

impl From<SpectralEstimate> for Spectral {
    fn from(s: SpectralEstimate) -> Self {
        Spectral { value: s.value, residual: s.residual, iterations: s.iterations, converged: s.converged }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Cheeger {
    pub value: Fraction,
    pub subset: Vec<Vertex>,
}

impl From<CheegerCut> for Cheeger {
    fn from(c: CheegerCut) -> Self {
        Cheeger { value: Fraction::from(&c.ratio), subset: c.subset }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Invariants {
    pub wiener: Section<u64>,
    pub d_max: Section<u64>,
    pub distance_spectral_radius: Section<Spectral>,
    pub algebraic_connectivity: Section<Spectral>,
    pub normalized_laplacian_gap: Section<Spectral>,
    pub cheeger: Section<Cheeger>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundRecord {
    pub name: &'static str,
    pub statement: &'static str,
    pub status: &'static str,
    pub reason: Option<String>,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub strict: bool,
    pub exact: bool,
    pub holds: Option<bool>,
    pub equality_attained: Option<bool>,
    pub equality_expected: Option<bool>,
}

impl From<&BoundEntry> for BoundRecord {
    fn from(e: &BoundEntry) -> Self {
        let evaluated = e.is_evaluated();
        let (status, reason) = match &e.status {
            EntryStatus::Evaluated => ("evaluated", None),
            EntryStatus::Skipped(r) => ("skipped", Some(r.clone())),
            EntryStatus::Failed(err) => ("error", Some(err.to_string())),
        };
        BoundRecord {
            name: e.name,
            statement: e.statement,
            status,
            reason,
            lhs: evaluated.then_some(e.lhs),
            rhs: evaluated.then_some(e.rhs),
            strict: e.comparison == Comparison::LessThan,
            exact: e.exact,
            holds: evaluated.then_some(e.holds),
            equality_attained: evaluated.then_some(e.equality_attained),
            equality_expected: e.equality_expected,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Oracle {
    pub lp_gamma: f64,
    pub per_k: Vec<f64>,
    pub best_k: Vertex,
    /// `|lp_gamma - gamma| <= 1e-6`.
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResultDocument {
    pub graph: GraphSummary,
    pub gamma: Fraction,
    pub attaining_vertex: Option<Vertex>,
    pub witness: Vec<Fraction>,
    pub witness_valid: bool,
    /// LP optimum used in place of an invalid witness.
    pub fallback_witness: Option<Vec<f64>>,
    pub invariants: Invariants,
    pub bounds: Section<Vec<BoundRecord>>,
    pub oracle: Section<Oracle>,
}

fn spectral_line(s: &Spectral) -> String {
    let flag = if s.converged { "" } else { ", not converged" };
    format!("{:.12} (residual {:.1e}{flag})", s.value, s.residual)
}

impl ResultDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let g = &self.graph;
        let w = &mut out;
        writeln!(w, "graph: n = {}, m = {}, connected = {}, tree = {}", g.n, g.m, g.connected, g.tree).unwrap();
        writeln!(w, "gamma: {} ({})", self.gamma, self.gamma.approx).unwrap();
        match self.attaining_vertex {
            Some(u) => writeln!(w, "attaining vertex: {u}").unwrap(),
            None => writeln!(w, "attaining vertex: none").unwrap(),
        }
        let witness: Vec<String> = self.witness.iter().map(|x| x.to_string()).collect();
        let validity = if self.witness_valid { "valid" } else { "INVALID" };
        writeln!(w, "witness ({validity}): {}", witness.join(" ")).unwrap();
        if let Some(fallback) = &self.fallback_witness {
            writeln!(w, "fallback witness: {fallback:?}").unwrap();
        }
        let inv = &self.invariants;
        writeln!(w, "wiener index: {}", inv.wiener.render(|v| v.to_string())).unwrap();
        writeln!(w, "max transmission: {}", inv.d_max.render(|v| v.to_string())).unwrap();
        writeln!(w, "distance spectral radius: {}", inv.distance_spectral_radius.render(spectral_line)).unwrap();
        writeln!(w, "algebraic connectivity: {}", inv.algebraic_connectivity.render(spectral_line)).unwrap();
        writeln!(w, "normalized laplacian gap: {}", inv.normalized_laplacian_gap.render(spectral_line)).unwrap();
        writeln!(w, "cheeger constant: {}", inv.cheeger.render(|c| format!("{} ({})", c.value, c.value.approx)))
            .unwrap();
        writeln!(
            w,
            "lp oracle: {}",
            self.oracle.render(|o| format!("{:.12} at k = {} (agrees: {})", o.lp_gamma, o.best_k, o.agrees))
        )
        .unwrap();
        match &self.bounds {
            Section::Computed(records) => {
                writeln!(w, "bounds:").unwrap();
                for r in records {
                    writeln!(w, "  {}", bound_line(r)).unwrap();
                }
            }
            other => writeln!(w, "bounds: {}", other.render(|_| String::new())).unwrap(),
        }
        out
    }
}

fn bound_line(r: &BoundRecord) -> String {
    let head = format!("{:<36} {:<28}", r.name, r.statement);
    match (r.holds, r.lhs, r.rhs) {
        (Some(holds), Some(lhs), Some(rhs)) => {
            let verdict = if holds { "holds" } else { "FAILS" };
            let eq = if r.equality_attained == Some(true) { ", equality" } else { "" };
            let mismatch = match (r.equality_expected, r.equality_attained) {
                (Some(e), Some(a)) if e != a => " [equality case mismatch]",
                _ => "",
            };
            format!("{head} {verdict}{eq}: {lhs:.10} vs {rhs:.10}{mismatch}")
        }
        _ => format!("{head} {} ({})", r.status, r.reason.as_deref().unwrap_or("")),
    }
}
