//! Inequalities relating `gamma` to other graph invariants, evaluated on a
//! concrete graph.
//!
//! Every entry is stated as `lhs <= rhs` or `lhs < rhs`. Entries built from
//! integers and `gamma` alone are decided in exact arithmetic; spectral and
//! LP entries use floats with the tolerances in [`BoundOptions`]. Where the
//! equality case is characterized structurally, `equality_expected` is
//! computed from that structure and never from the numbers being compared.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::distance::transmission_table;
use crate::graph::tree::is_tree;
use crate::graph::Graph;
use crate::invariants::cheeger::{cheeger_constant_capped, DEFAULT_MAX_N as CHEEGER_MAX_N};
use crate::invariants::gamma::{gamma_from_table, to_f64};
use crate::invariants::spectral::{
    algebraic_connectivity, distance_spectral_radius, normalized_laplacian_mu, DEFAULT_TOL,
};
use crate::lp::oracle::{b_small_oracle_capped, B_ORACLE_MAX_N};
use crate::Rational;

/// Slack on the `b` entry, which compares two LP-derived floats.
pub const B_SLACK: f64 = 1e-7;

#[derive(Debug, Clone, PartialEq)]
pub struct BoundOptions {
    /// Relative tolerance for float comparisons and float equality.
    pub tol: f64,
    /// Slack granted to strict float inequalities.
    pub strict_slack: f64,
    pub spectral_tol: f64,
    /// Size cap for the Cheeger entries; `None` skips them.
    pub cheeger_max_n: Option<usize>,
    /// Size cap for the `b(G)` entry; `None` skips it.
    pub b_oracle_max_n: Option<usize>,
}

impl Default for BoundOptions {
    fn default() -> Self {
        BoundOptions {
            tol: 1e-9,
            strict_slack: 1e-9,
            spectral_tol: DEFAULT_TOL,
            cheeger_max_n: Some(CHEEGER_MAX_N),
            b_oracle_max_n: Some(B_ORACLE_MAX_N),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    /// `lhs <= rhs`
    AtMost,
    /// `lhs < rhs`
    LessThan,
}

#[derive(Debug, Clone, PartialEq)]
pub enum EntryStatus {
    Evaluated,
    Skipped(String),
    Failed(Error),
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundEntry {
    pub name: &'static str,
    pub statement: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    pub comparison: Comparison,
    pub exact: bool,
    pub holds: bool,
    pub equality_attained: bool,
    /// `Some(true)` when the structural characterization predicts equality,
    /// `None` when no characterization is known.
    pub equality_expected: Option<bool>,
    pub status: EntryStatus,
}

impl BoundEntry {
    pub fn is_evaluated(&self) -> bool {
        self.status == EntryStatus::Evaluated
    }

    /// Evaluated with a known characterization that disagrees with the
    /// observed equality.
    pub fn equality_mismatch(&self) -> bool {
        self.is_evaluated() && self.equality_expected.is_some_and(|e| e != self.equality_attained)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn entry(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// No evaluated entry fails and no entry errored.
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| match e.status {
            EntryStatus::Evaluated => e.holds,
            EntryStatus::Skipped(_) => true,
            EntryStatus::Failed(_) => false,
        })
    }

    pub fn equality_mismatches(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| e.equality_mismatch())
    }
}

struct Spec {
    name: &'static str,
    statement: &'static str,
    comparison: Comparison,
}

const SPECTRAL_RADIUS: Spec = Spec {
    name: "gamma_vs_distance_spectral_radius",
    statement: "gamma <= n / rho(D)",
    comparison: Comparison::AtMost,
};
const WIENER: Spec =
    Spec { name: "gamma_vs_wiener", statement: "gamma <= n^2 / (2 W)", comparison: Comparison::AtMost };
const B_BOUND: Spec = Spec { name: "b_vs_gamma", statement: "b <= (m / 2) gamma", comparison: Comparison::AtMost };
const WITNESS_NORM: Spec =
    Spec { name: "witness_norm", statement: "n / (n - 1) <= ||x||_2^2", comparison: Comparison::AtMost };
// Strict except at K_2, where both sides are 2.
const ALGEBRAIC: Spec = Spec {
    name: "algebraic_connectivity_vs_gamma",
    statement: "a <= (m (n - 1) / n) gamma^2",
    comparison: Comparison::AtMost,
};
const CHEEGER_REGULAR: Spec =
    Spec { name: "cheeger_vs_gamma_regular", statement: "h < sqrt(n - 1) gamma", comparison: Comparison::LessThan };
const CHEEGER_UPPER: Spec = Spec { name: "cheeger_upper", statement: "mu <= 2 h", comparison: Comparison::AtMost };
const CHEEGER_LOWER: Spec = Spec { name: "cheeger_lower", statement: "h^2 / 2 < mu", comparison: Comparison::LessThan };
const GLOBAL_LOWER: Spec =
    Spec { name: "global_lower", statement: "2 / (n - 1) <= gamma", comparison: Comparison::AtMost };
const GLOBAL_UPPER: Spec =
    Spec { name: "global_upper", statement: "gamma <= n / (n - 1)", comparison: Comparison::AtMost };
const TREE_UPPER: Spec =
    Spec { name: "tree_upper", statement: "gamma <= n / (2n - 3)", comparison: Comparison::AtMost };

impl Spec {
    fn skipped(&self, reason: String) -> BoundEntry {
        self.blank(EntryStatus::Skipped(reason))
    }

    fn failed(&self, error: Error) -> BoundEntry {
        self.blank(EntryStatus::Failed(error))
    }

    fn blank(&self, status: EntryStatus) -> BoundEntry {
        BoundEntry {
            name: self.name,
            statement: self.statement,
            lhs: f64::NAN,
            rhs: f64::NAN,
            comparison: self.comparison,
            exact: false,
            holds: false,
            equality_attained: false,
            equality_expected: None,
            status,
        }
    }

    fn exact(&self, lhs: Rational, rhs: Rational, expected: Option<bool>) -> BoundEntry {
        let holds = match self.comparison {
            Comparison::AtMost => lhs <= rhs,
            Comparison::LessThan => lhs < rhs,
        };
        BoundEntry {
            lhs: to_f64(&lhs),
            rhs: to_f64(&rhs),
            exact: true,
            holds,
            equality_attained: lhs == rhs,
            equality_expected: expected,
            ..self.blank(EntryStatus::Evaluated)
        }
    }

    fn float(&self, lhs: f64, rhs: f64, expected: Option<bool>, opts: &BoundOptions, slack: f64) -> BoundEntry {
        let scale = rhs.abs().max(1.0);
        let holds = match self.comparison {
            Comparison::AtMost => lhs <= rhs + slack * scale,
            Comparison::LessThan => lhs < rhs + slack * scale,
        };
        BoundEntry {
            lhs,
            rhs,
            holds,
            equality_attained: (lhs - rhs).abs() <= opts.tol * scale,
            equality_expected: expected,
            ..self.blank(EntryStatus::Evaluated)
        }
    }
}

/// [`bound_report_with`] using default options and the given tolerance.
pub fn bound_report(g: &Graph, tol: f64) -> Result<BoundReport> {
    bound_report_with(g, &BoundOptions { tol, ..BoundOptions::default() })
}

/// Evaluates every bound on a connected graph with at least two vertices.
///
/// Failures of individual sub-computations are recorded in the entry they
/// belong to; only a graph outside the domain is an error.
pub fn bound_report_with(g: &Graph, opts: &BoundOptions) -> Result<BoundReport> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    let table = transmission_table(g)?;
    let cert = gamma_from_table(g, &table)?;
    let gamma = cert.gamma;
    let gamma_f = to_f64(&gamma);
    let (n_i, m_i) = (n as i128, g.m() as i128);
    let m_f = g.m() as f64;
    let n_f = n as f64;
    let tree = is_tree(g);
    let regular = table.is_regular();

    let mut entries = Vec::with_capacity(11);

    entries.push(match distance_spectral_radius(g, opts.spectral_tol) {
        Ok(rho) => SPECTRAL_RADIUS.float(gamma_f, n_f / rho.value, Some(regular), opts, opts.tol),
        Err(e) => SPECTRAL_RADIUS.failed(e),
    });

    entries.push(WIENER.exact(gamma, Rational::new(n_i * n_i, 2 * table.wiener as i128), Some(regular)));

    entries.push(match opts.b_oracle_max_n {
        None => B_BOUND.skipped("not requested".into()),
        Some(cap) if n > cap => B_BOUND.skipped(format!("n = {n} exceeds the b(G) oracle cap {cap}")),
        Some(cap) => match b_small_oracle_capped(g, cap) {
            Ok(b) => B_BOUND.float(b, m_f / 2.0 * gamma_f, None, opts, B_SLACK),
            Err(e) => B_BOUND.failed(e),
        },
    });

    let norm2 = cert.witness.iter().fold(Rational::from_integer(0), |acc, x| acc + x * x);
    entries.push(WITNESS_NORM.exact(Rational::new(n_i, n_i - 1), norm2, Some(g.is_complete())));

    let algebraic_rhs = Rational::new(m_i * (n_i - 1), n_i) * gamma * gamma;
    entries.push(match algebraic_connectivity(g, opts.spectral_tol) {
        Ok(a) => ALGEBRAIC.float(a.value, to_f64(&algebraic_rhs), Some(n == 2), opts, opts.tol),
        Err(e) => ALGEBRAIC.failed(e),
    });

    let cheeger = match opts.cheeger_max_n {
        None => Err(String::from("not requested")),
        Some(cap) if n > cap => Err(format!("n = {n} exceeds the Cheeger enumeration cap {cap}")),
        Some(cap) => Ok(cheeger_constant_capped(g, cap)),
    };
    match &cheeger {
        Err(reason) => entries.push(CHEEGER_REGULAR.skipped(reason.clone())),
        Ok(_) if g.regular_degree().is_none() => entries.push(CHEEGER_REGULAR.skipped("graph is not regular".into())),
        Ok(Err(e)) => entries.push(CHEEGER_REGULAR.failed(e.clone())),
        Ok(Ok(cut)) => {
            let rhs = libm::sqrt(n_f - 1.0) * gamma_f;
            entries.push(CHEEGER_REGULAR.float(cut.value, rhs, Some(false), opts, opts.strict_slack));
        }
    }
    match &cheeger {
        Err(reason) => {
            entries.push(CHEEGER_UPPER.skipped(reason.clone()));
            entries.push(CHEEGER_LOWER.skipped(reason.clone()));
        }
        Ok(Err(e)) => {
            entries.push(CHEEGER_UPPER.failed(e.clone()));
            entries.push(CHEEGER_LOWER.failed(e.clone()));
        }
        Ok(Ok(cut)) => match normalized_laplacian_mu(g, opts.spectral_tol) {
            Ok(mu) => {
                entries.push(CHEEGER_UPPER.float(mu.value, 2.0 * cut.value, None, opts, opts.tol));
                let h2 = cut.value * cut.value / 2.0;
                entries.push(CHEEGER_LOWER.float(h2, mu.value, Some(false), opts, opts.strict_slack));
            }
            Err(e) => {
                entries.push(CHEEGER_UPPER.failed(e.clone()));
                entries.push(CHEEGER_LOWER.failed(e));
            }
        },
    }

    let is_path = tree && g.degrees().all(|d| d <= 2);
    entries.push(GLOBAL_LOWER.exact(Rational::new(2, n_i - 1), gamma, Some(is_path)));
    entries.push(GLOBAL_UPPER.exact(gamma, Rational::new(n_i, n_i - 1), Some(g.is_complete())));

    entries.push(if !tree {
        TREE_UPPER.skipped("graph is not a tree".into())
    } else if n < 3 {
        TREE_UPPER.skipped("tree bound needs n >= 3".into())
    } else {
        let is_star = g.degrees().any(|d| d == n - 1);
        TREE_UPPER.exact(gamma, Rational::new(n_i, 2 * n_i - 3), Some(is_star))
    });

    Ok(BoundReport { entries })
}
