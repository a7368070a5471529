//! Builds a [`ResultDocument`] for one graph.

use gamma_core::invariants::bounds::{bound_report_with, BoundOptions};
use gamma_core::invariants::cheeger::cheeger_constant_capped;
use gamma_core::invariants::spectral::{
    algebraic_connectivity, distance_spectral_radius, normalized_laplacian_mu, DEFAULT_TOL as SPECTRAL_TOL,
};
use gamma_core::{gamma, gamma_from_table, is_connected, is_tree, Graph};

use crate::caps::{check, Caps};
use crate::error::CliError;
use crate::parallel;
use crate::report::{BoundRecord, Cheeger, Fraction, GraphSummary, Invariants, Oracle, ResultDocument, Section};

/// Agreement threshold between the exact value and the LP optimum.
pub const LP_AGREEMENT: f64 = 1e-6;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Requests {
    pub lp: bool,
    pub spectral: bool,
    pub cheeger: bool,
    pub bounds: bool,
}

fn disconnected<T>() -> Section<T> {
    Section::skipped("graph is disconnected")
}

fn not_requested<T>(flag: &str) -> Section<T> {
    Section::skipped(format!("not requested (pass {flag})"))
}

/// Fails with a cap error before doing any work if an explicitly requested
/// analysis is over its cap.
pub fn analyse(g: &Graph, req: Requests, caps: &Caps, tol: f64) -> Result<ResultDocument, CliError> {
    let n = g.n();
    if req.lp {
        check("the LP oracle", n, caps.lp)?;
    }
    if req.spectral {
        check("spectral analysis", n, caps.spectral)?;
    }
    if req.cheeger {
        check("Cheeger enumeration", n, caps.cheeger)?;
    }
    if n < 2 {
        return Err(CliError::Input(format!("gamma needs at least 2 vertices, the graph has {n}")));
    }
    let connected = is_connected(g);
    if req.bounds && !connected {
        return Err(CliError::Input("bounds are only defined for connected graphs".into()));
    }

    let (cert, table) = if connected {
        let table = parallel::transmission_table(g)?;
        (gamma_from_table(g, &table)?, Some(table))
    } else {
        (gamma(g)?, None)
    };

    let invariants = Invariants {
        wiener: table.as_ref().map_or_else(disconnected, |t| Section::Computed(t.wiener)),
        d_max: table.as_ref().map_or_else(disconnected, |t| Section::Computed(t.d_max)),
        distance_spectral_radius: match (req.spectral, connected) {
            (false, _) => not_requested("--spectral"),
            (true, false) => disconnected(),
            (true, true) => Section::from_result(distance_spectral_radius(g, SPECTRAL_TOL).map(Into::into)),
        },
        algebraic_connectivity: if req.spectral {
            Section::from_result(algebraic_connectivity(g, SPECTRAL_TOL).map(Into::into))
        } else {
            not_requested("--spectral")
        },
        normalized_laplacian_gap: match (req.spectral, connected) {
            (false, _) => not_requested("--spectral"),
            (true, false) => disconnected(),
            (true, true) => Section::from_result(normalized_laplacian_mu(g, SPECTRAL_TOL).map(Into::into)),
        },
        cheeger: match (req.cheeger, connected) {
            (false, _) => not_requested("--cheeger"),
            (true, false) => disconnected(),
            (true, true) => Section::from_result(cheeger_constant_capped(g, caps.cheeger).map(Cheeger::from)),
        },
    };

    let oracle = match (req.lp, connected) {
        (false, _) => not_requested("--lp"),
        (true, false) => disconnected(),
        (true, true) => Section::from_result(parallel::gamma_lp(g).map(|lp| Oracle {
            agrees: (lp.gamma - cert.gamma_f64()).abs() <= LP_AGREEMENT,
            lp_gamma: lp.gamma,
            per_k: lp.per_k,
            best_k: lp.best_k,
        })),
    };

    let bounds = if req.bounds {
        let opts = BoundOptions {
            tol,
            cheeger_max_n: Some(caps.cheeger),
            b_oracle_max_n: Some(caps.b_oracle),
            ..BoundOptions::default()
        };
        Section::from_result(bound_report_with(g, &opts).map(|r| r.entries.iter().map(BoundRecord::from).collect()))
    } else {
        Section::skipped("not requested (use the verify command)")
    };

    Ok(ResultDocument {
        graph: GraphSummary { n, m: g.m(), connected, tree: is_tree(g) },
        gamma: Fraction::from(&cert.gamma),
        attaining_vertex: cert.attaining_vertex,
        witness: cert.witness.iter().map(Fraction::from).collect(),
        witness_valid: cert.witness_valid,
        fallback_witness: cert.fallback,
        invariants,
        bounds,
        oracle,
    })
}

/// Problems that make `verify` exit with the verification-failure code.
pub fn verification_failures(doc: &ResultDocument) -> Vec<String> {
    let mut out = Vec::new();
    if !doc.witness_valid {
        out.push("witness is not a feasible optimal vector".to_string());
    }
    if let Section::Computed(o) = &doc.oracle {
        if !o.agrees {
            out.push(format!("LP optimum {} disagrees with gamma {}", o.lp_gamma, doc.gamma.approx));
        }
    }
    match &doc.bounds {
        Section::Computed(records) => {
            for r in records {
                if r.status == "error" {
                    out.push(format!("{}: {}", r.name, r.reason.as_deref().unwrap_or("error")));
                } else if r.holds == Some(false) {
                    out.push(format!(
                        "{} fails: {} vs {}",
                        r.name,
                        r.lhs.unwrap_or(f64::NAN),
                        r.rhs.unwrap_or(f64::NAN)
                    ));
                }
            }
        }
        Section::Failed { error } => out.push(format!("bound report failed: {error}")),
        Section::Skipped { .. } => {}
    }
    out
}
