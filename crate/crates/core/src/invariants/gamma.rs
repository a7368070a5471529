//! Exact `gamma(G)` with a certified optimal witness vector.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::distance::{components, transmission_table, Bfs, TransmissionTable};
use crate::graph::{Graph, Vertex};
use crate::lp::oracle::gamma_lp;
use crate::Rational;

/// Feasibility tolerance of [`gamma_objective`].
pub const FEASIBILITY_TOL: f64 = 1e-9;

/// Exact deviations of a witness from the feasible set and from optimality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessResiduals {
    /// `sum(x)`.
    pub sum: Rational,
    /// `max |x_v| - 1`.
    pub sup_norm: Rational,
    /// `max_{uv in E} |x_u - x_v| - gamma`.
    pub edge_gap: Rational,
}

impl WitnessResiduals {
    pub fn all_zero(&self) -> bool {
        self.sum.is_zero() && self.sup_norm.is_zero() && self.edge_gap.is_zero()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GammaCertificate {
    pub gamma: Rational,
    pub connected: bool,
    /// Smallest-id vertex of maximum transmission; `None` when disconnected.
    pub attaining_vertex: Option<Vertex>,
    /// Maximum transmission; `None` when disconnected.
    pub d_max: Option<u64>,
    pub witness: Vec<Rational>,
    pub witness_valid: bool,
    pub residuals: WitnessResiduals,
    /// Optimal LP vector, filled in only if the shell witness is rejected.
    pub fallback: Option<Vec<f64>>,
}

impl GammaCertificate {
    pub fn gamma_f64(&self) -> f64 {
        to_f64(&self.gamma)
    }
}

pub(crate) fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Computes `gamma(G)` exactly.
///
/// Connected graphs get `n / D_M(G)` and the shell vector around the
/// smallest-id vertex `u` of maximum transmission: `x_v = 1 - d(u, v) * gamma`.
/// Disconnected graphs get 0 and a vector that is constant on each side of
/// the cut between a smallest component and the rest.
pub fn gamma(g: &Graph) -> Result<GammaCertificate> {
    if g.n() < 2 {
        return Err(Error::TooSmall { n: g.n(), min: 2 });
    }
    match transmission_table(g) {
        Ok(table) => gamma_from_table(g, &table),
        Err(Error::DisconnectedGraph) => Ok(disconnected_certificate(g)),
        Err(e) => Err(e),
    }
}

/// Same as [`gamma`] for a connected graph whose transmissions are already
/// known.
pub fn gamma_from_table(g: &Graph, table: &TransmissionTable) -> Result<GammaCertificate> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    let value = Rational::new(n as i128, table.d_max as i128);
    let u = table.argmax[0];

    let mut bfs = Bfs::new(n);
    bfs.run(g, u);
    let one = Rational::from_integer(1);
    let witness: Vec<Rational> = (0..n)
        .map(|v| {
            let r = bfs.dist(v).ok_or(Error::DisconnectedGraph)?;
            Ok(one - value * Rational::from_integer(i128::from(r)))
        })
        .collect::<Result<_>>()?;

    let residuals = witness_residuals(g, &witness, &value);
    let witness_valid = residuals.all_zero();
    let fallback = if witness_valid { None } else { Some(gamma_lp(g)?.assignment) };
    Ok(GammaCertificate {
        gamma: value,
        connected: true,
        attaining_vertex: Some(u),
        d_max: Some(table.d_max),
        witness,
        witness_valid,
        residuals,
        fallback,
    })
}

fn disconnected_certificate(g: &Graph) -> GammaCertificate {
    let comps = components(g);
    let smallest = comps.iter().min_by_key(|c| c.len()).expect("n >= 1");
    let inside = smallest.len() as i128;
    let outside = g.n() as i128 - inside;
    let mut witness = vec![Rational::new(-inside, outside); g.n()];
    for &v in smallest {
        witness[v] = Rational::from_integer(1);
    }
    let value = Rational::zero();
    let residuals = witness_residuals(g, &witness, &value);
    GammaCertificate {
        gamma: value,
        connected: false,
        attaining_vertex: None,
        d_max: None,
        witness_valid: residuals.all_zero(),
        witness,
        residuals,
        fallback: None,
    }
}

/// `max_{uv in E} |x_u - x_v|` in exact arithmetic (0 for an edgeless graph).
pub fn exact_objective(g: &Graph, x: &[Rational]) -> Rational {
    g.edges().map(|(u, v)| (x[u] - x[v]).abs()).max().unwrap_or_else(Rational::zero)
}

pub fn witness_residuals(g: &Graph, x: &[Rational], gamma: &Rational) -> WitnessResiduals {
    let sum = x.iter().fold(Rational::zero(), |acc, v| acc + v);
    let sup = x.iter().map(Signed::abs).max().unwrap_or_else(Rational::zero);
    WitnessResiduals { sum, sup_norm: sup - Rational::from_integer(1), edge_gap: exact_objective(g, x) - gamma }
}

/// Objective `max_{uv in E} |x_u - x_v|` of a feasible float vector.
///
/// Feasible means `|sum(x)| <= 1e-9` and `| max |x_v| - 1 | <= 1e-9`.
pub fn gamma_objective(g: &Graph, x: &[f64]) -> Result<f64> {
    if x.len() != g.n() {
        return Err(Error::InfeasibleVector("length differs from vertex count"));
    }
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::InfeasibleVector("non-finite entry"));
    }
    let sum: f64 = x.iter().sum();
    if sum.abs() > FEASIBILITY_TOL {
        return Err(Error::InfeasibleVector("entries do not sum to zero"));
    }
    let sup = x.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    if (sup - 1.0).abs() > FEASIBILITY_TOL {
        return Err(Error::InfeasibleVector("sup norm is not one"));
    }
    Ok(g.edges().map(|(u, v)| (x[u] - x[v]).abs()).fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;

    fn g(spec: FamilySpec) -> Graph {
        spec.generate().unwrap()
    }

    fn r(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn gamma_of_named_graphs() {
        let cases = [
            (FamilySpec::Complete(5), r(5, 4)),
            (FamilySpec::Cycle(6), r(2, 3)),
            (FamilySpec::Path(5), r(1, 2)),
            (FamilySpec::Star(6), r(2, 3)),
            (FamilySpec::CompleteBipartite(3, 2), r(5, 6)),
        ];
        for (spec, want) in cases {
            let cert = gamma(&g(spec)).unwrap();
            assert_eq!(cert.gamma, want, "{spec}");
            assert!(cert.connected);
            assert!(cert.witness_valid, "{spec}");
            assert!(cert.fallback.is_none());
        }
    }

    #[test]
    fn path_attains_at_endpoint_with_linear_witness() {
        let cert = gamma(&g(FamilySpec::Path(5))).unwrap();
        assert_eq!(cert.attaining_vertex, Some(0));
        assert_eq!(cert.d_max, Some(10));
        let want: Vec<_> = [2, 1, 0, -1, -2].iter().map(|&k| r(k, 2)).collect();
        assert_eq!(cert.witness, want);
    }

    #[test]
    fn disconnected_two_block_witness() {
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let cert = gamma(&two_k2).unwrap();
        assert_eq!(cert.gamma, r(0, 1));
        assert!(!cert.connected);
        assert_eq!(cert.attaining_vertex, None);
        assert_eq!(cert.witness, [r(1, 1), r(1, 1), r(-1, 1), r(-1, 1)]);
        assert!(cert.witness_valid);

        // Smallest component is {2}; the rest carries -1/4.
        let uneven = Graph::from_edges(5, [(0, 1), (1, 3), (3, 4)]).unwrap();
        let cert = gamma(&uneven).unwrap();
        assert_eq!(cert.witness[2], r(1, 1));
        assert_eq!(cert.witness[0], r(-1, 4));
        assert!(cert.witness_valid);
    }

    #[test]
    fn single_vertex_is_rejected() {
        assert_eq!(gamma(&Graph::empty(1).unwrap()), Err(Error::TooSmall { n: 1, min: 2 }));
    }

    #[test]
    fn objective_examples() {
        let p3 = g(FamilySpec::Path(3));
        assert_eq!(gamma_objective(&p3, &[1.0, 0.0, -1.0]), Ok(1.0));
        let k3 = g(FamilySpec::Complete(3));
        let val = gamma_objective(&k3, &[1.0, -0.5, -0.5]).unwrap();
        assert!((val - 1.5).abs() < 1e-15);
        assert!(matches!(gamma_objective(&p3, &[1.0, 1.0, 1.0]), Err(Error::InfeasibleVector(_))));
        assert!(matches!(gamma_objective(&p3, &[0.5, 0.0, -0.5]), Err(Error::InfeasibleVector(_))));
        assert!(matches!(gamma_objective(&p3, &[1.0, -1.0]), Err(Error::InfeasibleVector(_))));
    }

    #[test]
    fn residuals_flag_a_bad_witness() {
        let p3 = g(FamilySpec::Path(3));
        let x = [r(1, 1), r(1, 1), r(-1, 1)];
        let res = witness_residuals(&p3, &x, &r(1, 1));
        assert_eq!(res.sum, r(1, 1));
        assert_eq!(res.edge_gap, r(1, 1));
        assert!(!res.all_zero());
    }
}
