//! Optimization-based cross-checks: `gamma` as the best of `n` linear
//! programs, and `b(G)` by enumerating sign patterns on tiny graphs.

use alloc::vec;
use alloc::vec::Vec;

use super::simplex::{simplex_solve, DEFAULT_TOL};
use super::{LinearProgram, LpStatus, Relation};
use crate::error::{Error, Result};
use crate::graph::distance::is_connected;
use crate::graph::{Graph, Vertex};

/// Default size cap of [`b_small_oracle`] (2^(n-1) programs).
pub const B_ORACLE_MAX_N: usize = 12;

/// The program fixing `x_k = 1`:
///
/// ```text
/// minimize y
///   x_i - x_j <= y and x_j - x_i <= y   for every edge ij
///   sum(x) = 0
///   -1 <= x_j <= 1,  x_k = 1,  0 <= y <= 2
/// ```
///
/// Variables are `x_0 .. x_{n-1}` followed by `y` at index `n`.
pub fn build_lp_k(g: &Graph, k: Vertex) -> Result<LinearProgram> {
    g.check_vertex(k)?;
    let n = g.n();
    let y = n;
    let mut lp = LinearProgram::new(n + 1);
    lp.objective[y] = 1.0;
    for (i, j) in g.edges() {
        lp.push_sparse(&[(i, 1.0), (j, -1.0), (y, -1.0)], Relation::Le, 0.0);
        lp.push_sparse(&[(i, -1.0), (j, 1.0), (y, -1.0)], Relation::Le, 0.0);
    }
    let mut sum = vec![1.0; n + 1];
    sum[y] = 0.0;
    lp.push(sum, Relation::Eq, 0.0);
    for b in lp.bounds.iter_mut().take(n) {
        *b = (-1.0, 1.0);
    }
    lp.bounds[k] = (1.0, 1.0);
    lp.bounds[y] = (0.0, 2.0);
    Ok(lp)
}

/// Optimum of the program fixing `x_k = 1`, with its `x` part.
pub fn lp_k_optimum(g: &Graph, k: Vertex) -> Result<(f64, Vec<f64>)> {
    let lp = build_lp_k(g, k)?;
    let sol = simplex_solve(&lp, DEFAULT_TOL)?;
    match (sol.status, sol.assignment) {
        (LpStatus::Optimal, Some(mut x)) => {
            x.truncate(g.n());
            Ok((sol.objective, x))
        }
        (LpStatus::Infeasible, _) => Err(Error::UnexpectedStatus("infeasible")),
        _ => Err(Error::UnexpectedStatus("unbounded")),
    }
}

/// Result of solving every per-vertex program.
#[derive(Debug, Clone, PartialEq)]
pub struct LpGamma {
    /// Minimum of `per_k`.
    pub gamma: f64,
    pub per_k: Vec<f64>,
    /// Smallest `k` attaining the minimum.
    pub best_k: Vertex,
    /// Optimal `x` of the program for `best_k`.
    pub assignment: Vec<f64>,
}

pub fn gamma_lp(g: &Graph) -> Result<LpGamma> {
    if g.n() < 2 {
        return Err(Error::TooSmall { n: g.n(), min: 2 });
    }
    if !is_connected(g) {
        return Err(Error::DisconnectedGraph);
    }
    let mut per_k = Vec::with_capacity(g.n());
    let mut best: Option<(Vertex, Vec<f64>)> = None;
    for k in 0..g.n() {
        let (value, x) = lp_k_optimum(g, k)?;
        let improves = best.as_ref().is_none_or(|(b, _)| value < per_k[*b]);
        per_k.push(value);
        if improves {
            best = Some((k, x));
        }
    }
    let (best_k, assignment) = best.expect("n >= 2");
    Ok(LpGamma { gamma: per_k[best_k], per_k, best_k, assignment })
}

/// `gamma(G)` as the minimum over `k` of the per-vertex programs.
pub fn gamma_via_lp(g: &Graph) -> Result<f64> {
    Ok(gamma_lp(g)?.gamma)
}

/// `b(G)` with the default size cap.
pub fn b_small_oracle(g: &Graph) -> Result<f64> {
    b_small_oracle_capped(g, B_ORACLE_MAX_N)
}

/// `b(G) = min { sum_{uv in E} |x_u - x_v| : sum(x) = 0, ||x||_1 = 1 }`.
///
/// Inside a closed orthant with signs `s`, `||x||_1 = sum(s_v x_v)` is
/// linear, so each orthant is one program. Negating `x` maps orthant `s` to
/// `-s` without changing the objective, so only patterns with `s_0 = +1` are
/// solved. All-equal patterns are skipped: they force `x = 0`.
pub fn b_small_oracle_capped(g: &Graph, max_n: usize) -> Result<f64> {
    let n = g.n();
    if n > max_n {
        return Err(Error::TooLarge { n, max: max_n });
    }
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    if !is_connected(g) {
        return Err(Error::DisconnectedGraph);
    }
    let edges: Vec<_> = g.edges().collect();
    let m = edges.len();
    let mut best = f64::INFINITY;
    for negative in 1u64..(1 << (n - 1)) {
        let sign = |v: usize| if v > 0 && negative >> (v - 1) & 1 == 1 { -1.0 } else { 1.0 };
        let mut lp = LinearProgram::new(n + m);
        for v in 0..n {
            lp.bounds[v] = if sign(v) > 0.0 { (0.0, f64::INFINITY) } else { (f64::NEG_INFINITY, 0.0) };
        }
        for (e, &(u, v)) in edges.iter().enumerate() {
            let t = n + e;
            lp.objective[t] = 1.0;
            lp.push_sparse(&[(u, 1.0), (v, -1.0), (t, -1.0)], Relation::Le, 0.0);
            lp.push_sparse(&[(u, -1.0), (v, 1.0), (t, -1.0)], Relation::Le, 0.0);
        }
        let ones: Vec<(usize, f64)> = (0..n).map(|v| (v, 1.0)).collect();
        lp.push_sparse(&ones, Relation::Eq, 0.0);
        let signed: Vec<(usize, f64)> = (0..n).map(|v| (v, sign(v))).collect();
        lp.push_sparse(&signed, Relation::Eq, 1.0);

        let sol = simplex_solve(&lp, DEFAULT_TOL)?;
        match sol.status {
            LpStatus::Optimal => best = best.min(sol.objective),
            LpStatus::Infeasible => {}
            LpStatus::Unbounded => return Err(Error::UnexpectedStatus("unbounded")),
        }
    }
    Ok(best)
}
