//! Dense two-phase primal simplex with Bland's rule.
//!
//! The program is first rewritten in standard form:
//!
//! - a variable with equal bounds is substituted by its value,
//! - a finite lower bound is shifted to zero (`x = lo + x'`) and a finite
//!   upper bound becomes the row `x' <= hi - lo`,
//! - a variable bounded only above is reflected (`x = hi - x'`),
//! - a free variable is split into `x+ - x-`,
//! - rows are negated where needed so every right-hand side is non-negative,
//!   then get a slack (`<=`), a surplus plus an artificial (`>=`) or an
//!   artificial (`=`).
//!
//! Phase 1 minimizes the sum of artificials, phase 2 the real objective.
//! Entering columns and leaving rows are both chosen by smallest index, which
//! rules out cycling on degenerate vertices.

use alloc::vec;
use alloc::vec::Vec;

use super::{LinearProgram, LpSolution, LpStatus, Relation};
use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-9;

/// Entries below this magnitude are flushed to zero after a pivot.
const DROP_TOL: f64 = 1e-13;

#[derive(Debug, Clone, Copy)]
enum Column {
    Fixed(f64),
    Shifted { col: usize, offset: f64, sign: f64 },
    Split { pos: usize, neg: usize },
}

struct Tableau {
    rows: Vec<Vec<f64>>,
    basis: Vec<usize>,
    /// Reduced costs; the last entry holds minus the objective value.
    cost: Vec<f64>,
    width: usize,
    pivots: usize,
    pivot_cap: usize,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn rhs(&self, i: usize) -> f64 {
        self.rows[i][self.width]
    }

    fn set_costs(&mut self, costs: &[f64]) {
        let mut d = costs.to_vec();
        d.push(0.0);
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let cb = costs[b];
            if cb != 0.0 {
                for (dj, &a) in d.iter_mut().zip(row) {
                    *dj -= cb * a;
                }
            }
        }
        self.cost = d;
    }

    fn pivot(&mut self, r: usize, e: usize) {
        let inv = 1.0 / self.rows[r][e];
        let mut nz = Vec::new();
        for (j, a) in self.rows[r].iter_mut().enumerate() {
            if *a != 0.0 {
                *a *= inv;
                if a.abs() < DROP_TOL {
                    *a = 0.0;
                } else {
                    nz.push((j, *a));
                }
            }
        }
        self.rows[r][e] = 1.0;
        let eliminate = |row: &mut Vec<f64>| {
            let f = row[e];
            if f == 0.0 {
                return;
            }
            for &(j, a) in &nz {
                let v = row[j] - f * a;
                row[j] = if v.abs() < DROP_TOL { 0.0 } else { v };
            }
            row[e] = 0.0;
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.cost);
        self.basis[r] = e;
        self.pivots += 1;
    }

    /// Runs primal simplex over columns `0..allowed`.
    fn optimize(&mut self, allowed: usize, tol: f64) -> Result<Outcome> {
        loop {
            let Some(e) = (0..allowed).find(|&j| self.cost[j] < -tol) else {
                return Ok(Outcome::Optimal);
            };
            let mut leave: Option<(usize, f64)> = None;
            for i in 0..self.rows.len() {
                let a = self.rows[i][e];
                if a <= tol {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                leave = match leave {
                    None => Some((i, ratio)),
                    Some((k, best)) => {
                        let tie = (ratio - best).abs() <= tol * (1.0 + best.abs());
                        if (tie && self.basis[i] < self.basis[k]) || (!tie && ratio < best) {
                            Some((i, ratio))
                        } else {
                            Some((k, best))
                        }
                    }
                };
            }
            let Some((r, _)) = leave else {
                return Ok(Outcome::Unbounded);
            };
            if self.pivots >= self.pivot_cap {
                return Err(Error::IterationCap(self.pivot_cap));
            }
            self.pivot(r, e);
        }
    }
}

/// Solves `lp` to optimality, infeasibility or unboundedness.
///
/// `tol` is the pivot tolerance: reduced costs above `-tol` count as
/// non-negative and column entries at or below `tol` are never pivoted on.
pub fn simplex_solve(lp: &LinearProgram, tol: f64) -> Result<LpSolution> {
    lp.validate()?;

    let mut columns = Vec::with_capacity(lp.num_vars);
    let mut structural = 0;
    let mut bound_rows: Vec<(usize, f64)> = Vec::new();
    for &(lo, hi) in &lp.bounds {
        let column = if lo == hi {
            Column::Fixed(lo)
        } else if lo.is_finite() {
            if hi.is_finite() {
                bound_rows.push((structural, hi - lo));
            }
            Column::Shifted { col: structural, offset: lo, sign: 1.0 }
        } else if hi.is_finite() {
            Column::Shifted { col: structural, offset: hi, sign: -1.0 }
        } else {
            structural += 1;
            Column::Split { pos: structural - 1, neg: structural }
        };
        if !matches!(column, Column::Fixed(_)) {
            structural += 1;
        }
        columns.push(column);
    }

    // Structural rows with non-negative right-hand sides.
    let mut rows: Vec<(Vec<f64>, Relation, f64)> = Vec::new();
    for c in &lp.constraints {
        let mut coeffs = vec![0.0; structural];
        let mut rhs = c.rhs;
        for (&a, column) in c.coeffs.iter().zip(&columns) {
            if a == 0.0 {
                continue;
            }
            match *column {
                Column::Fixed(v) => rhs -= a * v,
                Column::Shifted { col, offset, sign } => {
                    coeffs[col] += sign * a;
                    rhs -= a * offset;
                }
                Column::Split { pos, neg } => {
                    coeffs[pos] += a;
                    coeffs[neg] -= a;
                }
            }
        }
        rows.push((coeffs, c.relation, rhs));
    }
    for &(col, ub) in &bound_rows {
        let mut coeffs = vec![0.0; structural];
        coeffs[col] = 1.0;
        rows.push((coeffs, Relation::Le, ub));
    }
    for (coeffs, relation, rhs) in rows.iter_mut() {
        if *rhs < 0.0 {
            coeffs.iter_mut().for_each(|a| *a = -*a);
            *rhs = -*rhs;
            *relation = match relation {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
    }

    let slacks = rows.iter().filter(|r| r.1 != Relation::Eq).count();
    let artificial_start = structural + slacks;
    let artificials = rows.iter().filter(|r| r.1 != Relation::Le).count();
    let width = artificial_start + artificials;

    let mut tableau_rows = Vec::with_capacity(rows.len());
    let mut basis = Vec::with_capacity(rows.len());
    let (mut next_slack, mut next_art) = (structural, artificial_start);
    let mut rhs_scale = 0.0f64;
    for (coeffs, relation, rhs) in rows {
        let mut row = coeffs;
        row.resize(width + 1, 0.0);
        row[width] = rhs;
        rhs_scale = rhs_scale.max(rhs);
        match relation {
            Relation::Le => {
                row[next_slack] = 1.0;
                basis.push(next_slack);
                next_slack += 1;
            }
            Relation::Ge => {
                row[next_slack] = -1.0;
                next_slack += 1;
                row[next_art] = 1.0;
                basis.push(next_art);
                next_art += 1;
            }
            Relation::Eq => {
                row[next_art] = 1.0;
                basis.push(next_art);
                next_art += 1;
            }
        }
        tableau_rows.push(row);
    }

    let pivot_cap = 1000 + 50 * (tableau_rows.len() + width);
    let mut t = Tableau { rows: tableau_rows, basis, cost: Vec::new(), width, pivots: 0, pivot_cap };

    if artificials > 0 {
        let mut phase1 = vec![0.0; width];
        phase1[artificial_start..].iter_mut().for_each(|c| *c = 1.0);
        t.set_costs(&phase1);
        // Phase 1 is bounded below by zero.
        t.optimize(width, tol)?;
        let infeasibility = -t.cost[width];
        if infeasibility > 100.0 * tol * (1.0 + rhs_scale) {
            return Ok(LpSolution { status: LpStatus::Infeasible, objective: f64::NAN, assignment: None });
        }
        // Pivot remaining zero-level artificials out, dropping redundant rows.
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= artificial_start {
                match (0..artificial_start).find(|&j| t.rows[i][j].abs() > tol) {
                    Some(j) => t.pivot(i, j),
                    None => {
                        t.rows.remove(i);
                        t.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    let mut costs = vec![0.0; width];
    for (column, &c) in columns.iter().zip(&lp.objective) {
        match *column {
            Column::Fixed(_) => {}
            Column::Shifted { col, sign, .. } => costs[col] += sign * c,
            Column::Split { pos, neg } => {
                costs[pos] += c;
                costs[neg] -= c;
            }
        }
    }
    t.set_costs(&costs);
    if let Outcome::Unbounded = t.optimize(artificial_start, tol)? {
        return Ok(LpSolution { status: LpStatus::Unbounded, objective: f64::NEG_INFINITY, assignment: None });
    }

    let mut values = vec![0.0; structural];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < structural {
            values[b] = t.rhs(i);
        }
    }
    let assignment: Vec<f64> = columns
        .iter()
        .map(|column| match *column {
            Column::Fixed(v) => v,
            Column::Shifted { col, offset, sign } => offset + sign * values[col],
            Column::Split { pos, neg } => values[pos] - values[neg],
        })
        .collect();
    Ok(LpSolution {
        status: LpStatus::Optimal,
        objective: lp.objective_value(&assignment),
        assignment: Some(assignment),
    })
}
