//! Rayon versions of the per-vertex loops. Results are assembled in vertex
//! order, so output does not depend on scheduling.

use gamma_core::lp::oracle::{lp_k_optimum, LpGamma};
use gamma_core::{Error, Graph, TransmissionSweeper, TransmissionTable};
use rayon::prelude::*;

/// Like [`gamma_core::transmission_table`], one sweeper per chunk of sources.
pub fn transmission_table(g: &Graph) -> Result<TransmissionTable, Error> {
    let n = g.n();
    let chunk = n.div_ceil(4 * rayon::current_num_threads()).max(1);
    let starts: Vec<usize> = (0..n).step_by(chunk).collect();
    let parts: Vec<Option<Vec<u64>>> = starts
        .into_par_iter()
        .map(|start| {
            let mut sweeper = TransmissionSweeper::new(g);
            (start..(start + chunk).min(n)).map(|u| sweeper.transmission(u)).collect()
        })
        .collect();
    let tr: Option<Vec<u64>> = parts.into_iter().collect::<Option<Vec<_>>>().map(|p| p.concat());
    tr.map(TransmissionTable::from_transmissions).ok_or(Error::DisconnectedGraph)
}

/// Like [`gamma_core::lp::oracle::gamma_lp`], solving the programs in
/// parallel.
pub fn gamma_lp(g: &Graph) -> Result<LpGamma, Error> {
    if g.n() < 2 {
        return Err(Error::TooSmall { n: g.n(), min: 2 });
    }
    if !gamma_core::is_connected(g) {
        return Err(Error::DisconnectedGraph);
    }
    let solved: Vec<(f64, Vec<f64>)> =
        (0..g.n()).into_par_iter().map(|k| lp_k_optimum(g, k)).collect::<Result<_, _>>()?;
    let mut best_k = 0;
    for (k, (value, _)) in solved.iter().enumerate() {
        if *value < solved[best_k].0 {
            best_k = k;
        }
    }
    let per_k: Vec<f64> = solved.iter().map(|(v, _)| *v).collect();
    let assignment = solved.into_iter().nth(best_k).unwrap().1;
    Ok(LpGamma { gamma: per_k[best_k], per_k, best_k, assignment })
}
