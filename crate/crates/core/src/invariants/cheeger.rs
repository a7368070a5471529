//! Exact Cheeger constant by subset enumeration.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::distance::is_connected;
use crate::graph::{Graph, Vertex};
use crate::Rational;

/// Largest graph accepted by default (2^23 subsets with vertex 0 pinned).
pub const DEFAULT_MAX_N: usize = 24;
/// Bitmask width limit, independent of any user override.
pub const HARD_MAX_N: usize = 63;

#[derive(Debug, Clone, PartialEq)]
pub struct CheegerCut {
    /// `|boundary(S)| / min(vol(S), vol(S^c))`, exact.
    pub ratio: Rational,
    pub value: f64,
    /// A minimizing subset, ascending. Always contains vertex 0.
    pub subset: Vec<Vertex>,
}

/// `h_G` with the default size cap.
pub fn cheeger_constant(g: &Graph) -> Result<CheegerCut> {
    cheeger_constant_capped(g, DEFAULT_MAX_N)
}

/// Minimum of `|boundary(S)| / min(vol(S), vol(S^c))` over non-empty proper
/// subsets `S`.
///
/// `h(S) = h(S^c)`, so only subsets containing vertex 0 are visited. They are
/// walked in Gray-code order, so each step moves one vertex and updates the
/// boundary and volume in constant time with neighbor bitmasks.
pub fn cheeger_constant_capped(g: &Graph, max_n: usize) -> Result<CheegerCut> {
    let n = g.n();
    let cap = max_n.min(HARD_MAX_N);
    if n > cap {
        return Err(Error::TooLarge { n, max: cap });
    }
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    if !is_connected(g) {
        return Err(Error::DisconnectedGraph);
    }
    let masks: Vec<u64> = (0..n).map(|u| g.neighbors(u).iter().fold(0u64, |m, &v| m | (1 << v))).collect();
    let degree: Vec<u64> = (0..n).map(|u| g.degree(u) as u64).collect();
    let total_volume = 2 * g.m() as u64;
    let full = (1u64 << n) - 1;

    let mut set = 1u64;
    let mut boundary = degree[0];
    let mut volume = degree[0];
    let mut best = (boundary, volume.min(total_volume - volume), set);

    let steps = 1u64 << (n - 1);
    for i in 1..steps {
        let v = i.trailing_zeros() as usize + 1;
        let bit = 1u64 << v;
        let inside = u64::from((masks[v] & set).count_ones());
        if set & bit == 0 {
            set |= bit;
            boundary = boundary + degree[v] - 2 * inside;
            volume += degree[v];
        } else {
            set &= !bit;
            boundary = boundary + 2 * inside - degree[v];
            volume -= degree[v];
        }
        if set == full {
            continue;
        }
        let denom = volume.min(total_volume - volume);
        // boundary / denom < best.0 / best.1
        if u128::from(boundary) * u128::from(best.1) < u128::from(best.0) * u128::from(denom) {
            best = (boundary, denom, set);
        }
    }

    let ratio = Rational::new(best.0 as i128, best.1 as i128);
    Ok(CheegerCut {
        value: best.0 as f64 / best.1 as f64,
        ratio,
        subset: (0..n).filter(|&v| best.2 >> v & 1 == 1).collect(),
    })
}
