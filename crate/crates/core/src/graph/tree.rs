use alloc::vec;
use alloc::vec::Vec;

use super::distance::{is_connected, TransmissionTable};
use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// Degree-one vertices, ascending.
pub fn pendant_vertices(g: &Graph) -> Vec<Vertex> {
    (0..g.n()).filter(|&u| g.degree(u) == 1).collect()
}

pub fn is_tree(g: &Graph) -> bool {
    g.m() + 1 == g.n() && is_connected(g)
}

/// Transmissions of a tree in linear time.
///
/// Roots the tree at vertex 0, accumulates subtree sizes bottom-up, then
/// re-roots top-down: moving the root across edge `pc` changes the
/// transmission by `n - 2 * size(c)`.
pub fn tree_transmissions(g: &Graph) -> Result<TransmissionTable> {
    if !is_tree(g) {
        return Err(Error::NotATree);
    }
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0u64; n];
    let mut order = Vec::with_capacity(n);
    order.push(0);
    parent[0] = 0;
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &v in g.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                depth[v] = depth[u] + 1;
                order.push(v);
            }
        }
    }

    let mut size = vec![1u64; n];
    for &u in order.iter().skip(1).rev() {
        size[parent[u]] += size[u];
    }

    let n64 = n as u64;
    let mut tr = vec![0u64; n];
    tr[0] = depth.iter().sum();
    for &u in order.iter().skip(1) {
        // size[u] >= 1 and n - size[u] >= 1, so this never underflows.
        tr[u] = tr[parent[u]] + n64 - 2 * size[u];
    }
    Ok(TransmissionTable::from_transmissions(tr))
}
