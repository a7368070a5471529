//! Simple undirected graphs on dense `0..n` vertex ids.

pub mod distance;
pub mod tree;

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Immutable simple undirected graph stored as sorted adjacency lists.
///
/// Construction rejects self-loops, repeated edges and out-of-range ids
/// instead of repairing them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edges: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices from unordered vertex pairs.
    pub fn from_edges<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adjacency: Vec<Vec<Vertex>> = vec![Vec::new(); n];
        let mut edges = 0;
        for (u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            edges += 1;
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = if u < w[0] { (u, w[0]) } else { (w[0], u) };
                return Err(Error::DuplicateEdge(a, b));
            }
        }
        Ok(Graph { adjacency, edges })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edges(n, core::iter::empty())
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.edges
    }

    pub fn neighbors(&self, u: Vertex) -> &[Vertex] {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: Vertex) -> usize {
        self.adjacency[u].len()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.iter().map(Vec::len)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        self.degrees().all(|d| d == k).then_some(k)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edges == n * (n - 1) / 2
    }

    pub(crate) fn check_vertex(&self, u: Vertex) -> Result<()> {
        if u < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: u, n: self.n() })
        }
    }

    /// Copy of the graph with the extra edge `uv`.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        for (a, b) in [(u, v), (v, u)] {
            let list = &mut g.adjacency[a];
            let at = list.partition_point(|&w| w < b);
            list.insert(at, b);
        }
        g.edges += 1;
        Ok(g)
    }
}
