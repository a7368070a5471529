//! Breadth-first distances, vertex transmissions and the quantities derived
//! from them.

use alloc::vec;
use alloc::vec::Vec;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

const UNSEEN: u32 = u32::MAX;

/// Reusable BFS buffers. The unseen marker never leaves this type; public
/// results use `Option<u32>`.
pub(crate) struct Bfs {
    dist: Vec<u32>,
    queue: Vec<Vertex>,
}

pub(crate) struct Sweep {
    pub reached: usize,
    pub transmission: u64,
    pub eccentricity: u32,
}

impl Bfs {
    pub(crate) fn new(n: usize) -> Self {
        Bfs { dist: vec![UNSEEN; n], queue: Vec::with_capacity(n) }
    }

    pub(crate) fn run(&mut self, g: &Graph, source: Vertex) -> Sweep {
        self.dist.fill(UNSEEN);
        self.queue.clear();
        self.dist[source] = 0;
        self.queue.push(source);
        let mut head = 0;
        let mut transmission = 0u64;
        let mut eccentricity = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            let du = self.dist[u];
            transmission += u64::from(du);
            eccentricity = du;
            for &v in g.neighbors(u) {
                if self.dist[v] == UNSEEN {
                    self.dist[v] = du + 1;
                    self.queue.push(v);
                }
            }
        }
        Sweep { reached: self.queue.len(), transmission, eccentricity }
    }

    pub(crate) fn dist(&self, v: Vertex) -> Option<u32> {
        let d = self.dist[v];
        (d != UNSEEN).then_some(d)
    }

    /// Vertices in the order the last sweep discovered them.
    pub(crate) fn order(&self) -> &[Vertex] {
        &self.queue
    }
}

/// Hop distances from one source vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceProfile {
    pub source: Vertex,
    /// `None` marks vertices in other components.
    pub dist: Vec<Option<u32>>,
    /// Largest finite distance.
    pub eccentricity: u32,
    /// Sum of distances; present only when every vertex is reachable.
    pub transmission: Option<u64>,
}

impl DistanceProfile {
    pub fn reaches_all(&self) -> bool {
        self.transmission.is_some()
    }
}

/// Transmission of every vertex of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransmissionTable {
    pub tr: Vec<u64>,
    /// Maximum transmission, the largest row sum of the distance matrix.
    pub d_max: u64,
    /// Vertices attaining `d_max`, ascending.
    pub argmax: Vec<Vertex>,
    /// Sum of distances over unordered pairs, `sum(tr) / 2`.
    pub wiener: u64,
}

impl TransmissionTable {
    /// Derives the summary fields from per-vertex transmissions.
    ///
    /// # Panics
    /// If `tr` is empty.
    pub fn from_transmissions(tr: Vec<u64>) -> Self {
        let d_max = *tr.iter().max().expect("at least one vertex");
        let argmax = tr.iter().enumerate().filter(|&(_, &t)| t == d_max).map(|(u, _)| u).collect();
        let wiener = tr.iter().sum::<u64>() / 2;
        TransmissionTable { tr, d_max, argmax, wiener }
    }

    pub fn is_regular(&self) -> bool {
        self.tr.iter().all(|&t| t == self.d_max)
    }
}

pub fn bfs_distances(g: &Graph, u: Vertex) -> Result<DistanceProfile> {
    g.check_vertex(u)?;
    let mut bfs = Bfs::new(g.n());
    let sweep = bfs.run(g, u);
    let dist = (0..g.n()).map(|v| bfs.dist(v)).collect();
    Ok(DistanceProfile {
        source: u,
        dist,
        eccentricity: sweep.eccentricity,
        transmission: (sweep.reached == g.n()).then_some(sweep.transmission),
    })
}

pub fn is_connected(g: &Graph) -> bool {
    Bfs::new(g.n()).run(g, 0).reached == g.n()
}

/// Connected components, each sorted, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut bfs = Bfs::new(g.n());
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        bfs.run(g, s);
        let mut comp = bfs.order().to_vec();
        comp.sort_unstable();
        for &v in &comp {
            seen[v] = true;
        }
        out.push(comp);
    }
    out
}

/// Computes single-source transmissions, reusing buffers between calls.
///
/// Dense graphs use a bit-parallel BFS: each level is the union of the
/// neighbour masks of the frontier, so one sweep costs `O(n^2 / 64)` word
/// operations instead of `O(n + m)`.
pub struct TransmissionSweeper<'g> {
    g: &'g Graph,
    kind: SweepKind,
}

enum SweepKind {
    Queue(Bfs),
    Bits(BitBfs),
}

impl<'g> TransmissionSweeper<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let (n, m) = (g.n() as u128, g.m() as u128);
        let kind = if 64 * m > n * n { SweepKind::Bits(BitBfs::new(g)) } else { SweepKind::Queue(Bfs::new(g.n())) };
        TransmissionSweeper { g, kind }
    }

    /// `tr(u)`, or `None` if some vertex is unreachable from `u`.
    ///
    /// # Panics
    /// If `u` is not a vertex of the graph.
    pub fn transmission(&mut self, u: Vertex) -> Option<u64> {
        let n = self.g.n();
        match &mut self.kind {
            SweepKind::Queue(bfs) => {
                let sweep = bfs.run(self.g, u);
                (sweep.reached == n).then_some(sweep.transmission)
            }
            SweepKind::Bits(bits) => bits.run(u),
        }
    }
}

struct BitBfs {
    words: usize,
    n: usize,
    neighbors: Vec<u64>,
    seen: Vec<u64>,
    frontier: Vec<u64>,
    next: Vec<u64>,
}

impl BitBfs {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let words = n.div_ceil(64);
        let mut neighbors = vec![0u64; n * words];
        for (u, v) in g.edges() {
            neighbors[u * words + v / 64] |= 1 << (v % 64);
            neighbors[v * words + u / 64] |= 1 << (u % 64);
        }
        BitBfs { words, n, neighbors, seen: vec![0; words], frontier: vec![0; words], next: vec![0; words] }
    }

    fn run(&mut self, source: Vertex) -> Option<u64> {
        let w = self.words;
        self.seen.fill(0);
        self.frontier.fill(0);
        self.seen[source / 64] |= 1 << (source % 64);
        self.frontier[source / 64] |= 1 << (source % 64);
        let (mut reached, mut level, mut transmission) = (1usize, 0u64, 0u64);
        loop {
            self.next.fill(0);
            for (i, &word) in self.frontier.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let v = i * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let row = &self.neighbors[v * w..(v + 1) * w];
                    self.next.iter_mut().zip(row).for_each(|(a, b)| *a |= b);
                }
            }
            let mut added = 0usize;
            for ((next, seen), frontier) in self.next.iter_mut().zip(&mut self.seen).zip(&mut self.frontier) {
                *next &= !*seen;
                *seen |= *next;
                *frontier = *next;
                added += next.count_ones() as usize;
            }
            if added == 0 {
                break;
            }
            level += 1;
            reached += added;
            transmission += level * added as u64;
        }
        (reached == self.n).then_some(transmission)
    }
}

/// One BFS per vertex. Fails on disconnected input.
pub fn transmission_table(g: &Graph) -> Result<TransmissionTable> {
    let mut sweeper = TransmissionSweeper::new(g);
    let tr = (0..g.n()).map(|u| sweeper.transmission(u).ok_or(Error::DisconnectedGraph)).collect::<Result<Vec<_>>>()?;
    Ok(TransmissionTable::from_transmissions(tr))
}

/// Distance shells `S_0(u), S_1(u), ..., S_ecc(u)` of a connected graph.
pub fn shells(g: &Graph, u: Vertex) -> Result<Vec<Vec<Vertex>>> {
    g.check_vertex(u)?;
    let mut bfs = Bfs::new(g.n());
    let sweep = bfs.run(g, u);
    if sweep.reached != g.n() {
        return Err(Error::DisconnectedGraph);
    }
    let mut out = vec![Vec::new(); sweep.eccentricity as usize + 1];
    for v in 0..g.n() {
        let d = bfs.dist(v).expect("connected");
        out[d as usize].push(v);
    }
    Ok(out)
}

pub fn diameter(g: &Graph) -> Result<u32> {
    let mut bfs = Bfs::new(g.n());
    let mut diam = 0;
    for u in 0..g.n() {
        let sweep = bfs.run(g, u);
        if sweep.reached != g.n() {
            return Err(Error::DisconnectedGraph);
        }
        diam = diam.max(sweep.eccentricity);
    }
    Ok(diam)
}

pub fn wiener_index(g: &Graph) -> Result<u64> {
    Ok(transmission_table(g)?.wiener)
}

pub fn is_transmission_regular(g: &Graph) -> Result<bool> {
    Ok(transmission_table(g)?.is_regular())
}

/// Dense row-major distance matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn row_sums(&self) -> Vec<u64> {
        (0..self.n).map(|u| self.row(u).iter().map(|&d| u64::from(d)).sum()).collect()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.data.iter().map(|&d| f64::from(d)).collect()
    }
}

/// Materializes all pairwise distances (`n^2` memory).
pub fn distance_matrix(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.n();
    let mut bfs = Bfs::new(n);
    let mut data = Vec::with_capacity(n * n);
    for u in 0..n {
        if bfs.run(g, u).reached != n {
            return Err(Error::DisconnectedGraph);
        }
        data.extend((0..n).map(|v| bfs.dist(v).expect("connected")));
    }
    Ok(DistanceMatrix { n, data })
}
