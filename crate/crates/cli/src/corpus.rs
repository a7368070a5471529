//! Seeded random graphs and the enumerated family corpus.

use gamma_core::families::FamilySpec;
use gamma_core::{is_connected, Graph};
use rand::seq::SliceRandom;
use rand::Rng;

/// `G(n, p)` conditioned on being connected, by rejection.
///
/// # Panics
/// If `n == 0` or `p` is not in `(0, 1]`.
pub fn random_connected_gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    assert!(n >= 1 && p > 0.0 && p <= 1.0);
    loop {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
        let g = Graph::from_edges(n, edges).expect("simple by construction");
        if is_connected(&g) {
            return g;
        }
    }
}

/// Uniform labelled tree on `n` vertices, decoded from a random Prüfer
/// sequence.
///
/// # Panics
/// If `n == 0`.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    assert!(n >= 1);
    if n <= 2 {
        return Graph::from_edges(n, (1..n).map(|v| (0, v))).unwrap();
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(std::cmp::Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("a Prüfer code always leaves a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(std::cmp::Reverse(c));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().unwrap();
    let std::cmp::Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    Graph::from_edges(n, edges).expect("a tree is simple")
}

/// Connected graph with exactly `m` edges: a uniform random tree plus
/// uniformly chosen extra edges.
///
/// # Panics
/// If `m` is not in `n - 1 ..= n (n - 1) / 2`.
pub fn random_connected_with_edges<R: Rng>(rng: &mut R, n: usize, m: usize) -> Graph {
    assert!(n >= 1 && m + 1 >= n && m <= n * (n - 1) / 2);
    let tree = random_tree(rng, n);
    let mut present: std::collections::HashSet<(usize, usize)> = tree.edges().collect();
    if 2 * m > n * (n - 1) / 2 {
        let mut missing: Vec<_> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|e| !present.contains(e)).collect();
        missing.shuffle(rng);
        present.extend(missing.into_iter().take(m + 1 - n));
    } else {
        while present.len() < m {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v {
                present.insert((u.min(v), u.max(v)));
            }
        }
    }
    Graph::from_edges(n, present).expect("simple by construction")
}

/// Two or three random connected blocks on shuffled labels.
///
/// # Panics
/// If `n < 2`.
pub fn random_disconnected<R: Rng>(rng: &mut R, n: usize) -> Graph {
    assert!(n >= 2);
    let blocks = rng.gen_range(2..=3.min(n));
    let mut cuts: Vec<usize> = rand::seq::index::sample(rng, n - 1, blocks - 1).into_iter().map(|c| c + 1).collect();
    cuts.sort_unstable();
    cuts.insert(0, 0);
    cuts.push(n);
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut edges = Vec::new();
    for w in cuts.windows(2) {
        let (start, size) = (w[0], w[1] - w[0]);
        let block = random_connected_gnp(rng, size, 0.5);
        edges.extend(block.edges().map(|(u, v)| (labels[start + u], labels[start + v])));
    }
    Graph::from_edges(n, edges).expect("blocks are disjoint")
}

/// Family members with `2 <= n <= max_n`, one representative per
/// isomorphism class where the parametrisations overlap.
pub fn family_corpus(max_n: usize) -> Vec<FamilySpec> {
    use FamilySpec::*;
    let mut out = Vec::new();
    let fits = |s: &FamilySpec| s.order().is_ok_and(|n| (2..=max_n).contains(&n));
    let mut push = |s: FamilySpec| {
        if fits(&s) {
            out.push(s);
        }
    };
    for n in 2..=max_n {
        push(Path(n));
        push(Complete(n));
        if n >= 3 {
            push(Cycle(n));
        }
        if n >= 4 {
            push(Star(n));
        }
    }
    for m in 2..max_n {
        for n in 2..=m {
            push(CompleteBipartite(m, n));
        }
    }
    for t in 2..usize::BITS as usize {
        if 1usize << t > max_n {
            break;
        }
        push(Hypercube(t));
        for s in 3..=max_n {
            push(Hamming(t, s));
        }
    }
    for l in 2..=max_n {
        for m in 2..=l {
            for n in 2..=m {
                push(Grid3(l, m, n));
            }
        }
    }
    for m in 3..=max_n {
        for n in 3..=m {
            push(Torus(m, n));
        }
    }
    push(Petersen);
    out
}
