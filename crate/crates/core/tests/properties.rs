use gamma_core::families::{cartesian_product, gamma_harmonic, product_vertex, FamilySpec};
use gamma_core::invariants::gamma::{exact_objective, gamma_objective};
use gamma_core::lp::oracle::{b_small_oracle, gamma_lp, lp_k_optimum};
use gamma_core::lp::{simplex::DEFAULT_TOL, simplex_solve, LinearProgram, LpStatus, Relation};
use gamma_core::{
    bfs_distances, distance_matrix, gamma, is_connected, is_tree, pendant_vertices, transmission_table,
    tree_transmissions, Graph, Rational,
};
use proptest::prelude::*;

/// Random tree (vertex `v` hangs off a smaller vertex) plus extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (1..n).map(|v| 0..v).collect();
            let extra = proptest::collection::vec(any::<bool>(), n * (n - 1) / 2);
            (Just(n), parents, extra, 0.0..1.0f64)
        })
        .prop_map(|(n, parents, extra, density)| {
            let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    let is_tree_edge = parents[v - 1] == u;
                    if !is_tree_edge && extra[k] && (k as f64 / extra.len() as f64) < density {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
}

fn random_tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| (1..n).map(|v| 0..v).collect::<Vec<_>>()).prop_map(|parents| {
        let n = parents.len() + 1;
        Graph::from_edges(n, parents.iter().enumerate().map(|(i, &p)| (p, i + 1))).unwrap()
    })
}

/// Any simple graph, connected or not.
fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * (n - 1) / 2))).prop_map(
        |(n, bits)| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        },
    )
}

/// Sparsest-cut form of b(G): extreme points of the l1 problem are
/// two-valued, giving min over cuts of n |dS| / (2 |S| |S^c|).
fn b_by_cuts(g: &Graph) -> f64 {
    let n = g.n();
    (1u32..(1 << n) - 1)
        .map(|set| {
            let inside = |v: usize| set >> v & 1 == 1;
            let cut = g.edges().filter(|&(u, v)| inside(u) != inside(v)).count() as f64;
            let s = set.count_ones() as f64;
            n as f64 * cut / (2.0 * s * (n as f64 - s))
        })
        .fold(f64::INFINITY, f64::min)
}

fn gamma_of(g: &Graph) -> Rational {
    gamma(g).unwrap().gamma
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn bfs_agrees_with_distance_matrix(g in connected_graph(14)) {
        let d = distance_matrix(&g).unwrap();
        for s in 0..g.n() {
            let prof = bfs_distances(&g, s).unwrap();
            prop_assert_eq!(prof.dist[s], Some(0));
            prop_assert_eq!(prof.transmission, Some(d.row_sums()[s]));
            prop_assert!(prof.transmission.unwrap() >= g.n() as u64 - 1);
            for (u, v) in g.edges() {
                let (a, b) = (prof.dist[u].unwrap(), prof.dist[v].unwrap());
                prop_assert!(a.abs_diff(b) <= 1);
            }
        }
    }

    #[test]
    fn edge_lipschitz_on_any_graph(g in any_graph(12)) {
        for s in 0..g.n() {
            let prof = bfs_distances(&g, s).unwrap();
            for (u, v) in g.edges() {
                if let (Some(a), Some(b)) = (prof.dist[u], prof.dist[v]) {
                    prop_assert!(a.abs_diff(b) <= 1);
                }
            }
        }
    }

    #[test]
    fn transmission_table_identities(g in connected_graph(14)) {
        let t = transmission_table(&g).unwrap();
        prop_assert_eq!(2 * t.wiener, t.tr.iter().sum::<u64>());
        prop_assert!(!t.argmax.is_empty());
        prop_assert!(t.argmax.iter().all(|&u| t.tr[u] == t.d_max));
        let n = g.n() as u64;
        prop_assert!(t.tr.iter().all(|&x| x >= n - 1));
        prop_assert_eq!(t.tr.iter().all(|&x| x == n - 1), g.is_complete());
    }

    #[test]
    fn rerooting_matches_bfs_on_trees(g in random_tree(120)) {
        prop_assert!(is_tree(&g));
        let fast = tree_transmissions(&g).unwrap();
        let slow = transmission_table(&g).unwrap();
        prop_assert_eq!(&fast, &slow);
        let pendants = pendant_vertices(&g);
        prop_assert!(fast.argmax.iter().all(|u| pendants.contains(u)));
    }

    #[test]
    fn gamma_is_exact_and_certified(g in connected_graph(14)) {
        let t = transmission_table(&g).unwrap();
        let cert = gamma(&g).unwrap();
        prop_assert_eq!(cert.gamma, Rational::new(g.n() as i128, t.d_max as i128));
        prop_assert!(cert.witness_valid);
        prop_assert!(cert.residuals.all_zero());
        prop_assert_eq!(exact_objective(&g, &cert.witness), cert.gamma);
        prop_assert!(t.argmax.contains(&cert.attaining_vertex.unwrap()));
        prop_assert_eq!(cert.attaining_vertex, t.argmax.first().copied());
    }

    #[test]
    fn feasible_vectors_never_beat_gamma(
        g in connected_graph(10),
        raw in proptest::collection::vec(-1.0..1.0f64, 10),
    ) {
        let n = g.n();
        let mut x: Vec<f64> = raw[..n].to_vec();
        // Mean-centre, scale to sup norm 1, repeat until both hold.
        for _ in 0..100 {
            let mean = x.iter().sum::<f64>() / n as f64;
            x.iter_mut().for_each(|v| *v -= mean);
            let sup = x.iter().fold(0.0f64, |a, v| a.max(v.abs()));
            prop_assume!(sup > 1e-6);
            x.iter_mut().for_each(|v| *v /= sup);
            if x.iter().sum::<f64>().abs() <= 1e-12 {
                break;
            }
        }
        let value = gamma_objective(&g, &x).unwrap();
        let gamma_f = *gamma_of(&g).numer() as f64 / *gamma_of(&g).denom() as f64;
        prop_assert!(value >= gamma_f - 1e-9, "{} < {}", value, gamma_f);
    }

    #[test]
    fn adding_an_edge_never_decreases_gamma(g in connected_graph(12), pick in any::<prop::sample::Index>()) {
        let missing: Vec<(usize, usize)> = (0..g.n())
            .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        prop_assume!(!missing.is_empty());
        let (u, v) = missing[pick.index(missing.len())];
        let h = g.with_edge(u, v).unwrap();
        prop_assert!(gamma_of(&h) >= gamma_of(&g));
    }

    #[test]
    fn zero_gamma_iff_disconnected(g in any_graph(12)) {
        let cert = gamma(&g).unwrap();
        prop_assert_eq!(cert.gamma == Rational::from_integer(0), !is_connected(&g));
        prop_assert!(cert.witness_valid);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lp_oracle_agrees_with_formula(g in connected_graph(8)) {
        let exact = gamma_of(&g);
        let exact_f = *exact.numer() as f64 / *exact.denom() as f64;
        let lp = gamma_lp(&g).unwrap();
        prop_assert!((lp.gamma - exact_f).abs() <= 1e-6, "{} vs {}", lp.gamma, exact_f);
        prop_assert!(lp.per_k.iter().all(|&v| v >= exact_f - 1e-6));
        let t = transmission_table(&g).unwrap();
        prop_assert!((lp.per_k[t.argmax[0]] - exact_f).abs() <= 1e-6);
    }

    #[test]
    fn lp_solutions_are_feasible_and_deterministic(g in connected_graph(8), k in any::<prop::sample::Index>()) {
        let k = k.index(g.n());
        let lp = gamma_core::lp::oracle::build_lp_k(&g, k).unwrap();
        let first = simplex_solve(&lp, DEFAULT_TOL).unwrap();
        let again = simplex_solve(&lp, DEFAULT_TOL).unwrap();
        prop_assert_eq!(&first, &again);
        let x = first.assignment.unwrap();
        prop_assert!(lp.max_violation(&x) <= 1e-8);
        prop_assert!((lp.objective_value(&x) - first.objective).abs() <= 1e-8);
        let (y, _) = lp_k_optimum(&g, k).unwrap();
        prop_assert_eq!(y, first.objective);
    }

    #[test]
    fn b_oracle_matches_cuts_and_bound(g in connected_graph(7)) {
        let b = b_small_oracle(&g).unwrap();
        let cuts = b_by_cuts(&g);
        prop_assert!((b - cuts).abs() <= 1e-7, "{} vs {}", b, cuts);
        let gm = gamma_of(&g);
        let bound = g.m() as f64 / 2.0 * (*gm.numer() as f64 / *gm.denom() as f64);
        prop_assert!(b <= bound + 1e-7);
    }

    #[test]
    fn product_distances_add(g in connected_graph(6), h in connected_graph(6)) {
        let p = cartesian_product(&[g.clone(), h.clone()]).unwrap();
        let (dg, dh, dp) = (distance_matrix(&g).unwrap(), distance_matrix(&h).unwrap(), distance_matrix(&p).unwrap());
        let sizes = [g.n(), h.n()];
        for (a, b) in [(0, 0), (g.n() - 1, 0), (0, h.n() - 1)] {
            for c in 0..g.n() {
                for d in 0..h.n() {
                    let want = dg.get(a, c) + dh.get(b, d);
                    prop_assert_eq!(dp.get(product_vertex(&sizes, &[a, b]), product_vertex(&sizes, &[c, d])), want);
                }
            }
        }
        let law = gamma_harmonic(&[gamma_of(&g), gamma_of(&h)]).unwrap();
        prop_assert_eq!(gamma_of(&p), law);
    }
}

#[test]
fn transmission_regular_factors_give_regular_products() {
    let factors = [FamilySpec::Cycle(5), FamilySpec::Complete(4), FamilySpec::Petersen, FamilySpec::Hypercube(2)];
    for a in &factors {
        for b in &factors {
            let p = cartesian_product(&[a.generate().unwrap(), b.generate().unwrap()]).unwrap();
            let t = transmission_table(&p).unwrap();
            assert!(t.is_regular(), "{a} x {b}");
        }
    }
    // tr(u, v) = |H| tr(u) + |G| tr(v) on a non-regular pair.
    let (g, h) = (FamilySpec::Star(4).generate().unwrap(), FamilySpec::Path(3).generate().unwrap());
    let p = cartesian_product(&[g.clone(), h.clone()]).unwrap();
    let (tg, th, tp) =
        (transmission_table(&g).unwrap(), transmission_table(&h).unwrap(), transmission_table(&p).unwrap());
    for u in 0..g.n() {
        for v in 0..h.n() {
            let id = product_vertex(&[g.n(), h.n()], &[u, v]);
            assert_eq!(tp.tr[id], h.n() as u64 * tg.tr[u] + g.n() as u64 * th.tr[v]);
        }
    }
}

#[test]
fn simplex_on_a_small_transport_problem() {
    // Two supplies (3, 4), two demands (2, 5), costs [[1, 3], [2, 1]].
    let mut lp = LinearProgram::new(4);
    lp.objective = vec![1.0, 3.0, 2.0, 1.0];
    lp.push(vec![1.0, 1.0, 0.0, 0.0], Relation::Le, 3.0);
    lp.push(vec![0.0, 0.0, 1.0, 1.0], Relation::Le, 4.0);
    lp.push(vec![1.0, 0.0, 1.0, 0.0], Relation::Ge, 2.0);
    lp.push(vec![0.0, 1.0, 0.0, 1.0], Relation::Ge, 5.0);
    let sol = simplex_solve(&lp, DEFAULT_TOL).unwrap();
    assert_eq!(sol.status, LpStatus::Optimal);
    // Ship 2 on (0,0), 1 on (0,1), 4 on (1,1): 2 + 3 + 4.
    assert!((sol.objective - 9.0).abs() < 1e-9);
}
