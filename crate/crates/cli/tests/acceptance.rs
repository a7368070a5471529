//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Expected values are written out here from the closed
//! forms rather than taken from the library.

use std::fmt::Display;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use gamma_cli::corpus::{
    family_corpus, random_connected_gnp, random_connected_with_edges, random_disconnected, random_tree,
};
use gamma_core::families::{cartesian_product, FamilySpec};
use gamma_core::graph::distance::components;
use gamma_core::invariants::bounds::{bound_report_with, BoundOptions, BoundReport};
use gamma_core::invariants::gamma::exact_objective;
use gamma_core::invariants::spectral::{
    algebraic_connectivity, distance_spectral_radius, normalized_laplacian_mu, DEFAULT_TOL,
};
use gamma_core::lp::oracle::gamma_lp;
use gamma_core::{gamma, is_connected, transmission_table, tree_transmissions, GammaCertificate, Graph, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SHOWN: usize = 5;

fn r(num: usize, den: usize) -> Rational {
    Rational::new(num as i128, den as i128)
}

fn to_f64(x: &Rational) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

/// Problems found while running a criterion.
#[derive(Default)]
struct Problems(Vec<String>);

impl Problems {
    fn push(&mut self, p: impl Into<String>) {
        self.0.push(p.into());
    }

    fn summary(&self) -> String {
        let mut out: Vec<&str> = self.0.iter().take(SHOWN).map(String::as_str).collect();
        let more = format!("... and {} more", self.0.len().saturating_sub(SHOWN));
        if self.0.len() > SHOWN {
            out.push(&more);
        }
        out.join("; ")
    }
}

/// Witness and positivity checks shared by criteria 1-4, reported by 6
/// and 7.
#[derive(Default)]
struct Ledger {
    witnesses: usize,
    witness_problems: Problems,
    connected: usize,
    nonpositive: Problems,
}

impl Ledger {
    fn certify(&mut self, label: impl Display, g: &Graph) -> GammaCertificate {
        let cert = gamma(g).expect("corpus graphs have at least two vertices");
        self.witnesses += 1;
        let objective = exact_objective(g, &cert.witness);
        if !cert.witness_valid || !cert.residuals.all_zero() || objective != cert.gamma {
            let fallback = match &cert.fallback {
                Some(_) => "LP fallback used",
                None => "no fallback",
            };
            self.witness_problems.push(format!(
                "{label}: residuals {:?}, objective {objective} vs gamma {} ({fallback})",
                cert.residuals, cert.gamma
            ));
        }
        if is_connected(g) {
            self.connected += 1;
            if cert.gamma <= Rational::from_integer(0) {
                self.nonpositive.push(format!("{label}: gamma = {}", cert.gamma));
            }
        }
        cert
    }
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(problems: &Problems, detail: String) -> Outcome {
    if problems.0.is_empty() {
        Outcome { passed: true, detail }
    } else {
        Outcome { passed: false, detail: format!("{detail}; {}", problems.summary()) }
    }
}

fn within_budget(problems: &mut Problems, elapsed: Duration, budget_s: f64) {
    if elapsed.as_secs_f64() > budget_s {
        problems.push(format!("took {:.2} s, budget {budget_s} s", elapsed.as_secs_f64()));
    }
}

fn floor_ceil(n: usize) -> usize {
    (n / 2) * n.div_ceil(2)
}

fn closed_forms(ledger: &mut Ledger) -> Outcome {
    use FamilySpec::*;
    let start = Instant::now();
    let mut cases: Vec<(FamilySpec, Rational)> = Vec::new();
    for n in 2..=200 {
        cases.push((Complete(n), r(n, n - 1)));
        cases.push((Path(n), r(2, n - 1)));
        cases.push((Star(n), r(n, 2 * n - 3)));
        if n >= 3 {
            cases.push((Cycle(n), r(n, floor_ceil(n))));
        }
    }
    for m in 1..200 {
        for n in 1..=m.min(200 - m) {
            cases.push((CompleteBipartite(m, n), r(m + n, 2 * m + n - 2)));
        }
    }
    for t in 1..=7 {
        cases.push((Hypercube(t), r(2, t)));
    }
    for t in 1..8 {
        for s in 2..=200usize {
            if s.pow(t as u32) <= 200 {
                cases.push((Hamming(t, s), r(s, t * (s - 1))));
            }
        }
    }
    for l in 1..=200 {
        for m in 1..=200 / l {
            for n in 1..=200 / (l * m) {
                if l * m * n >= 2 {
                    cases.push((Grid3(l, m, n), r(2, l + m + n - 3)));
                }
            }
        }
    }
    for m in 3..=66 {
        for n in 3..=200 / m {
            cases.push((Torus(m, n), r(m * n, m * floor_ceil(n) + n * floor_ceil(m))));
        }
    }
    let mut problems = Problems::default();
    for (spec, want) in &cases {
        let g = spec.generate().unwrap();
        let got = ledger.certify(spec, &g).gamma;
        if got != *want {
            problems.push(format!("{spec}: got {got}, closed form {want}"));
        }
    }
    let elapsed = start.elapsed();
    within_budget(&mut problems, elapsed, 30.0);
    outcome(&problems, format!("{} graphs, exact equality, {:.2} s (budget 30 s)", cases.len(), elapsed.as_secs_f64()))
}

fn lp_agreement(ledger: &mut Ledger) -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x4c50);
    let mut graphs: Vec<(String, Graph)> =
        family_corpus(10).into_iter().map(|s| (s.to_string(), s.generate().unwrap())).collect();
    let families = graphs.len();
    for i in 0..200 {
        let n = rng.gen_range(2..=9);
        graphs.push((format!("random #{i} (n = {n})"), random_connected_gnp(&mut rng, n, 0.4)));
    }
    let mut problems = Problems::default();
    let mut worst = 0.0f64;
    for (label, g) in &graphs {
        let exact = to_f64(&ledger.certify(label, g).gamma);
        match gamma_lp(g) {
            Ok(lp) => {
                let gap = (lp.gamma - exact).abs();
                worst = worst.max(gap);
                if gap > 1e-6 {
                    problems.push(format!("{label}: LP {} vs {exact}", lp.gamma));
                }
            }
            Err(e) => problems.push(format!("{label}: LP error {e}")),
        }
    }
    let elapsed = start.elapsed();
    within_budget(&mut problems, elapsed, 60.0);
    outcome(
        &problems,
        format!(
            "{families} family graphs + 200 random, max |gap| {worst:.1e}, {:.2} s (budget 60 s)",
            elapsed.as_secs_f64()
        ),
    )
}

fn product_laws(ledger: &mut Ledger) -> Outcome {
    let start = Instant::now();
    let mut problems = Problems::default();
    let factors: Vec<(FamilySpec, Graph, Rational)> = family_corpus(8)
        .into_iter()
        .map(|s| {
            let g = s.generate().unwrap();
            let value = gamma(&g).unwrap().gamma;
            (s, g, value)
        })
        .collect();
    let mut pairs = 0;
    for (a, ga, va) in &factors {
        for (b, gb, vb) in &factors {
            let p = cartesian_product(&[ga.clone(), gb.clone()]).unwrap();
            let label = format!("{a} x {b}");
            let vp = ledger.certify(&label, &p).gamma;
            if vp.recip() != va.recip() + vb.recip() {
                problems.push(format!("{label}: 1/{vp} != 1/{va} + 1/{vb}"));
            }
            pairs += 1;
        }
    }
    let small = [(FamilySpec::Complete(2), r(2, 1)), (FamilySpec::Path(3), r(1, 1))];
    let mut triples = 0;
    for x in &small {
        for y in &small {
            for z in &small {
                let gs: Vec<Graph> = [x, y, z].iter().map(|f| f.0.generate().unwrap()).collect();
                let label = format!("{} x {} x {}", x.0, y.0, z.0);
                let vp = ledger.certify(&label, &cartesian_product(&gs).unwrap()).gamma;
                if vp.recip() != x.1.recip() + y.1.recip() + z.1.recip() {
                    problems.push(format!("{label}: gamma {vp}"));
                }
                triples += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    within_budget(&mut problems, elapsed, 30.0);
    outcome(
        &problems,
        format!("{pairs} ordered pairs, {triples} triples, exact, {:.2} s (budget 30 s)", elapsed.as_secs_f64()),
    )
}

struct Corpus {
    graphs: Vec<(String, Graph)>,
}

fn bound_corpus() -> Corpus {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e57);
    let mut graphs: Vec<(String, Graph)> =
        family_corpus(24).into_iter().map(|s| (s.to_string(), s.generate().unwrap())).collect();
    for i in 0..100 {
        let n = rng.gen_range(2..=16);
        let p = rng.gen_range(0.15..0.85);
        graphs.push((format!("random #{i} (n = {n})"), random_connected_gnp(&mut rng, n, p)));
    }
    for i in 0..100 {
        let n = rng.gen_range(2..=50);
        graphs.push((format!("tree #{i} (n = {n})"), random_tree(&mut rng, n)));
    }
    Corpus { graphs }
}

fn is_tree_graph(g: &Graph) -> bool {
    g.m() + 1 == g.n() && is_connected(g)
}

fn bound_suite(corpus: &Corpus, ledger: &mut Ledger) -> Outcome {
    let start = Instant::now();
    let opts = BoundOptions { cheeger_max_n: Some(24), b_oracle_max_n: Some(8), ..BoundOptions::default() };
    let mut problems = Problems::default();
    let (mut b_checked, mut cheeger_regular, mut stars, mut trees) = (0, 0, 0, 0);
    for (label, g) in &corpus.graphs {
        ledger.certify(label, g);
        let report: BoundReport = match bound_report_with(g, &opts) {
            Ok(r) => r,
            Err(e) => {
                problems.push(format!("{label}: {e}"));
                continue;
            }
        };
        let n = g.n();
        let table = transmission_table(g).unwrap();
        let transmission_regular = table.tr.iter().all(|&t| t == table.tr[0]);
        let complete = g.m() == n * (n - 1) / 2;
        let tree = is_tree_graph(g);
        let path = tree && g.degrees().all(|d| d <= 2);
        let star = tree && n >= 3 && g.degrees().any(|d| d == n - 1);
        let regular = g.degrees().all(|d| d == g.degree(0));

        let mut must_hold = |name: &str, required: bool| {
            let e = report.entry(name).unwrap();
            if e.is_evaluated() {
                if !e.holds {
                    problems.push(format!("{label}: {name} fails ({} vs {})", e.lhs, e.rhs));
                }
            } else if required {
                problems.push(format!("{label}: {name} not evaluated ({:?})", e.status));
            }
        };
        for name in [
            "gamma_vs_distance_spectral_radius",
            "gamma_vs_wiener",
            "witness_norm",
            "algebraic_connectivity_vs_gamma",
            "global_lower",
            "global_upper",
        ] {
            must_hold(name, true);
        }
        must_hold("b_vs_gamma", n <= 8);
        must_hold("cheeger_vs_gamma_regular", regular && n <= 24);
        must_hold("cheeger_upper", regular && n <= 24);
        must_hold("cheeger_lower", regular && n <= 24);
        must_hold("tree_upper", tree && n >= 3);
        b_checked += usize::from(n <= 8);
        cheeger_regular += usize::from(regular && n <= 24);
        trees += usize::from(tree && n >= 3);
        stars += usize::from(star);

        let mut equality = |name: &str, expected: bool| {
            let e = report.entry(name).unwrap();
            if e.is_evaluated() && e.equality_attained != expected {
                problems.push(format!("{label}: {name} equality {} but expected {expected}", e.equality_attained));
            }
        };
        equality("gamma_vs_distance_spectral_radius", transmission_regular);
        equality("gamma_vs_wiener", transmission_regular);
        equality("global_upper", complete);
        equality("global_lower", path);
        equality("tree_upper", star);
    }
    outcome(
        &problems,
        format!(
            "{} graphs; b(G) on {b_checked}, Cheeger on {cheeger_regular} regular, tree bound on {trees} trees ({stars} stars); {:.2} s",
            corpus.graphs.len(),
            start.elapsed().as_secs_f64()
        ),
    )
}

fn tree_properties() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7233);
    let mut problems = Problems::default();
    let mut largest = 0;
    for i in 0..100 {
        let n = rng.gen_range(2..=1000);
        largest = largest.max(n);
        let g = random_tree(&mut rng, n);
        let fast = tree_transmissions(&g).unwrap();
        let slow = transmission_table(&g).unwrap();
        if fast.tr != slow.tr {
            problems.push(format!("tree #{i} (n = {n}): rerooted transmissions differ"));
        }
        if let Some(&u) = slow.argmax.iter().find(|&&u| g.degree(u) != 1) {
            problems.push(format!("tree #{i} (n = {n}): maximum transmission at non-pendant {u}"));
        }
    }
    let elapsed = start.elapsed();
    within_budget(&mut problems, elapsed, 20.0);
    outcome(&problems, format!("100 trees up to n = {largest}, {:.2} s (budget 20 s)", elapsed.as_secs_f64()))
}

fn witness_validity(ledger: &Ledger) -> Outcome {
    outcome(
        &ledger.witness_problems,
        format!("{} certificates from criteria 1-4, exact residuals zero", ledger.witnesses),
    )
}

fn disconnection(ledger: &Ledger) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xd15c);
    let mut problems = Problems::default();
    for i in 0..50 {
        let n = rng.gen_range(2..=30);
        let g = random_disconnected(&mut rng, n);
        let label = format!("disconnected #{i} (n = {n})");
        let cert = gamma(&g).unwrap();
        if cert.gamma != Rational::from_integer(0)
            || !cert.witness_valid
            || exact_objective(&g, &cert.witness) != cert.gamma
        {
            problems.push(format!("{label}: gamma {} valid {}", cert.gamma, cert.witness_valid));
        }
        let one = Rational::from_integer(1);
        let mut values: Vec<Rational> = cert.witness.clone();
        values.sort();
        values.dedup();
        let ones: Vec<usize> = (0..n).filter(|&v| cert.witness[v] == one).collect();
        let blocks_ok = values.len() == 2
            && values.contains(&one)
            && cert.witness.iter().sum::<Rational>() == Rational::from_integer(0)
            && components(&g).iter().all(|c| c.iter().all(|&v| cert.witness[v] == cert.witness[c[0]]))
            && components(&g).contains(&ones);
        if !blocks_ok {
            problems.push(format!("{label}: witness is not a two-block vector on a component"));
        }
    }
    for p in &ledger.nonpositive.0 {
        problems.push(p.clone());
    }
    outcome(&problems, format!("50 disconnected graphs; gamma > 0 on {} connected corpus graphs", ledger.connected))
}

fn performance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xbe4c);
    let mut problems = Problems::default();
    let big = random_connected_with_edges(&mut rng, 2000, 10_000);
    let start = Instant::now();
    let cert = gamma(&big).unwrap();
    let big_time = start.elapsed();
    within_budget(&mut problems, big_time, 5.0);
    if !cert.witness_valid {
        problems.push("n = 2000 witness invalid");
    }

    let small = random_connected_with_edges(&mut rng, 50, 250);
    let start = Instant::now();
    let exact = gamma(&small).unwrap().gamma;
    let formula_time = start.elapsed();
    let start = Instant::now();
    let lp = gamma_lp(&small).unwrap();
    let lp_time = start.elapsed();
    let gap = (lp.gamma - to_f64(&exact)).abs();
    if gap > 1e-6 {
        problems.push(format!("n = 50: LP {} vs formula {exact}", lp.gamma));
    }
    let ratio = lp_time.as_secs_f64() / formula_time.as_secs_f64().max(1e-9);
    let soft = if ratio >= 10.0 { "met" } else { "NOT met (soft)" };
    outcome(
        &problems,
        format!(
            "n = 2000, m = {}: {:.3} s (budget 5 s); n = 50: formula {:.2e} s, LP {:.2} s, gap {gap:.1e}, ratio {ratio:.0}x (>= 10x {soft})",
            big.m(),
            big_time.as_secs_f64(),
            formula_time.as_secs_f64(),
            lp_time.as_secs_f64()
        ),
    )
}

fn spectral_sanity(corpora: &[&Corpus]) -> Outcome {
    let mut problems = Problems::default();
    for n in 2..=100 {
        let g = FamilySpec::Complete(n).generate().unwrap();
        let rho = distance_spectral_radius(&g, DEFAULT_TOL).unwrap().value;
        if (rho - (n as f64 - 1.0)).abs() > 1e-8 {
            problems.push(format!("rho(K_{n}) = {rho}"));
        }
        if n <= 50 {
            let a = algebraic_connectivity(&g, DEFAULT_TOL).unwrap().value;
            if (a - n as f64).abs() > 1e-8 {
                problems.push(format!("a(K_{n}) = {a}"));
            }
        }
    }
    let mut checked = 0;
    for (label, g) in corpora.iter().flat_map(|c| c.graphs.iter()) {
        let d_max = transmission_table(g).unwrap().d_max as f64;
        match distance_spectral_radius(g, DEFAULT_TOL) {
            Ok(rho) if rho.value <= d_max * (1.0 + 1e-12) => {}
            Ok(rho) => problems.push(format!("{label}: rho {} > D_M {d_max}", rho.value)),
            Err(e) => problems.push(format!("{label}: {e}")),
        }
        checked += 1;
    }
    let c6 = FamilySpec::Cycle(6).generate().unwrap();
    let a = algebraic_connectivity(&c6, DEFAULT_TOL).unwrap().value;
    let mu = normalized_laplacian_mu(&c6, DEFAULT_TOL).unwrap().value;
    if (mu - a / 2.0).abs() > 1e-8 {
        problems.push(format!("C_6: mu {mu} vs a/2 {}", a / 2.0));
    }
    outcome(&problems, format!("K_2..K_100, rho <= D_M on {checked} corpus graphs, C_6 mu = a/2"))
}

fn lp_corpus() -> Corpus {
    // Same seed and draws as the random half of criterion 2.
    let mut rng = ChaCha8Rng::seed_from_u64(0x4c50);
    let graphs = (0..200)
        .map(|i| {
            let n = rng.gen_range(2..=9);
            (format!("random #{i} (n = {n})"), random_connected_gnp(&mut rng, n, 0.4))
        })
        .collect();
    Corpus { graphs }
}

fn main() -> ExitCode {
    let mut ledger = Ledger::default();
    let corpus = bound_corpus();
    let mut results: Vec<(u32, &str, Outcome)> = vec![
        (1, "closed-form exactness", closed_forms(&mut ledger)),
        (2, "LP oracle agreement", lp_agreement(&mut ledger)),
        (3, "product law", product_laws(&mut ledger)),
        (4, "bound suite", bound_suite(&corpus, &mut ledger)),
        (5, "tree properties", tree_properties()),
    ];
    results.push((6, "witness validity", witness_validity(&ledger)));
    results.push((7, "disconnection", disconnection(&ledger)));
    results.push((8, "performance", performance()));
    results.push((9, "spectral sanity", spectral_sanity(&[&corpus, &lp_corpus()])));

    println!();
    for (id, name, o) in &results {
        println!("criterion {id} {name}: {} - {}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
    }
    let failed = results.iter().filter(|(_, _, o)| !o.passed).count();
    println!("acceptance: {} of {} criteria passed\n", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
