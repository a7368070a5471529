//! Named graph families, Cartesian products and their closed-form `gamma`.
//!
//! Vertex ids of a product `G_1 x ... x G_k` are row-major over the factor
//! ids: `(v_1, ..., v_k)` maps to `((v_1 * n_2 + v_2) * n_3 + v_3) ...`. The
//! first factor is the most significant digit. k-fold products are built as
//! a left fold of the binary product, which yields the same encoding.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `P_n`, vertices in path order.
    Path(usize),
    /// `C_n`, vertices in cyclic order.
    Cycle(usize),
    Complete(usize),
    /// `S_n` on `n` vertices; vertex 0 is the center.
    Star(usize),
    /// `K_{m,n}` with `m >= n`; vertices `0..m` form the larger side.
    CompleteBipartite(usize, usize),
    /// `Q_t = K_2 x ... x K_2`.
    Hypercube(usize),
    /// `H(t, s) = K_s x ... x K_s` (`t` factors).
    Hamming(usize, usize),
    /// `P_l x P_m x P_n`.
    Grid3(usize, usize, usize),
    /// `C_m x C_n`.
    Torus(usize, usize),
    /// Kneser graph `K(5, 2)`.
    Petersen,
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        let ok = match *self {
            Path(n) | Complete(n) | Star(n) => n >= 1,
            Cycle(n) => n >= 3,
            CompleteBipartite(m, n) => m >= n && n >= 1,
            Hypercube(t) => t >= 1,
            Hamming(t, s) => t >= 1 && s >= 2,
            Grid3(l, m, n) => l >= 1 && m >= 1 && n >= 1,
            Torus(m, n) => m >= 3 && n >= 3,
            Petersen => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidSpec(self.constraint()))
        }
    }

    fn constraint(&self) -> &'static str {
        use FamilySpec::*;
        match self {
            Path(_) | Complete(_) | Star(_) => "size must be at least 1",
            Cycle(_) => "cycle length must be at least 3",
            CompleteBipartite(..) => "complete bipartite needs m >= n >= 1",
            Hypercube(_) => "hypercube dimension must be at least 1",
            Hamming(..) => "hamming graph needs t >= 1 and s >= 2",
            Grid3(..) => "grid sides must be at least 1",
            Torus(..) => "torus sides must be at least 3",
            Petersen => "",
        }
    }

    /// Number of vertices of the generated graph.
    pub fn order(&self) -> Result<usize> {
        use FamilySpec::*;
        self.validate()?;
        let too_big = Error::InvalidSpec("graph too large");
        Ok(match *self {
            Path(n) | Cycle(n) | Complete(n) | Star(n) => n,
            CompleteBipartite(m, n) => m + n,
            Hypercube(t) => u32::try_from(t).ok().and_then(|t| 1usize.checked_shl(t)).ok_or(too_big)?,
            Hamming(t, s) => u32::try_from(t).ok().and_then(|t| s.checked_pow(t)).ok_or(too_big)?,
            Grid3(l, m, n) => l.checked_mul(m).and_then(|x| x.checked_mul(n)).ok_or(too_big)?,
            Torus(m, n) => m.checked_mul(n).ok_or(too_big)?,
            Petersen => 10,
        })
    }

    pub fn generate(&self) -> Result<Graph> {
        use FamilySpec::*;
        self.order()?;
        match *self {
            Path(n) => Graph::from_edges(n, (1..n).map(|v| (v - 1, v))),
            Cycle(n) => Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))),
            Complete(n) => complete(n),
            Star(n) => Graph::from_edges(n, (1..n).map(|v| (0, v))),
            CompleteBipartite(m, n) => Graph::from_edges(m + n, (0..m).flat_map(|a| (m..m + n).map(move |b| (a, b)))),
            Hypercube(t) => power(&complete(2)?, t),
            Hamming(t, s) => power(&complete(s)?, t),
            Grid3(l, m, n) => {
                let paths = [Path(l), Path(m), Path(n)].map(|p| p.generate());
                let [a, b, c] = paths;
                cartesian_product(&[a?, b?, c?])
            }
            Torus(m, n) => cartesian_product(&[Cycle(m).generate()?, Cycle(n).generate()?]),
            Petersen => petersen(),
        }
    }

    /// Exact `gamma` of the family member from its closed form.
    pub fn closed_form_gamma(&self) -> Result<Rational> {
        use FamilySpec::*;
        self.validate()?;
        let r = |num: usize, den: usize| Rational::new(num as i128, den as i128);
        let two_or_more = |n: usize| {
            if n >= 2 {
                Ok(())
            } else {
                Err(Error::InvalidSpec("gamma needs at least two vertices"))
            }
        };
        let floor_ceil = |n: usize| (n / 2) * n.div_ceil(2);
        Ok(match *self {
            Complete(n) => {
                two_or_more(n)?;
                r(n, n - 1)
            }
            Cycle(n) => r(n, floor_ceil(n)),
            Path(n) => {
                two_or_more(n)?;
                r(2, n - 1)
            }
            Star(n) => {
                two_or_more(n)?;
                r(n, 2 * n - 3)
            }
            CompleteBipartite(m, n) => r(m + n, 2 * m + n - 2),
            Hypercube(t) => r(2, t),
            Hamming(t, s) => r(s, t * (s - 1)),
            Grid3(l, m, n) => {
                two_or_more(l * m * n)?;
                r(2, l + m + n - 3)
            }
            Torus(m, n) => r(m * n, m * floor_ceil(n) + n * floor_ceil(m)),
            Petersen => r(2, 3),
        })
    }
}

impl core::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        use FamilySpec::*;
        match self {
            Path(n) => write!(f, "P_{n}"),
            Cycle(n) => write!(f, "C_{n}"),
            Complete(n) => write!(f, "K_{n}"),
            Star(n) => write!(f, "S_{n}"),
            CompleteBipartite(m, n) => write!(f, "K_{{{m},{n}}}"),
            Hypercube(t) => write!(f, "Q_{t}"),
            Hamming(t, s) => write!(f, "H({t},{s})"),
            Grid3(l, m, n) => write!(f, "G_{{{l},{m},{n}}}"),
            Torus(m, n) => write!(f, "T_{{{m},{n}}}"),
            Petersen => write!(f, "Petersen"),
        }
    }
}

fn complete(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

fn petersen() -> Result<Graph> {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let disjoint = |p: (usize, usize), q: (usize, usize)| p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1;
    let edges = (0..pairs.len())
        .flat_map(|i| (i + 1..pairs.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| disjoint(pairs[i], pairs[j]));
    Graph::from_edges(pairs.len(), edges)
}

fn power(g: &Graph, t: usize) -> Result<Graph> {
    let mut acc = g.clone();
    for _ in 1..t {
        acc = product2(&acc, g)?;
    }
    Ok(acc)
}

fn product2(g: &Graph, h: &Graph) -> Result<Graph> {
    let nh = h.n();
    let id = |a: Vertex, b: Vertex| a * nh + b;
    let mut edges = Vec::with_capacity(g.m() * nh + h.m() * g.n());
    for a in 0..g.n() {
        for b in 0..nh {
            for &c in g.neighbors(a).iter().filter(|&&c| c > a) {
                edges.push((id(a, b), id(c, b)));
            }
            for &d in h.neighbors(b).iter().filter(|&&d| d > b) {
                edges.push((id(a, b), id(a, d)));
            }
        }
    }
    Graph::from_edges(g.n() * nh, edges)
}

/// Cartesian product of two or more graphs with row-major vertex ids.
pub fn cartesian_product(gs: &[Graph]) -> Result<Graph> {
    let (first, rest) = match gs {
        [first, rest @ ..] if !rest.is_empty() => (first, rest),
        _ => return Err(Error::TooFewFactors),
    };
    rest.iter().try_fold(first.clone(), |acc, h| product2(&acc, h))
}

/// Row-major id of a product vertex from its factor coordinates.
pub fn product_vertex(sizes: &[usize], coords: &[Vertex]) -> Vertex {
    sizes.iter().zip(coords).fold(0, |acc, (&n, &c)| acc * n + c)
}

/// `1 / (1/g_1 + ... + 1/g_k)`, the `gamma` of a product from the `gamma`
/// values of its factors.
pub fn gamma_harmonic(values: &[Rational]) -> Result<Rational> {
    if values.is_empty() {
        return Err(Error::NonPositiveInput);
    }
    let mut inverse_sum = Rational::from_integer(0);
    for v in values {
        if *v.numer() <= 0 {
            return Err(Error::NonPositiveInput);
        }
        inverse_sum += v.recip();
    }
    Ok(inverse_sum.recip())
}
