//! Floating-point spectral invariants: distance spectral radius by power
//! iteration and Laplacian spectra by cyclic Jacobi rotations.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::distance::distance_matrix;
use crate::graph::Graph;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const POWER_ITERATION_CAP: usize = 100_000;
pub const JACOBI_SWEEP_CAP: usize = 100;
/// Jacobi stops once the off-diagonal Frobenius norm is below this fraction
/// of the diagonal norm.
pub const JACOBI_REL_OFF_DIAGONAL: f64 = 1e-12;

/// An eigenvalue estimate with its eigenvector residual
/// `||A x - value x|| / ||x||`.
///
/// Tolerances are relative to `max(1, |value|)`, so `converged` implies
/// `residual <= tol * max(1, |value|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralEstimate {
    pub value: f64,
    pub residual: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// Dense symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> Self {
        SymmetricMatrix { n, data: vec![0.0; n * n] }
    }

    /// Takes the first `n * n` entries of `data` as a row-major matrix. The
    /// caller guarantees symmetry.
    pub fn from_row_major(n: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), n * n, "matrix data has wrong length");
        SymmetricMatrix { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set_sym(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn mul_vec(&self, x: &[f64], out: &mut [f64]) {
        for (row, o) in self.data.chunks_exact(self.n).zip(out.iter_mut()) {
            *o = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
    }

    /// `||A x - lambda x|| / ||x||`.
    pub fn residual(&self, lambda: f64, x: &[f64]) -> f64 {
        let mut ax = vec![0.0; self.n];
        self.mul_vec(x, &mut ax);
        let diff = ax.iter().zip(x).map(|(a, b)| (a - lambda * b) * (a - lambda * b)).sum::<f64>();
        libm::sqrt(diff) / norm(x)
    }
}

fn norm(x: &[f64]) -> f64 {
    libm::sqrt(x.iter().map(|v| v * v).sum())
}

/// Full eigendecomposition of a symmetric matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigen {
    /// Ascending.
    pub values: Vec<f64>,
    /// Unit eigenvectors, `vectors[k]` belongs to `values[k]`.
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
}

/// Cyclic Jacobi eigenvalue algorithm.
pub fn jacobi_eigen(m: &SymmetricMatrix) -> Result<Eigen> {
    let n = m.n;
    let mut a = m.data.clone();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let off_norm = |a: &[f64]| {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        libm::sqrt(s)
    };
    let diag_norm = |a: &[f64]| libm::sqrt((0..n).map(|i| a[i * n + i] * a[i * n + i]).sum());

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off == 0.0 || off <= JACOBI_REL_OFF_DIAGONAL * diag_norm(&a) {
            break;
        }
        if sweeps == JACOBI_SWEEP_CAP {
            return Err(Error::NoConvergence { iterations: sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = libm::copysign(1.0, theta) / (libm::fabs(theta) + libm::sqrt(theta * theta + 1.0));
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = order.iter().map(|&j| (0..n).map(|k| v[k * n + j]).collect()).collect();
    Ok(Eigen { values, vectors, sweeps })
}

pub fn laplacian(g: &Graph) -> SymmetricMatrix {
    let mut l = SymmetricMatrix::zeros(g.n());
    for u in 0..g.n() {
        l.set_sym(u, u, g.degree(u) as f64);
    }
    for (u, v) in g.edges() {
        l.set_sym(u, v, -1.0);
    }
    l
}

/// `I - Delta^{-1/2} A Delta^{-1/2}`; requires every degree to be positive.
pub fn normalized_laplacian(g: &Graph) -> SymmetricMatrix {
    let mut l = SymmetricMatrix::zeros(g.n());
    for u in 0..g.n() {
        l.set_sym(u, u, 1.0);
    }
    for (u, v) in g.edges() {
        let w = libm::sqrt((g.degree(u) * g.degree(v)) as f64);
        l.set_sym(u, v, -1.0 / w);
    }
    l
}

fn second_smallest(m: &SymmetricMatrix, tol: f64) -> Result<SpectralEstimate> {
    let eig = jacobi_eigen(m)?;
    let value = eig.values[1];
    let residual = m.residual(value, &eig.vectors[1]);
    Ok(SpectralEstimate { value, residual, iterations: eig.sweeps, converged: residual <= tol * value.abs().max(1.0) })
}

/// Second smallest Laplacian eigenvalue `a(G)`. Zero for disconnected graphs.
pub fn algebraic_connectivity(g: &Graph, tol: f64) -> Result<SpectralEstimate> {
    if g.n() < 2 {
        return Err(Error::TooSmall { n: g.n(), min: 2 });
    }
    second_smallest(&laplacian(g), tol)
}

/// Second smallest eigenvalue `mu_{n-1}` of the normalized Laplacian.
pub fn normalized_laplacian_mu(g: &Graph, tol: f64) -> Result<SpectralEstimate> {
    if g.n() < 2 {
        return Err(Error::TooSmall { n: g.n(), min: 2 });
    }
    if !crate::graph::distance::is_connected(g) {
        return Err(Error::DisconnectedGraph);
    }
    second_smallest(&normalized_laplacian(g), tol)
}

/// Largest eigenvalue of a symmetric matrix with non-negative entries, by
/// power iteration on `A + I` from the all-ones vector.
///
/// The unit shift keeps the Perron value strictly dominant even when `-rho`
/// is also an eigenvalue (bipartite-like spectra such as `K_2`).
pub fn perron_value(m: &SymmetricMatrix, tol: f64) -> Result<SpectralEstimate> {
    let n = m.n;
    let mut x = vec![1.0 / libm::sqrt(n as f64); n];
    let mut y = vec![0.0; n];
    let mut previous = f64::NAN;
    for iteration in 1..=POWER_ITERATION_CAP {
        m.mul_vec(&x, &mut y);
        for (yi, xi) in y.iter_mut().zip(&x) {
            *yi += xi;
        }
        // x is a unit vector, so this is the Rayleigh quotient of A + I, and
        // ||y - rq x|| is the residual of x against A itself.
        let rq: f64 = y.iter().zip(&x).map(|(a, b)| a * b).sum();
        let residual = norm(&y.iter().zip(&x).map(|(a, b)| a - rq * b).collect::<Vec<_>>());
        let value = rq - 1.0;
        let scale = value.abs().max(1.0);
        if libm::fabs(rq - previous) <= tol * scale && residual <= tol * scale {
            return Ok(SpectralEstimate { value, residual, iterations: iteration, converged: true });
        }
        previous = rq;
        let ny = norm(&y);
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / ny;
        }
    }
    Err(Error::NoConvergence { iterations: POWER_ITERATION_CAP })
}

/// Distance spectral radius `rho(D(G))` of a connected graph.
pub fn distance_spectral_radius(g: &Graph, tol: f64) -> Result<SpectralEstimate> {
    let d = distance_matrix(g)?;
    perron_value(&SymmetricMatrix::from_row_major(g.n(), d.to_f64()), tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;

    fn g(spec: FamilySpec) -> Graph {
        spec.generate().unwrap()
    }

    fn close(est: SpectralEstimate, want: f64, tol: f64) {
        assert!((est.value - want).abs() <= tol, "{} vs {}", est.value, want);
    }

    #[test]
    fn spectral_radius_examples() {
        let k5 = distance_spectral_radius(&g(FamilySpec::Complete(5)), DEFAULT_TOL).unwrap();
        close(k5, 4.0, 1e-9);
        assert!(k5.converged && k5.residual <= DEFAULT_TOL * 4.0);

        let c6 = distance_spectral_radius(&g(FamilySpec::Cycle(6)), DEFAULT_TOL).unwrap();
        close(c6, 9.0, 1e-9);

        // Characteristic polynomial of [[0,1,2],[1,0,1],[2,1,0]] is
        // -(l + 2)(l^2 - 2l - 2), largest root 1 + sqrt(3).
        let p3 = distance_spectral_radius(&g(FamilySpec::Path(3)), DEFAULT_TOL).unwrap();
        close(p3, 1.0 + libm::sqrt(3.0), 1e-9);

        let k2 = distance_spectral_radius(&g(FamilySpec::Complete(2)), DEFAULT_TOL).unwrap();
        close(k2, 1.0, 1e-12);
    }

    #[test]
    fn spectral_radius_rejects_disconnected() {
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(distance_spectral_radius(&two_k2, DEFAULT_TOL), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn algebraic_connectivity_examples() {
        close(algebraic_connectivity(&g(FamilySpec::Complete(5)), DEFAULT_TOL).unwrap(), 5.0, 1e-10);
        close(algebraic_connectivity(&g(FamilySpec::Path(2)), DEFAULT_TOL).unwrap(), 2.0, 1e-12);
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        close(algebraic_connectivity(&two_k2, DEFAULT_TOL).unwrap(), 0.0, 1e-12);
        // Path spectrum 2 - 2cos(k pi / n).
        let p6 = algebraic_connectivity(&g(FamilySpec::Path(6)), DEFAULT_TOL).unwrap();
        close(p6, 2.0 - 2.0 * libm::cos(core::f64::consts::PI / 6.0), 1e-10);
        assert!(p6.converged);
    }

    #[test]
    fn normalized_laplacian_examples() {
        close(normalized_laplacian_mu(&g(FamilySpec::Complete(2)), DEFAULT_TOL).unwrap(), 2.0, 1e-12);
        close(normalized_laplacian_mu(&g(FamilySpec::Cycle(6)), DEFAULT_TOL).unwrap(), 0.5, 1e-10);
        close(normalized_laplacian_mu(&g(FamilySpec::Complete(5)), DEFAULT_TOL).unwrap(), 1.25, 1e-10);
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(normalized_laplacian_mu(&two_k2, DEFAULT_TOL), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn jacobi_reconstructs_eigenpairs() {
        let l = laplacian(&g(FamilySpec::Petersen));
        let eig = jacobi_eigen(&l).unwrap();
        // Petersen Laplacian spectrum: 0, 2 (x5), 5 (x4).
        let want = [0.0, 2.0, 2.0, 2.0, 2.0, 2.0, 5.0, 5.0, 5.0, 5.0];
        for (got, want) in eig.values.iter().zip(want) {
            assert!((got - want).abs() < 1e-10);
        }
        for (val, vec) in eig.values.iter().zip(&eig.vectors) {
            assert!(l.residual(*val, vec) < 1e-9);
        }
    }
}
