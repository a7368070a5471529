//! Exact l-infinity algebraic connectivity of simple undirected graphs.
//!
//! The central quantity is
//!
//! ```text
//! gamma(G) = min { max_{uv in E} |x_u - x_v| : sum(x) = 0, ||x||_inf = 1 }
//! ```
//!
//! For a connected graph on `n` vertices it equals `n / D_M(G)`, where
//! `D_M(G)` is the largest vertex transmission (the maximum row sum of the
//! distance matrix), so it can be computed exactly with one BFS per vertex.
//! A disconnected graph has `gamma(G) = 0`.
//!
//! The crate is `no_std` and only needs `alloc`. Besides the exact value it
//! provides:
//!
//! - a feasible optimal witness vector in exact rational arithmetic,
//! - a two-phase simplex solver and the linear-programming formulation of
//!   `gamma` used as an independent oracle,
//! - spectral and isoperimetric invariants (distance spectral radius,
//!   algebraic connectivity, normalized Laplacian gap, Cheeger constant) and a
//!   report that checks the known inequalities between them and `gamma`,
//! - generators for the standard families and Cartesian products together
//!   with their closed-form values.
//!
//! ```
//! use gamma_core::{families::FamilySpec, gamma, Rational};
//!
//! let cycle = FamilySpec::Cycle(6).generate().unwrap();
//! let cert = gamma(&cycle).unwrap();
//! assert_eq!(cert.gamma, Rational::new(2, 3));
//! assert!(cert.witness_valid);
//! ```
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod families;
pub mod graph;
pub mod invariants;
pub mod lp;

pub use error::{Error, Result};
pub use graph::distance::{
    bfs_distances, diameter, distance_matrix, is_connected, is_transmission_regular, shells, transmission_table,
    wiener_index, DistanceMatrix, DistanceProfile, TransmissionSweeper, TransmissionTable,
};
pub use graph::tree::{is_tree, pendant_vertices, tree_transmissions};
pub use graph::{Graph, Vertex};
pub use invariants::gamma::{gamma, gamma_from_table, gamma_objective, GammaCertificate};

/// Exact fraction used for `gamma` and witness vectors. Always reduced with a
/// positive denominator.
pub type Rational = num_rational::Ratio<i128>;
