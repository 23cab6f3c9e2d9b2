//! Spectral analysis of k-uniform weighted hypergraphs.
//!
//! A hypergraph here is a set of edges with exactly `k` vertices each, every
//! edge carrying a positive weight. Four order-k tensors are attached to it:
//! the adjacency tensor `A`, the diagonal degree tensor `D`, the Laplacian
//! `L = D - A` and the signless Laplacian `Q = D + A`. The crate computes
//! with these tensors without ever storing them (contraction and quadratic
//! form run straight off the edge list), finds the spectral radius of `A`
//! and `Q` by a shifted power iteration, constructs the eigenpairs every
//! hypergraph carries structurally, searches for further H-eigenpairs with a
//! Newton solver, and checks the known eigenvalue bounds, producing a
//! machine-readable verdict report.
//!
//! Everything is generic over the scalar through [`Scalar`] (f64 and f32 are
//! provided); the `*64` aliases below fix the common choice.
//!
//! ```
//! use whg_core::{power_iteration, Hypergraph64, PowerIterationOptions, TensorKind};
//!
//! let g = Hypergraph64::new(3, 3, vec![(vec![0, 1, 2], 2.0)]).unwrap();
//! let r = power_iteration(&g, TensorKind::Adjacency, &PowerIterationOptions::default())
//!     .unwrap();
//! assert!(r.converged);
//! assert!((r.rho - 2.0).abs() < 1e-9);
//! ```

pub mod bounds;
pub mod error;
pub mod generate;
pub mod hypergraph;
pub mod io;
pub mod newton;
pub mod scalar;
pub mod spectral;
pub mod tensor;

#[cfg(test)]
pub(crate) mod fixtures;

pub use bounds::{
    bound_report, eigenvalue_count, gershgorin_disks, neighborhood_bound, BoundEntry, BoundReport,
    BoundReportOptions, Disk, NeighborhoodBoundInput, Verdict,
};
pub use error::{Error, ValidationError};
pub use generate::{generate, random_connected, Family, GeneratorSpec, WeightScheme};
pub use hypergraph::{Edge, HypergraphStats, RegularityInfo, WeightedHypergraph};
pub use newton::{newton_eigenpair_search, NewtonOptions};
pub use scalar::Scalar;
pub use spectral::{
    known_eigenpairs, power_iteration, shift_relation, EigenClass, Eigenpair,
    PowerIterationOptions, PowerIterationResult,
};
pub use tensor::{
    apply, comparability_digraph, is_weakly_irreducible, materialize, materialize_with_cap,
    quadratic_form, ComparabilityDigraph, DenseTensor, TensorKind,
};

pub type Hypergraph64 = hypergraph::WeightedHypergraph<f64>;
pub type Stats64 = hypergraph::HypergraphStats<f64>;
pub type Eigenpair64 = spectral::Eigenpair<f64>;
pub type PowerIterationResult64 = spectral::PowerIterationResult<f64>;
pub type DenseTensor64 = tensor::DenseTensor<f64>;
pub type BoundReport64 = bounds::BoundReport<f64>;
