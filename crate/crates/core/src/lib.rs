//! Path matrices of simple graphs.
//!
//! The path matrix `P(G)` holds, for every pair of distinct vertices, the
//! maximum number of internally vertex-disjoint paths between them (zero on
//! the diagonal). Its eigenvalues are the path spectrum; the sum of their
//! absolute values is the path energy.
//!
//! - [`graph`]: the graph type, graph6 and edge-list formats, generators.
//! - [`connectivity`]: vertex-split unit-capacity max flow, block
//!   decomposition and the all-pairs path matrix.
//! - [`spectral`]: cyclic Jacobi eigenvalues, spectral radius, energy.
//! - [`closed_form`]: analytic spectra and energies of unicyclic graphs.
//! - [`verify`]: exhaustive path oracle, corpora and the check suite.

pub mod closed_form;
pub mod connectivity;
pub mod error;
pub mod graph;
mod parallel;
pub mod spectral;
pub mod verify;

pub use connectivity::{path_matrix, path_matrix_with, PathMatrix, PathMatrixOptions};
pub use error::{Error, Result};
pub use graph::{AttachmentShape, Graph, GraphFamily};
pub use spectral::{eigenvalues, path_energy, path_spectrum, spectral_radius, Spectrum, SymmetricMatrix};
