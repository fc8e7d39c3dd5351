//! All-pairs internally vertex-disjoint path counts.

mod biconnected;
mod flow;
mod matrix;

pub use biconnected::{biconnected_components, BiconnectedDecomposition, Block};
pub use flow::{max_disjoint_paths, max_flow_unit, split_transform, FlowNetwork, Port};
pub use matrix::{path_matrix, path_matrix_with, PathMatrix, PathMatrixOptions};
