use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{biconnected_components, max_disjoint_paths};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::parallel::ordered_map;

/// Symmetric matrix of disjoint-path counts with a zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPathMatrix")]
pub struct PathMatrix {
    n: usize,
    /// Row-major entries.
    p: Vec<u32>,
}

#[derive(Deserialize)]
struct RawPathMatrix {
    n: usize,
    p: Vec<u32>,
}

impl TryFrom<RawPathMatrix> for PathMatrix {
    type Error = Error;

    fn try_from(raw: RawPathMatrix) -> Result<Self> {
        PathMatrix::from_rows(raw.n, raw.p)
    }
}

impl PathMatrix {
    /// Validates shape, symmetry and the zero diagonal.
    pub fn from_rows(n: usize, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::param(format!("expected {} entries, got {}", n * n, entries.len())));
        }
        for i in 0..n {
            if entries[i * n + i] != 0 {
                return Err(Error::param(format!("nonzero diagonal entry at {i}")));
            }
            for j in 0..i {
                if entries[i * n + j] != entries[j * n + i] {
                    return Err(Error::param(format!("asymmetric entries at ({i}, {j})")));
                }
            }
        }
        Ok(PathMatrix { n, p: entries })
    }

    fn zeros(n: usize) -> Self {
        PathMatrix { n, p: vec![0; n * n] }
    }

    fn set(&mut self, i: usize, j: usize, value: u32) {
        self.p[i * self.n + j] = value;
        self.p[j * self.n + i] = value;
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.p[i * self.n + j]
    }

    pub fn entries(&self) -> &[u32] {
        &self.p
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.p[i * self.n..(i + 1) * self.n]
    }

    /// Σ p_ij² over all ordered pairs, i.e. the trace of P².
    pub fn frobenius_sq(&self) -> f64 {
        self.p.iter().map(|&x| f64::from(x) * f64::from(x)).sum()
    }

    /// `n` on the first line, then one tab-separated row per line.
    pub fn to_tsv(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(u32::to_string).collect();
            writeln!(out, "{}", row.join("\t")).unwrap();
        }
        out
    }

    /// `{"n": .., "p": [..]}` with `p` flattened row-major.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("path matrix serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathMatrixOptions {
    /// Only run flows inside blocks of three or more vertices.
    pub use_blocks: bool,
    /// Worker threads for the pair loop; 0 means one per core.
    pub workers: usize,
}

impl Default for PathMatrixOptions {
    fn default() -> Self {
        PathMatrixOptions { use_blocks: true, workers: 1 }
    }
}

pub fn path_matrix(g: &Graph) -> PathMatrix {
    path_matrix_with(g, &PathMatrixOptions::default())
}

/// Computes every `p_ij` by max flow. With `use_blocks`, pairs that share
/// no block of three or more vertices get 1 (same component) or 0, and
/// pairs inside such a block are solved on that block alone; otherwise
/// every pair runs a flow on the whole graph. Both routes give the same
/// matrix, for any worker count.
pub fn path_matrix_with(g: &Graph, opts: &PathMatrixOptions) -> PathMatrix {
    let n = g.order();
    let mut matrix = PathMatrix::zeros(n);

    if !opts.use_blocks {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let values = ordered_map(&pairs, opts.workers, |&(i, j)| {
            max_disjoint_paths(g, i, j).expect("distinct in-range terminals")
        });
        for (&(i, j), value) in pairs.iter().zip(values) {
            matrix.set(i, j, value as u32);
        }
        return matrix;
    }

    let component = g.components();
    for i in 0..n {
        for j in i + 1..n {
            if component[i] == component[j] {
                matrix.set(i, j, 1);
            }
        }
    }

    let decomposition = biconnected_components(g);
    let subgraphs: Vec<(Graph, &[usize])> = decomposition
        .blocks
        .iter()
        .filter(|b| b.vertices.len() >= 3)
        .map(|b| (g.induced(&b.vertices), b.vertices.as_slice()))
        .collect();
    let tasks: Vec<(usize, usize, usize)> = subgraphs
        .iter()
        .enumerate()
        .flat_map(|(id, (sub, _))| {
            let m = sub.order();
            (0..m).flat_map(move |a| (a + 1..m).map(move |b| (id, a, b)))
        })
        .collect();
    let values = ordered_map(&tasks, opts.workers, |&(id, a, b)| {
        max_disjoint_paths(&subgraphs[id].0, a, b).expect("distinct in-range terminals")
    });
    for (&(id, a, b), value) in tasks.iter().zip(values) {
        let labels = subgraphs[id].1;
        matrix.set(labels[a], labels[b], value as u32);
    }
    matrix
}
