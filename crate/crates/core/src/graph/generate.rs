//! Generators for the graph families the path-energy results are stated for.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

/// How the `n - k` tree vertices of a unicyclic graph hang off its cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AttachmentShape {
    /// A path `0 - k - (k+1) - ... - (n-1)` hung off cycle vertex 0.
    PendantPath,
    /// `n - k` leaves on cycle vertex 0.
    PendantStar,
    /// Tree vertex `v` attaches to a uniformly random earlier vertex.
    RandomTree(u64),
}

impl AttachmentShape {
    pub const DEFAULT_SEED: u64 = 42;

    /// One representative of each shape, the random one with the given seed.
    pub fn all(seed: u64) -> [AttachmentShape; 3] {
        [
            AttachmentShape::PendantPath,
            AttachmentShape::PendantStar,
            AttachmentShape::RandomTree(seed),
        ]
    }
}

impl fmt::Display for AttachmentShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AttachmentShape::PendantPath => f.write_str("pendant-path"),
            AttachmentShape::PendantStar => f.write_str("pendant-star"),
            AttachmentShape::RandomTree(seed) => write!(f, "random-tree({seed})"),
        }
    }
}

impl FromStr for AttachmentShape {
    type Err = Error;

    /// Accepts `pendant-path`, `pendant-star`, `random-tree` (default seed)
    /// and `random-tree(SEED)`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pendant-path" | "path" => Ok(AttachmentShape::PendantPath),
            "pendant-star" | "star" => Ok(AttachmentShape::PendantStar),
            "random-tree" | "random" => Ok(AttachmentShape::RandomTree(Self::DEFAULT_SEED)),
            _ => s
                .strip_prefix("random-tree(")
                .and_then(|rest| rest.strip_suffix(')'))
                .and_then(|seed| seed.parse().ok())
                .map(AttachmentShape::RandomTree)
                .ok_or_else(|| Error::param(format!("unknown attachment shape `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphFamily {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    /// `K_{1, n-1}` with centre 0.
    Star { n: usize },
    /// A unicyclic graph of order `n` whose cycle `0..k` has length `k`.
    Unicyclic { n: usize, k: usize, shape: AttachmentShape },
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphFamily::Path { n } => write!(f, "P{n}"),
            GraphFamily::Cycle { n } => write!(f, "C{n}"),
            GraphFamily::Complete { n } => write!(f, "K{n}"),
            GraphFamily::Star { n } => write!(f, "S{n}"),
            GraphFamily::Unicyclic { n, k, shape } => write!(f, "U({n},{k},{shape})"),
        }
    }
}

pub fn generate(family: GraphFamily) -> Result<Graph> {
    let edges: Vec<(usize, usize)> = match family {
        GraphFamily::Path { n } => (1..n).map(|v| (v - 1, v)).collect(),
        GraphFamily::Cycle { n } => {
            if n < 3 {
                return Err(Error::param(format!("a cycle needs at least 3 vertices, got {n}")));
            }
            (0..n).map(|v| (v, (v + 1) % n)).collect()
        }
        GraphFamily::Complete { n } => (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect(),
        GraphFamily::Star { n } => (1..n).map(|v| (0, v)).collect(),
        GraphFamily::Unicyclic { n, k, shape } => {
            if k < 3 || k > n {
                return Err(Error::param(format!(
                    "unicyclic graph needs 3 <= k <= n, got n = {n}, k = {k}"
                )));
            }
            let mut edges: Vec<_> = (0..k).map(|v| (v, (v + 1) % k)).collect();
            match shape {
                AttachmentShape::PendantPath => {
                    edges.extend((k..n).map(|v| (if v == k { 0 } else { v - 1 }, v)));
                }
                AttachmentShape::PendantStar => edges.extend((k..n).map(|v| (0, v))),
                AttachmentShape::RandomTree(seed) => {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    edges.extend((k..n).map(|v| (rng.gen_range(0..v), v)));
                }
            }
            edges
        }
    };
    Graph::from_edges(family_order(family), edges)
}

fn family_order(family: GraphFamily) -> usize {
    match family {
        GraphFamily::Path { n }
        | GraphFamily::Cycle { n }
        | GraphFamily::Complete { n }
        | GraphFamily::Star { n }
        | GraphFamily::Unicyclic { n, .. } => n,
    }
}

/// A seeded random connected graph with `n` vertices and exactly `m` edges:
/// a random recursive spanning tree plus `m - n + 1` distinct extra edges
/// drawn uniformly from the remaining pairs.
pub fn random_connected(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let max_edges = n * n.saturating_sub(1) / 2;
    if n == 0 || m + 1 < n || m > max_edges {
        return Err(Error::param(format!(
            "a connected graph on {n} vertices needs between {} and {max_edges} edges, got {m}",
            n.saturating_sub(1)
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);

    let mut present = vec![false; n * n];
    let mut edges = Vec::with_capacity(m);
    for i in 1..n {
        let (u, v) = (order[rng.gen_range(0..i)], order[i]);
        present[u * n + v] = true;
        present[v * n + u] = true;
        edges.push((u, v));
    }
    let mut rest: Vec<(usize, usize)> = (0..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(|&(i, j)| !present[i * n + j])
        .collect();
    let extra = m - edges.len();
    let (chosen, _) = rest.partial_shuffle(&mut rng, extra);
    edges.extend_from_slice(chosen);
    Graph::from_edges(n, edges)
}
