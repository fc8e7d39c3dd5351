//! Graph corpora the check suite runs over.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{
    generate, parse_graph6_stream, random_connected, write_graph6, AttachmentShape, Graph,
    GraphFamily,
};

pub const EXHAUSTIVE_MAX_ORDER: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusSource {
    Graph6Stream,
    Exhaustive { max_n: usize },
    RandomConnected { n: usize, count: usize, seed: u64 },
    /// Every `U(n, k)` for `n_min <= n <= n_max`, `3 <= k <= n`, in all three
    /// attachment shapes.
    UnicyclicSweep { n_min: usize, n_max: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusGraph {
    pub id: String,
    pub graph: Graph,
    /// Set for generated family members.
    pub family: Option<GraphFamily>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub source: CorpusSource,
    pub graphs: Vec<CorpusGraph>,
}

impl Corpus {
    /// One graph per line. With `connected_only`, disconnected graphs are
    /// dropped. Ids are 1-based line numbers among the kept graphs' lines.
    pub fn from_graph6(text: &str, connected_only: bool) -> Result<Corpus> {
        let graphs = parse_graph6_stream(text)?
            .into_iter()
            .enumerate()
            .filter(|(_, g)| !connected_only || g.is_connected())
            .map(|(i, graph)| CorpusGraph { id: format!("#{}", i + 1), graph, family: None })
            .collect();
        Ok(Corpus { source: CorpusSource::Graph6Stream, graphs })
    }

    /// `count` random connected graphs of order `n`; each draws its edge
    /// count uniformly from `n - 1 ..= n(n-1)/2`.
    pub fn random_connected(n: usize, count: usize, seed: u64) -> Result<Corpus> {
        if n == 0 {
            return Err(Error::param("random corpus needs n >= 1"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let max_edges = n * (n - 1) / 2;
        let mut graphs = Vec::with_capacity(count);
        for i in 0..count {
            let m = rng.gen_range(n - 1..=max_edges);
            let graph = random_connected(n, m, rng.gen())?;
            graphs.push(CorpusGraph { id: format!("random-{i}"), graph, family: None });
        }
        Ok(Corpus { source: CorpusSource::RandomConnected { n, count, seed }, graphs })
    }

    pub fn unicyclic_sweep(n_min: usize, n_max: usize, seed: u64) -> Result<Corpus> {
        if n_min < 3 || n_min > n_max {
            return Err(Error::param(format!(
                "unicyclic sweep needs 3 <= n_min <= n_max, got {n_min}..={n_max}"
            )));
        }
        let mut graphs = Vec::new();
        for n in n_min..=n_max {
            for k in 3..=n {
                for shape in AttachmentShape::all(seed) {
                    let family = GraphFamily::Unicyclic { n, k, shape };
                    graphs.push(CorpusGraph {
                        id: family.to_string(),
                        graph: generate(family)?,
                        family: Some(family),
                    });
                }
            }
        }
        Ok(Corpus { source: CorpusSource::UnicyclicSweep { n_min, n_max, seed }, graphs })
    }

    /// The `n` range of a unicyclic sweep.
    pub fn sweep_range(&self) -> Option<(usize, usize)> {
        match self.source {
            CorpusSource::UnicyclicSweep { n_min, n_max, .. } => Some((n_min, n_max)),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }
}

/// Every connected labeled graph with `1..=max_n` vertices, by iterating
/// adjacency bitmasks. Isomorphic copies are kept. Ids are graph6 strings.
pub fn exhaustive_small_graphs(max_n: usize) -> Result<Corpus> {
    if max_n > EXHAUSTIVE_MAX_ORDER {
        return Err(Error::ScaleGuard(format!(
            "exhaustive enumeration limited to {EXHAUSTIVE_MAX_ORDER} vertices, asked for {max_n}"
        )));
    }
    let mut graphs = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        for mask in 0u64..(1 << pairs.len()) {
            if (mask.count_ones() as usize) + 1 < n {
                continue;
            }
            let edges = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e);
            let graph = Graph::from_edges(n, edges)?;
            if graph.is_connected() {
                graphs.push(CorpusGraph { id: write_graph6(&graph), graph, family: None });
            }
        }
    }
    Ok(Corpus { source: CorpusSource::Exhaustive { max_n }, graphs })
}
