//! Blocks and cut vertices by depth-first search with low-link values.

use crate::graph::Graph;

/// A maximal biconnected subgraph. A bridge forms a two-vertex block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Sorted vertex set.
    pub vertices: Vec<usize>,
    /// Edges as `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiconnectedDecomposition {
    pub blocks: Vec<Block>,
    /// Sorted cut vertices.
    pub articulation_points: Vec<usize>,
    /// Block index of every edge, aligned with [`Graph::edges`].
    pub edge_block: Vec<usize>,
}

impl BiconnectedDecomposition {
    /// Index of the block holding both `u` and `v` with at least three
    /// vertices, if any. Two distinct blocks share at most one vertex, so
    /// the answer is unique.
    pub fn shared_cyclic_block(&self, u: usize, v: usize) -> Option<usize> {
        self.blocks.iter().position(|b| {
            b.vertices.len() >= 3
                && b.vertices.binary_search(&u).is_ok()
                && b.vertices.binary_search(&v).is_ok()
        })
    }
}

struct Frame {
    vertex: usize,
    parent: usize,
    next: usize,
}

/// Linear-time block decomposition. Blocks come out in the order the DFS
/// closes them; isolated vertices belong to no block.
pub fn biconnected_components(g: &Graph) -> BiconnectedDecomposition {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut edge_block = vec![usize::MAX; g.edge_count()];
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut frames: Vec<Frame> = Vec::new();
    let mut time = 0;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        frames.push(Frame { vertex: root, parent: usize::MAX, next: 0 });

        while let Some(frame) = frames.last_mut() {
            let v = frame.vertex;
            if let Some(&w) = g.neighbors(v).get(frame.next) {
                frame.next += 1;
                let parent = frame.parent;
                if disc[w] == usize::MAX {
                    edge_stack.push(g.edge_index(v, w).expect("adjacent"));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    frames.push(Frame { vertex: w, parent: v, next: 0 });
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push(g.edge_index(v, w).expect("adjacent"));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }

            let w = v;
            let v = frame.parent;
            frames.pop();
            if v == usize::MAX {
                continue;
            }
            low[v] = low[v].min(low[w]);
            if low[w] >= disc[v] {
                if v != root {
                    is_cut[v] = true;
                }
                let closing = g.edge_index(v, w).expect("tree edge");
                let id = blocks.len();
                let mut edges = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    edge_block[e] = id;
                    edges.push(g.edges()[e]);
                    if e == closing {
                        break;
                    }
                }
                edges.sort_unstable();
                let mut vertices: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
                vertices.sort_unstable();
                vertices.dedup();
                blocks.push(Block { vertices, edges });
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }

    BiconnectedDecomposition {
        blocks,
        articulation_points: (0..n).filter(|&v| is_cut[v]).collect(),
        edge_block,
    }
}
