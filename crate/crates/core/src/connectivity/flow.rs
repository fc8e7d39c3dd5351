//! Vertex-split unit-capacity flow networks.
//!
//! For a pair `(s, t)` every other vertex `v` becomes an arc `v_in -> v_out`
//! of capacity one, and every edge `{u, v}` becomes the two arcs
//! `u_out -> v_in` and `v_out -> u_in`. The terminals are not split: `s`
//! is a single node playing `s_out` and `t` a single node playing `t_in`.
//! An integral maximum flow is then a maximum family of internally
//! vertex-disjoint `s - t` paths.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which half of a split vertex a network node stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Port {
    In,
    Out,
}

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct FlowNetwork {
    source: usize,
    sink: usize,
    /// Original vertex and port of every node.
    nodes: Vec<(usize, Port)>,
    /// Every arc of the construction, including the ones that enter the
    /// source or leave the sink and so can never carry flow.
    arcs: Vec<(usize, usize)>,
    // Residual graph over the usable arcs, in CSR form. Residual edge `2a`
    // is usable arc `a` and `2a + 1` its reverse.
    offsets: Vec<u32>,
    slots: Vec<u32>,
    head: Vec<u32>,
    cap: Vec<u8>,
}

/// Builds the split network for the pair `(s, t)`.
pub fn split_transform(g: &Graph, s: usize, t: usize) -> Result<FlowNetwork> {
    let n = g.order();
    if s >= n || t >= n {
        return Err(Error::param(format!("terminal out of range 0..{n}: ({s}, {t})")));
    }
    if s == t {
        return Err(Error::param(format!("source and sink coincide at vertex {s}")));
    }

    // node ids: 0 = s, 1 = t, then (v_in, v_out) pairs in vertex order
    let mut node_in = vec![0usize; n];
    let mut node_out = vec![0usize; n];
    let mut nodes = Vec::with_capacity(2 * n);
    nodes.push((s, Port::Out));
    nodes.push((t, Port::In));
    node_in[s] = 0;
    node_out[s] = 0;
    node_in[t] = 1;
    node_out[t] = 1;
    for v in (0..n).filter(|&v| v != s && v != t) {
        node_in[v] = nodes.len();
        nodes.push((v, Port::In));
        node_out[v] = nodes.len();
        nodes.push((v, Port::Out));
    }

    let mut arcs = Vec::with_capacity(n + 2 * g.edge_count());
    for v in (0..n).filter(|&v| v != s && v != t) {
        arcs.push((node_in[v], node_out[v]));
    }
    for &(u, v) in g.edges() {
        arcs.push((node_out[u], node_in[v]));
        arcs.push((node_out[v], node_in[u]));
    }

    let (source, sink) = (0, 1);
    let usable: Vec<(usize, usize)> = arcs
        .iter()
        .copied()
        .filter(|&(from, to)| to != source && from != sink)
        .collect();

    let node_count = nodes.len();
    let mut offsets = vec![0u32; node_count + 1];
    for &(from, to) in &usable {
        offsets[from + 1] += 1;
        offsets[to + 1] += 1;
    }
    for i in 0..node_count {
        offsets[i + 1] += offsets[i];
    }
    let mut fill = offsets.clone();
    let mut slots = vec![0u32; 2 * usable.len()];
    let mut head = Vec::with_capacity(2 * usable.len());
    let mut cap = Vec::with_capacity(2 * usable.len());
    for (a, &(from, to)) in usable.iter().enumerate() {
        head.extend([to as u32, from as u32]);
        cap.extend([1u8, 0]);
        slots[fill[from] as usize] = 2 * a as u32;
        fill[from] += 1;
        slots[fill[to] as usize] = 2 * a as u32 + 1;
        fill[to] += 1;
    }

    Ok(FlowNetwork {
        source,
        sink,
        nodes,
        arcs,
        offsets,
        slots,
        head,
        cap,
    })
}

impl FlowNetwork {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// All arcs of the construction, `(n - 2) + 2|E|` of them.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs that can carry flow: those not entering the source and not
    /// leaving the sink.
    pub fn usable_arc_count(&self) -> usize {
        self.head.len() / 2
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    /// Original vertex and port of a node.
    pub fn node(&self, id: usize) -> (usize, Port) {
        self.nodes[id]
    }

    /// Usable arcs as `(from, to)` node pairs.
    pub fn usable_arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.usable_arc_count()).map(|a| (self.head[2 * a + 1] as usize, self.head[2 * a] as usize))
    }

    fn edges_from(&self, node: usize) -> &[u32] {
        &self.slots[self.offsets[node] as usize..self.offsets[node + 1] as usize]
    }

    /// Upper bound on the flow value: usable arcs leaving the source or
    /// entering the sink, whichever is fewer.
    fn cut_bound(&self) -> usize {
        let out = self.edges_from(self.source).iter().filter(|&&e| e % 2 == 0).count();
        let into = self.edges_from(self.sink).iter().filter(|&&e| e % 2 == 1).count();
        out.min(into)
    }

    /// Decomposes the current flow into source-to-sink paths of original
    /// vertices.
    pub fn flow_paths(&self) -> Vec<Vec<usize>> {
        let mut used = vec![false; self.usable_arc_count()];
        let mut paths = Vec::new();
        loop {
            let mut node = self.source;
            let mut path = vec![self.nodes[node].0];
            while node != self.sink {
                let next = self.edges_from(node).iter().map(|&e| e as usize).find(|&e| {
                    e % 2 == 0 && self.cap[e] == 0 && !used[e / 2]
                });
                let Some(e) = next else {
                    return paths;
                };
                used[e / 2] = true;
                node = self.head[e] as usize;
                let vertex = self.nodes[node].0;
                if path.last() != Some(&vertex) {
                    path.push(vertex);
                }
            }
            paths.push(path);
        }
    }
}

/// Maximum source-to-sink flow by shortest augmenting paths. Every arc has
/// capacity one, so each augmentation adds exactly one unit; the search
/// stops once the flow meets the terminals' degree bound.
pub fn max_flow_unit(net: &mut FlowNetwork) -> usize {
    let bound = net.cut_bound();
    let node_count = net.node_count();
    let mut parent_edge = vec![NONE; node_count];
    let mut seen = vec![0u32; node_count];
    let mut stamp = 0u32;
    let mut queue = VecDeque::with_capacity(node_count);
    let mut flow = 0;

    while flow < bound {
        stamp += 1;
        seen[net.source] = stamp;
        queue.clear();
        queue.push_back(net.source);
        let mut reached = false;
        'bfs: while let Some(u) = queue.pop_front() {
            for &e in net.edges_from(u) {
                let e = e as usize;
                let w = net.head[e] as usize;
                if net.cap[e] == 0 || seen[w] == stamp {
                    continue;
                }
                seen[w] = stamp;
                parent_edge[w] = e as u32;
                if w == net.sink {
                    reached = true;
                    break 'bfs;
                }
                queue.push_back(w);
            }
        }
        if !reached {
            break;
        }
        let mut node = net.sink;
        while node != net.source {
            let e = parent_edge[node] as usize;
            net.cap[e] -= 1;
            net.cap[e ^ 1] += 1;
            node = net.head[e ^ 1] as usize;
        }
        flow += 1;
    }
    flow
}

/// Maximum number of internally vertex-disjoint `s - t` paths. A direct
/// edge counts as one path; vertices in different components give 0.
pub fn max_disjoint_paths(g: &Graph, s: usize, t: usize) -> Result<usize> {
    let mut net = split_transform(g, s, t)?;
    Ok(max_flow_unit(&mut net))
}
