mod common;

use pathenergy::connectivity::{biconnected_components, max_disjoint_paths};
use pathenergy::graph::{generate, random_connected, GraphFamily};
use pathenergy::verify::oracle_disjoint_paths;
use pathenergy::{path_matrix, path_matrix_with, Graph, PathMatrixOptions};
use proptest::prelude::*;
use rand::Rng;

fn naive() -> PathMatrixOptions {
    PathMatrixOptions { use_blocks: false, workers: 1 }
}

fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
}

#[test]
fn petersen_all_pairs_three() {
    let g = petersen();
    let p = path_matrix(&g);
    for s in 0..10 {
        for t in 0..10 {
            if s != t {
                assert_eq!(p.get(s, t), 3);
                assert_eq!(oracle_disjoint_paths(&g, s, t).unwrap(), 3);
            }
        }
    }
}

#[test]
fn trees_are_all_ones() {
    let mut rng = common::rng(5);
    for seed in 0..20 {
        let n = rng.gen_range(2..30);
        let tree = random_connected(n, n - 1, seed).unwrap();
        let p = path_matrix(&tree);
        assert!((0..n).all(|i| (0..n).all(|j| p.get(i, j) == u32::from(i != j))));
    }
}

#[test]
fn blocks_match_naive_on_random_graphs() {
    let mut rng = common::rng(77);
    for seed in 0..200 {
        let n = rng.gen_range(2..=40);
        // sparse draws leave plenty of cut vertices
        let m = rng.gen_range(n - 1..=(2 * n).min(n * (n - 1) / 2));
        let g = random_connected(n, m, seed).unwrap();
        assert_eq!(path_matrix(&g), path_matrix_with(&g, &naive()), "seed {seed}");
    }
}

#[test]
fn triangle_chain_blocks() {
    let g = common::triangle_chain(50);
    let d = biconnected_components(&g);
    assert_eq!(d.blocks.len(), 50);
    assert_eq!(d.articulation_points.len(), 49);
    assert_eq!(path_matrix(&g), path_matrix_with(&g, &naive()));
}

#[test]
fn adding_edges_never_decreases_entries() {
    let mut rng = common::rng(3);
    for seed in 0..25 {
        let n = rng.gen_range(4..14);
        let mut g = random_connected(n, n - 1, seed).unwrap();
        let mut before = path_matrix(&g);
        while !g.is_complete() {
            let (u, v) = loop {
                let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
                if u != v && !g.has_edge(u, v) {
                    break (u, v);
                }
            };
            g = g.with_edge(u, v).unwrap();
            let after = path_matrix(&g);
            assert!(before.entries().iter().zip(after.entries()).all(|(a, b)| a <= b));
            before = after;
        }
        assert_eq!(before, path_matrix(&generate(GraphFamily::Complete { n }).unwrap()));
    }
}

/// p_uv = 1 exactly when u, v are connected and separated by a cut vertex
/// or joined by a bridge, checked by deleting vertices.
#[test]
fn single_path_pairs_are_separable() {
    let mut rng = common::rng(11);
    for seed in 0..40 {
        let n = rng.gen_range(3..12);
        let m = rng.gen_range(n - 1..=(n * (n - 1) / 2).min(2 * n));
        let g = random_connected(n, m, seed).unwrap();
        let p = path_matrix(&g);
        for u in 0..n {
            for v in u + 1..n {
                let separated = (0..n).filter(|&w| w != u && w != v).any(|w| {
                    let keep: Vec<usize> = (0..n).filter(|&x| x != w).collect();
                    let h = g.induced(&keep);
                    let label = h.components();
                    let local = |x: usize| keep.binary_search(&x).unwrap();
                    label[local(u)] != label[local(v)]
                });
                let bridge = g.has_edge(u, v) && {
                    let without = Graph::from_edges(n, g.edges().iter().copied().filter(|&e| e != (u, v))).unwrap();
                    let label = without.components();
                    label[u] != label[v]
                };
                assert_eq!(p.get(u, v) == 1, separated || bridge, "seed {seed} pair ({u}, {v})");
            }
        }
    }
}

fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>(), 0.0f64..1.0).prop_map(|(n, seed, density)| {
        let max = n * (n - 1) / 2;
        let m = n - 1 + ((max - (n - 1)) as f64 * density) as usize;
        random_connected(n, m, seed).unwrap()
    })
}

proptest! {
    #[test]
    fn matches_oracle_and_degree_bound(g in arb_connected(8)) {
        let p = path_matrix(&g);
        for u in 0..g.order() {
            prop_assert_eq!(p.get(u, u), 0);
            for v in 0..g.order() {
                prop_assert_eq!(p.get(u, v), p.get(v, u));
                if u < v {
                    prop_assert_eq!(p.get(u, v) as usize, oracle_disjoint_paths(&g, u, v).unwrap());
                    prop_assert!(p.get(u, v) as usize <= g.degree(u).min(g.degree(v)));
                    prop_assert!(p.get(u, v) >= 1);
                }
            }
        }
    }

    #[test]
    fn flow_equals_entry(g in arb_connected(20), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let (s, t) = (a.index(g.order()), b.index(g.order()));
        prop_assume!(s != t);
        prop_assert_eq!(max_disjoint_paths(&g, s, t).unwrap(), path_matrix(&g).get(s, t) as usize);
    }
}
