//! Seeded random instance generators for the test corpora.

use crate::graph::{Graph, Vertex};
use crate::rng::SplitMix64;

/// Random graph on `n` vertices where each possible edge appears with
/// probability `num/den`.
pub fn random_graph(n: usize, num: usize, den: usize, rng: &mut SplitMix64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.chance(num, den) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random connected graph: a random spanning tree plus extra random edges.
pub fn random_connected_graph(n: usize, extra: usize, rng: &mut SplitMix64) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(v, rng.below(v));
    }
    let mut added = 0;
    let mut attempts = 0;
    while added < extra && attempts < extra * 10 + 20 {
        attempts += 1;
        if n < 2 {
            break;
        }
        let u = rng.below(n);
        let v = rng.below(n);
        if u != v && !g.has_edge(u, v) {
            g.add_edge(u, v);
            added += 1;
        }
    }
    g
}

/// Attempts a random d-regular graph by the pairing model; retries stubs
/// until a simple matching is found. `n * d` must be even. The result can
/// occasionally be near-regular when retries run out.
pub fn random_regular(n: usize, d: usize, rng: &mut SplitMix64) -> Graph {
    assert!((n * d).is_multiple_of(2), "n * d must be even");
    'retry: for _ in 0..200 {
        let mut stubs: Vec<Vertex> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        rng.shuffle(&mut stubs);
        let mut g = Graph::empty(n);
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || g.has_edge(u, v) {
                continue 'retry;
            }
            g.add_edge(u, v);
        }
        return g;
    }
    // fall back to a circulant, which is d-regular and connected
    let mut g = Graph::empty(n);
    for v in 0..n {
        for j in 1..=(d / 2) {
            g.add_edge(v, (v + j) % n);
        }
    }
    if d % 2 == 1 {
        assert!(n.is_multiple_of(2));
        for v in 0..n / 2 {
            g.add_edge(v, v + n / 2);
        }
    }
    g
}

/// Random Gallai tree: glue random blocks (cliques or odd cycles) at
/// existing vertices until the target size is reached.
pub fn random_gallai_tree(target_n: usize, rng: &mut SplitMix64) -> Graph {
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut n = 1usize;
    while n < target_n {
        let attach = rng.below(n);
        let remaining = target_n - n;
        // (new vertices, block is a cycle): K2, K3, K4, C5, C7
        let mut options: Vec<(usize, bool)> = vec![(1, false)];
        if remaining >= 2 {
            options.push((2, false));
        }
        if remaining >= 3 {
            options.push((3, false));
        }
        if remaining >= 4 {
            options.push((4, true));
        }
        if remaining >= 6 {
            options.push((6, true));
        }
        let &(extra, is_cycle) = rng.pick(&options);
        let ring: Vec<Vertex> = std::iter::once(attach).chain(n..n + extra).collect();
        n += extra;
        if is_cycle {
            for i in 0..ring.len() {
                edges.push((ring[i], ring[(i + 1) % ring.len()]));
            }
        } else {
            for (i, &u) in ring.iter().enumerate() {
                for &v in &ring[i + 1..] {
                    edges.push((u, v));
                }
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generator emits simple edges")
}
