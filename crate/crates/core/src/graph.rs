//! Simple undirected graphs over dense integer vertex identifiers,
//! block decomposition, search orderings and small structural predicates.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Vertex identifier. Vertices of a graph on `n` vertices are exactly `0..n`.
pub type Vertex = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(Vertex, usize),
    #[error("graph is disconnected")]
    Disconnected,
}

/// A simple undirected graph. No self-loops, no parallel edges; adjacency
/// lists are kept sorted. All derivation operations (edge/vertex deletion,
/// induced subgraphs) return new graphs and leave the receiver untouched.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
    /// Optional display names, used only by the text formats.
    pub labels: Option<Vec<String>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Self-loops are rejected, parallel
    /// edges are silently deduplicated (the text parsers warn instead).
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v >= self.n() {
            return Err(GraphError::VertexOutOfRange(v, self.n()));
        }
        Ok(())
    }

    /// Inserts the edge `uv` if absent. Panics on self-loops or out-of-range
    /// vertices; use `from_edges` for unchecked input.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        assert!(u != v, "self-loop on {u}");
        assert!(u < self.n() && v < self.n(), "vertex out of range");
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos2 = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos2, u);
            self.m += 1;
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.m);
        for u in self.vertices() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn label(&self, v: Vertex) -> String {
        match &self.labels {
            Some(ls) => ls[v].clone(),
            None => v.to_string(),
        }
    }

    /// New graph with the edge `uv` removed (a no-op if absent).
    pub fn remove_edge(&self, u: Vertex, v: Vertex) -> Graph {
        let mut g = self.clone();
        if let Ok(pos) = g.adj[u].binary_search(&v) {
            g.adj[u].remove(pos);
            let pos2 = g.adj[v].binary_search(&u).unwrap();
            g.adj[v].remove(pos2);
            g.m -= 1;
        }
        g
    }

    /// New graph with the edge `uv` added.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Graph {
        let mut g = self.clone();
        g.add_edge(u, v);
        g
    }

    /// Induced subgraph on `keep` (deduplicated, sorted). Returns the graph
    /// together with the map from new identifiers back to old ones.
    pub fn induced(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut to_parent: Vec<Vertex> = keep.to_vec();
        to_parent.sort_unstable();
        to_parent.dedup();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in to_parent.iter().enumerate() {
            new_id[v] = i;
        }
        let mut g = Graph::empty(to_parent.len());
        for (i, &v) in to_parent.iter().enumerate() {
            for &w in &self.adj[v] {
                if new_id[w] != usize::MAX && new_id[w] > i {
                    g.add_edge(i, new_id[w]);
                }
            }
        }
        (g, to_parent)
    }

    /// New graph with `drop` removed; second component maps new ids to old.
    pub fn remove_vertices(&self, drop: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut gone = vec![false; self.n()];
        for &v in drop {
            gone[v] = true;
        }
        let keep: Vec<Vertex> = self.vertices().filter(|&v| !gone[v]).collect();
        self.induced(&keep)
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.component_of(0).len() == self.n()
    }

    fn component_of(&self, start: Vertex) -> Vec<Vertex> {
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut out = vec![start];
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    out.push(v);
                    queue.push_back(v);
                }
            }
        }
        out
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        for s in self.vertices() {
            if !seen[s] {
                let mut comp = self.component_of(s);
                for &v in &comp {
                    seen[v] = true;
                }
                comp.sort_unstable();
                comps.push(comp);
            }
        }
        comps
    }

    /// Two-colours each component if possible; `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n()];
        for s in self.vertices() {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        queue.push_back(v);
                    } else if side[v] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_complete(&self) -> bool {
        self.m * 2 == self.n() * self.n().saturating_sub(1)
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Cycle 0-1-...-(n-1)-0.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    /// Path 0-1-...-(n-1).
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }
}

/// Block decomposition: the blocks (as vertex sets), the cut-vertices, and
/// which blocks each cut-vertex lies in. Isolated vertices form singleton
/// blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockForest {
    pub blocks: Vec<Vec<Vertex>>,
    pub cut_vertices: Vec<Vertex>,
    /// `incidence[i]` lists the block indices containing `cut_vertices[i]`.
    pub incidence: Vec<Vec<usize>>,
}

impl BlockForest {
    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }

    /// Indices of the blocks containing `v`.
    pub fn blocks_of(&self, v: Vertex) -> Vec<usize> {
        if let Ok(i) = self.cut_vertices.binary_search(&v) {
            return self.incidence[i].clone();
        }
        for (i, b) in self.blocks.iter().enumerate() {
            if b.binary_search(&v).is_ok() {
                return vec![i];
            }
        }
        Vec::new()
    }
}

/// Block decomposition via an iterative lowpoint DFS. Empty and disconnected
/// graphs are fine; every edge lands in exactly one block.
pub fn blocks(g: &Graph) -> BlockForest {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut block_edges: Vec<Vec<(Vertex, Vertex)>> = Vec::new();

    // DFS frame: (vertex, index into adjacency)
    let mut stack: Vec<(Vertex, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            // isolated vertex: singleton block, marked by a degenerate pair
            disc[root] = timer;
            timer += 1;
            block_edges.push(vec![(root, root)]);
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, 0));
        let mut root_children = 0usize;
        while let Some(&mut (u, ref mut i)) = stack.last_mut() {
            if *i < g.degree(u) {
                let v = g.neighbours(u)[*i];
                *i += 1;
                if disc[v] == usize::MAX {
                    parent[v] = u;
                    disc[v] = timer;
                    low[v] = timer;
                    timer += 1;
                    edge_stack.push((u, v));
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((v, 0));
                } else if v != parent[u] && disc[v] < disc[u] {
                    edge_stack.push((u, v));
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        // the tree edge (p, u) closes a block
                        if p != root {
                            is_cut[p] = true;
                        }
                        let mut es = Vec::new();
                        while let Some(&(x, y)) = edge_stack.last() {
                            edge_stack.pop();
                            es.push((x, y));
                            if (x, y) == (p, u) {
                                break;
                            }
                        }
                        block_edges.push(es);
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }

    let mut blocks_out: Vec<Vec<Vertex>> = Vec::new();
    for es in &block_edges {
        let mut vs: Vec<Vertex> = Vec::new();
        for &(x, y) in es {
            vs.push(x);
            vs.push(y);
        }
        vs.sort_unstable();
        vs.dedup();
        blocks_out.push(vs);
    }
    blocks_out.sort();

    let mut cut_vertices: Vec<Vertex> = (0..n).filter(|&v| is_cut[v]).collect();
    cut_vertices.sort_unstable();
    let incidence = cut_vertices
        .iter()
        .map(|&v| {
            blocks_out
                .iter()
                .enumerate()
                .filter(|(_, b)| b.binary_search(&v).is_ok())
                .map(|(i, _)| i)
                .collect()
        })
        .collect();

    BlockForest {
        blocks: blocks_out,
        cut_vertices,
        incidence,
    }
}

/// A depth-first ordering `z1..zt` with `z1 = start` in which every later
/// vertex has an earlier neighbour. Ties broken toward lower identifiers.
pub fn search_ordering(g: &Graph, start: Vertex) -> Result<Vec<Vertex>, GraphError> {
    if start >= g.n() {
        return Err(GraphError::VertexOutOfRange(start, g.n()));
    }
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        order.push(u);
        // Push in reverse so the lowest-identifier neighbour pops first.
        for &v in g.neighbours(u).iter().rev() {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    if order.len() != g.n() {
        return Err(GraphError::Disconnected);
    }
    Ok(order)
}

/// Structural predicates used by the colouring dispatch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralFlags {
    pub is_complete: bool,
    pub is_odd_cycle: bool,
    pub is_odd_wheel: bool,
    /// Lowest-identifier vertex adjacent to every other vertex, if any.
    pub dominating_vertex: Option<Vertex>,
}

pub fn structural_predicates(g: &Graph) -> StructuralFlags {
    let n = g.n();
    let dominating_vertex = g.vertices().find(|&v| g.degree(v) == n - 1);
    let is_complete = g.is_complete();
    let is_odd_cycle =
        n >= 3 && n % 2 == 1 && g.vertices().all(|v| g.degree(v) == 2) && g.is_connected();
    let is_odd_wheel = is_odd_wheel_scan(g);
    StructuralFlags {
        is_complete,
        is_odd_cycle,
        is_odd_wheel,
        dominating_vertex,
    }
}

fn is_odd_wheel_scan(g: &Graph) -> bool {
    let n = g.n();
    if n < 4 || !n.is_multiple_of(2) {
        // odd rim plus hub means an even vertex count
        return false;
    }
    for hub in g.vertices() {
        if g.degree(hub) != n - 1 {
            continue;
        }
        let (rim, _) = g.remove_vertices(&[hub]);
        if rim.n() >= 3 && rim.vertices().all(|v| rim.degree(v) == 2) && rim.is_connected() {
            return true;
        }
    }
    false
}

/// If `g` is an odd wheel, returns `(hub, rim cycle order)` with the lowest
/// admissible hub and the rim walked from its lowest vertex toward its lower
/// neighbour.
pub fn odd_wheel_structure(g: &Graph) -> Option<(Vertex, Vec<Vertex>)> {
    let n = g.n();
    if n < 4 || !n.is_multiple_of(2) {
        return None;
    }
    for hub in g.vertices() {
        if g.degree(hub) != n - 1 {
            continue;
        }
        let (rim, map) = g.remove_vertices(&[hub]);
        if rim.n() < 3 || !rim.vertices().all(|v| rim.degree(v) == 2) || !rim.is_connected() {
            continue;
        }
        let mut cycle = vec![0usize];
        let mut prev = 0usize;
        let mut cur = rim.neighbours(0)[0];
        while cur != 0 {
            cycle.push(cur);
            let next = rim
                .neighbours(cur)
                .iter()
                .copied()
                .find(|&w| w != prev)
                .unwrap();
            prev = cur;
            cur = next;
        }
        return Some((hub, cycle.into_iter().map(|v| map[v]).collect()));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_triangle_with_pendant() {
        // triangle 0-1-2 plus pendant edge 2-3
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let bf = blocks(&g);
        assert_eq!(bf.blocks.len(), 2);
        assert!(bf.blocks.contains(&vec![0, 1, 2]));
        assert!(bf.blocks.contains(&vec![2, 3]));
        assert_eq!(bf.cut_vertices, vec![2]);
    }

    #[test]
    fn blocks_two_connected_single_block() {
        let g = Graph::cycle(5);
        let bf = blocks(&g);
        assert_eq!(bf.blocks.len(), 1);
        assert!(bf.cut_vertices.is_empty());
    }

    #[test]
    fn blocks_path_four() {
        let g = Graph::path(4);
        let bf = blocks(&g);
        assert_eq!(bf.blocks.len(), 3);
        assert_eq!(bf.cut_vertices, vec![1, 2]);
        for b in &bf.blocks {
            assert_eq!(b.len(), 2);
        }
    }

    #[test]
    fn blocks_isolated_and_disconnected() {
        let mut g = Graph::empty(4);
        g.add_edge(1, 2);
        let bf = blocks(&g);
        assert_eq!(bf.blocks.len(), 3); // {0}, {1,2}, {3}
        assert!(bf.blocks.contains(&vec![0]));
        assert!(bf.blocks.contains(&vec![3]));
        assert!(bf.cut_vertices.is_empty());
    }

    #[test]
    fn blocks_edges_partition() {
        // two triangles sharing a vertex plus a tail
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)])
            .unwrap();
        let bf = blocks(&g);
        let mut edge_count = 0;
        for b in &bf.blocks {
            let (sub, _) = g.induced(b);
            edge_count += sub.m();
        }
        assert_eq!(edge_count, g.m());
        assert_eq!(bf.cut_vertices, vec![2, 4]);
    }

    #[test]
    fn search_ordering_path() {
        let g = Graph::path(3);
        assert_eq!(search_ordering(&g, 0).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn search_ordering_single_vertex() {
        let g = Graph::empty(1);
        assert_eq!(search_ordering(&g, 0).unwrap(), vec![0]);
    }

    #[test]
    fn search_ordering_disconnected_fails() {
        let g = Graph::empty(2);
        assert_eq!(search_ordering(&g, 0), Err(GraphError::Disconnected));
    }

    #[test]
    fn search_ordering_prefix_property() {
        let g = Graph::from_edges(6, &[(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]).unwrap();
        let ord = search_ordering(&g, 2).unwrap();
        assert_eq!(ord[0], 2);
        let mut sorted = ord.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..6).collect::<Vec<_>>());
        for i in 1..ord.len() {
            assert!(
                ord[..i].iter().any(|&z| g.has_edge(z, ord[i])),
                "prefix property violated at {i}"
            );
        }
    }

    #[test]
    fn predicates_k4() {
        let flags = structural_predicates(&Graph::complete(4));
        assert!(flags.is_complete);
        assert_eq!(flags.dominating_vertex, Some(0));
        assert!(flags.is_odd_wheel); // K4 is the wheel on a triangle
        assert!(!flags.is_odd_cycle);
    }

    #[test]
    fn predicates_w5() {
        let g = crate::morass::odd_wheel(5).unwrap();
        let flags = structural_predicates(&g);
        assert!(flags.is_odd_wheel);
        assert!(!flags.is_complete);
        assert_eq!(flags.dominating_vertex, Some(5));
        let (hub, rim) = odd_wheel_structure(&g).unwrap();
        assert_eq!(hub, 5);
        assert_eq!(rim.len(), 5);
    }

    #[test]
    fn predicates_petersen() {
        let g = crate::fixtures::petersen();
        let flags = structural_predicates(&g);
        assert!(!flags.is_complete);
        assert!(!flags.is_odd_cycle);
        assert!(!flags.is_odd_wheel);
        assert_eq!(flags.dominating_vertex, None);
    }

    #[test]
    fn odd_cycle_flag() {
        assert!(structural_predicates(&Graph::cycle(7)).is_odd_cycle);
        assert!(!structural_predicates(&Graph::cycle(6)).is_odd_cycle);
        // triangle is both complete and an odd cycle
        let flags = structural_predicates(&Graph::cycle(3));
        assert!(flags.is_odd_cycle && flags.is_complete);
    }

    #[test]
    fn induced_maps_back() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let (h, map) = g.induced(&[4, 1, 2]);
        assert_eq!(h.n(), 3);
        assert_eq!(map, vec![1, 2, 4]);
        assert!(h.has_edge(0, 1)); // 1-2
        assert!(!h.has_edge(0, 2)); // 1-4 not an edge
    }
}
