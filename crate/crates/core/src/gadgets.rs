//! Executable hardness reductions and instance generators: hub gadgets,
//! degree gadgets, the rigid hypergraph, the minimally-k-connected
//! construction, connectivity boosting, and the grid family.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::connectivity;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GadgetError {
    #[error("hub gadgets need at least 4 outlets, got {0}")]
    TooFewOutlets(usize),
    #[error("degree gadgets need l > k >= 4, got l = {0}, k = {1}")]
    BadGadgetParams(usize, usize),
    #[error("k must be at least {0}")]
    KTooSmall(usize),
    #[error("graph is not {0}-connected")]
    NotConnectedEnough(usize),
    #[error("graph too small: need at least {0} vertices")]
    TooSmall(usize),
    #[error("hypergraph is not {0}-uniform")]
    NotUniform(usize),
    #[error("grid family needs x >= 3, got {0}")]
    GridTooNarrow(usize),
    #[error("connectivity boosting did not converge")]
    BoostDiverged,
}

/// A hypergraph over dense vertex identifiers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<Vertex>>,
    pub labels: Option<Vec<String>>,
}

impl Hypergraph {
    pub fn new(n: usize, mut edges: Vec<Vec<Vertex>>) -> Self {
        for e in &mut edges {
            e.sort_unstable();
            e.dedup();
            assert!(e.iter().all(|&v| v < n), "hyperedge vertex out of range");
        }
        Hypergraph {
            n,
            edges,
            labels: None,
        }
    }

    /// A graph seen as a hypergraph whose edges are the 2-element sets.
    pub fn from_graph_edges(g: &Graph) -> Self {
        Hypergraph::new(
            g.n(),
            g.edges().into_iter().map(|(u, v)| vec![u, v]).collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }

    pub fn is_k_uniform(&self, k: usize) -> bool {
        self.edges.iter().all(|e| e.len() == k)
    }

    pub fn label(&self, v: Vertex) -> String {
        match &self.labels {
            Some(ls) => ls[v].clone(),
            None => v.to_string(),
        }
    }
}

/// A generated gadget: the graph plus its designated outlets (and, for the
/// recursive degree gadget, the chain of sub-gadget arities).
#[derive(Clone, Debug)]
pub struct GadgetGraph {
    pub graph: Graph,
    pub outlets: Vec<Vertex>,
    pub recursion_chain: Vec<usize>,
}

/// Which gadget replaced which original vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetNote {
    pub original: Vertex,
    pub outlets: Vec<Vertex>,
}

/// Result of a vertex-replacement reduction.
#[derive(Clone, Debug)]
pub struct ReductionOutput {
    pub graph: Graph,
    /// original vertex -> image vertex, for vertices that survived
    pub forward_map: Vec<(Vertex, Vertex)>,
    pub notes: Vec<GadgetNote>,
}

#[derive(Serialize)]
struct ReductionMapJson<'a> {
    forward_map: &'a [(Vertex, Vertex)],
    notes: &'a [GadgetNote],
}

impl ReductionOutput {
    pub fn map_json(&self) -> String {
        serde_json::to_string_pretty(&ReductionMapJson {
            forward_map: &self.forward_map,
            notes: &self.notes,
        })
        .expect("serializable")
    }
}

/// Mutable graph under vertex surgery: stable identifiers with tombstones,
/// compacted to a dense graph at the end.
struct EditGraph {
    adj: Vec<BTreeSet<usize>>,
    alive: Vec<bool>,
}

impl EditGraph {
    fn from_graph(g: &Graph) -> Self {
        EditGraph {
            adj: g
                .vertices()
                .map(|v| g.neighbours(v).iter().copied().collect())
                .collect(),
            alive: vec![true; g.n()],
        }
    }

    fn add_vertex(&mut self) -> usize {
        self.adj.push(BTreeSet::new());
        self.alive.push(true);
        self.adj.len() - 1
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    fn remove_vertex(&mut self, v: usize) {
        let nb: Vec<usize> = self.adj[v].iter().copied().collect();
        for w in nb {
            self.adj[w].remove(&v);
        }
        self.adj[v].clear();
        self.alive[v] = false;
    }

    fn neighbours(&self, v: usize) -> Vec<usize> {
        self.adj[v].iter().copied().collect()
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn compact(self) -> (Graph, Vec<Option<usize>>) {
        let mut new_id = vec![None; self.adj.len()];
        let mut next = 0usize;
        for (v, &alive) in self.alive.iter().enumerate() {
            if alive {
                new_id[v] = Some(next);
                next += 1;
            }
        }
        let mut g = Graph::empty(next);
        for (v, nb) in self.adj.iter().enumerate() {
            if let Some(nv) = new_id[v] {
                for &w in nb {
                    let nw = new_id[w].expect("edges only between live vertices");
                    if nv < nw {
                        g.add_edge(nv, nw);
                    }
                }
            }
        }
        (g, new_id)
    }
}

/// Hub gadget with `l >= 4` outlets: a caterpillar cubic tree with `l`
/// leaves whose pendant edges become diamonds and whose internal edges
/// become serial diamond pairs. Outlets are the degree-2 vertices
/// 0..l; they correspond to the leaves in label order.
pub fn hub_gadget(l: usize) -> Result<GadgetGraph, GadgetError> {
    if l < 4 {
        return Err(GadgetError::TooFewOutlets(l));
    }
    let t = l - 2; // internal caterpillar vertices
    let mut g = EditGraph {
        adj: Vec::new(),
        alive: Vec::new(),
    };
    let outlets: Vec<usize> = (0..l).map(|_| g.add_vertex()).collect();
    let spine: Vec<usize> = (0..t).map(|_| g.add_vertex()).collect();

    // leaf assignment in label order: two at each end, one per middle vertex
    let mut pendant: Vec<(usize, usize)> = Vec::new(); // (spine vertex, leaf)
    let mut next_leaf = 0usize;
    pendant.push((spine[0], outlets[next_leaf]));
    next_leaf += 1;
    pendant.push((spine[0], outlets[next_leaf]));
    next_leaf += 1;
    for &s in &spine[1..t - 1] {
        pendant.push((s, outlets[next_leaf]));
        next_leaf += 1;
    }
    pendant.push((spine[t - 1], outlets[next_leaf]));
    next_leaf += 1;
    pendant.push((spine[t - 1], outlets[next_leaf]));

    // pendant edges -> diamonds (picks: spine vertex and outlet)
    for &(s, o) in &pendant {
        let r = g.add_vertex();
        let q = g.add_vertex();
        g.add_edge(r, q);
        g.add_edge(s, r);
        g.add_edge(s, q);
        g.add_edge(o, r);
        g.add_edge(o, q);
    }
    // internal edges -> serial diamond pairs (ends: consecutive spine)
    for w in spine.windows(2) {
        let (s1, s2) = (w[0], w[1]);
        let mid = g.add_vertex();
        for &end in &[s1, s2] {
            let r = g.add_vertex();
            let q = g.add_vertex();
            g.add_edge(r, q);
            g.add_edge(end, r);
            g.add_edge(end, q);
            g.add_edge(mid, r);
            g.add_edge(mid, q);
        }
    }
    let (graph, new_id) = g.compact();
    Ok(GadgetGraph {
        graph,
        outlets: outlets
            .into_iter()
            .map(|v| new_id[v].expect("outlets survive"))
            .collect(),
        recursion_chain: vec![l],
    })
}

/// Replaces every vertex of degree at least 4 in a 2-connected graph with a
/// hub gadget wired outlet-to-neighbour. The output is 2-connected with
/// maximal local connectivity 3 and is 3-colourable iff the input is.
pub fn reduce_to_mlc3(g: &Graph) -> Result<ReductionOutput, GadgetError> {
    if !connectivity::is_k_connected(g, 2) {
        return Err(GadgetError::NotConnectedEnough(2));
    }
    let mut edit = EditGraph::from_graph(g);
    let mut replaced: Vec<(Vertex, Vec<usize>)> = Vec::new(); // (orig, outlet edit-ids)
    for v in g.vertices() {
        if edit.degree(v) < 4 {
            continue;
        }
        let gadget = hub_gadget(edit.degree(v))?;
        let neighbours = edit.neighbours(v);
        edit.remove_vertex(v);
        let base = edit.adj.len();
        for _ in 0..gadget.graph.n() {
            edit.add_vertex();
        }
        for (a, b) in gadget.graph.edges() {
            edit.add_edge(base + a, base + b);
        }
        let outlet_ids: Vec<usize> = gadget.outlets.iter().map(|&o| base + o).collect();
        for (i, &nb) in neighbours.iter().enumerate() {
            edit.add_edge(outlet_ids[i], nb);
        }
        replaced.push((v, outlet_ids));
    }
    finish_reduction(g, edit, replaced)
}

fn finish_reduction(
    g: &Graph,
    edit: EditGraph,
    replaced: Vec<(Vertex, Vec<usize>)>,
) -> Result<ReductionOutput, GadgetError> {
    let (graph, new_id) = edit.compact();
    let forward_map: Vec<(Vertex, Vertex)> = g
        .vertices()
        .filter_map(|v| new_id.get(v).copied().flatten().map(|nv| (v, nv)))
        .collect();
    // outlets identified with original vertices can be replaced later in
    // the sweep; notes keep the surviving ones
    let notes: Vec<GadgetNote> = replaced
        .into_iter()
        .map(|(original, outlets)| GadgetNote {
            original,
            outlets: outlets.into_iter().filter_map(|o| new_id[o]).collect(),
        })
        .collect();
    Ok(ReductionOutput {
        graph,
        forward_map,
        notes,
    })
}

/// Repeatedly clones a cut vertex (as a non-adjacent twin) until the graph
/// is (j+1)-connected. Colourability is preserved for every k >= 2.
pub fn boost_connectivity(g: &Graph, j: usize) -> Result<Graph, GadgetError> {
    if j < 1 {
        return Err(GadgetError::KTooSmall(1));
    }
    if g.n() < j + 2 {
        return Err(GadgetError::TooSmall(j + 2));
    }
    if !connectivity::is_k_connected(g, j) {
        return Err(GadgetError::NotConnectedEnough(j));
    }
    let mut cur = g.clone();
    let budget = 4 * g.n() * g.n() + 64;
    for _ in 0..budget {
        if connectivity::is_k_connected(&cur, j + 1) {
            return Ok(cur);
        }
        let cut = find_j_cut(&cur, j).ok_or(GadgetError::BoostDiverged)?;
        let s = cut[0];
        let mut next = Graph::empty(cur.n() + 1);
        for (a, b) in cur.edges() {
            next.add_edge(a, b);
        }
        let clone_id = cur.n();
        for &w in cur.neighbours(s) {
            next.add_edge(clone_id, w);
        }
        cur = next;
    }
    Err(GadgetError::BoostDiverged)
}

fn find_j_cut(g: &Graph, j: usize) -> Option<Vec<Vertex>> {
    for x in g.vertices() {
        for y in (x + 1)..g.n() {
            if g.has_edge(x, y) {
                continue;
            }
            if let Ok((value, Some(sep))) = connectivity::local_vertex_connectivity(g, x, y) {
                if value <= j {
                    return Some(sep.separator);
                }
            }
        }
    }
    None
}

/// The recursive degree gadget G_{l,k} for l > k >= 4: outlets are 0..l, all
/// vertices have degree at most k, and in every 3-colouring the b-vertices
/// of each level share one colour. `recursion_chain` records the arities
/// down the recursion (e.g. 10 -> 8 -> 6 for G_{10,4}).
pub fn degree_gadget(l: usize, k: usize) -> Result<GadgetGraph, GadgetError> {
    if k < 4 || l <= k {
        return Err(GadgetError::BadGadgetParams(l, k));
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut next_id = l;
    let mut chain = Vec::new();
    let outlet_ids: Vec<usize> = (0..l).collect();
    build_degree_gadget(l, k, &outlet_ids, &mut next_id, &mut edges, &mut chain);
    let graph = Graph::from_edges(next_id, &edges).expect("gadget edges are simple");
    Ok(GadgetGraph {
        graph,
        outlets: outlet_ids,
        recursion_chain: chain,
    })
}

fn build_degree_gadget(
    l: usize,
    k: usize,
    outlets: &[usize],
    next_id: &mut usize,
    edges: &mut Vec<(usize, usize)>,
    chain: &mut Vec<usize>,
) {
    chain.push(l);
    let mut fresh = || {
        let id = *next_id;
        *next_id += 1;
        id
    };
    if l <= (k - 2) * (k - 1) {
        // base gadget on K_{k-1, k-a} plus the edge u1 u2
        let a = l.div_ceil(k - 1);
        let bs: Vec<usize> = (0..k - 1).map(|_| fresh()).collect();
        let us: Vec<usize> = (0..k - a).map(|_| fresh()).collect();
        for &b in &bs {
            for &u in &us {
                edges.push((b, u));
            }
        }
        edges.push((us[0], us[1]));
        // partition cells of size a (first r of them) or a-1, in outlet order
        let r = l - (k - 1) * (a - 1);
        let mut pos = 0usize;
        for (i, &b) in bs.iter().enumerate() {
            let size = if i < r { a } else { a - 1 };
            for &w in &outlets[pos..pos + size] {
                edges.push((w, b));
            }
            pos += size;
        }
    } else {
        // intermediate gadget on K_{k-1,1,1}; the last b is replaced by the
        // attached sub-gadget
        let bs: Vec<usize> = (0..k - 2).map(|_| fresh()).collect();
        let u1 = fresh();
        let u2 = fresh();
        for &b in &bs {
            edges.push((b, u1));
            edges.push((b, u2));
        }
        edges.push((u1, u2));
        let mut pos = 0usize;
        for &b in &bs {
            for &w in &outlets[pos..pos + (k - 2)] {
                edges.push((w, b));
            }
            pos += k - 2;
        }
        // attach G_{l1,k} at the deleted b_{k-1}: its outlets are u1, u2 and
        // the remaining outlet cell
        let mut sub_outlets = vec![u1, u2];
        sub_outlets.extend(&outlets[pos..]);
        build_degree_gadget(sub_outlets.len(), k, &sub_outlets, next_id, edges, chain);
    }
}

/// Attaches a degree gadget G_{d(v),k} at every vertex of degree at least
/// k+1: outlets are identified with the former neighbours, the vertex is
/// removed. Preserves (k-1)-connectivity; the result has maximum degree at
/// most k and is 3-colourable iff the input is.
pub fn reduce_to_mleck(g: &Graph, k: usize) -> Result<ReductionOutput, GadgetError> {
    if k < 4 {
        return Err(GadgetError::KTooSmall(4));
    }
    if !connectivity::is_k_connected(g, k - 1) {
        return Err(GadgetError::NotConnectedEnough(k - 1));
    }
    let mut edit = EditGraph::from_graph(g);
    let mut replaced: Vec<(Vertex, Vec<usize>)> = Vec::new();
    for v in g.vertices() {
        if edit.degree(v) <= k {
            continue;
        }
        let gadget = degree_gadget(edit.degree(v), k)?;
        let neighbours = edit.neighbours(v);
        edit.remove_vertex(v);
        // outlets are identified with the former neighbours; internal
        // vertices get fresh identifiers
        let internal_count = gadget.graph.n() - gadget.outlets.len();
        let base = edit.adj.len();
        for _ in 0..internal_count {
            edit.add_vertex();
        }
        // gadget ids: outlets are 0..l, internals l..
        let translate = |w: usize| -> usize {
            if w < neighbours.len() {
                neighbours[w]
            } else {
                base + (w - neighbours.len())
            }
        };
        for (a, b) in gadget.graph.edges() {
            edit.add_edge(translate(a), translate(b));
        }
        replaced.push((v, neighbours.clone()));
    }
    finish_reduction(g, edit, replaced)
}

fn combinations_of(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in (i + 1)..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// The rigid hypergraph H0 on k disjoint k-sets: every k-subset is a
/// hyperedge except the k cells themselves. Its proper k-colourings are
/// exactly the k! cell-wise distinct assignments.
pub fn rigid_hypergraph(k: usize) -> Result<Hypergraph, GadgetError> {
    if k < 3 {
        return Err(GadgetError::KTooSmall(3));
    }
    let n = k * k;
    let cells: Vec<Vec<usize>> = (0..k).map(|i| (i * k..(i + 1) * k).collect()).collect();
    let edges: Vec<Vec<usize>> = combinations_of(n, k)
        .into_iter()
        .filter(|e| !cells.contains(e))
        .collect();
    Ok(Hypergraph::new(n, edges))
}

/// Reduction from graph k-colourability: H0 plus, for every edge uv and
/// every cell index i, a hyperedge of u, v and k-2 vertices of the cell.
/// Graph vertices are shifted by k².
pub fn graph_to_hypergraph(g: &Graph, k: usize) -> Result<Hypergraph, GadgetError> {
    let h0 = rigid_hypergraph(k)?;
    let shift = k * k;
    let mut edges = h0.edges().to_vec();
    for (u, v) in g.edges() {
        for i in 0..k {
            let mut e = vec![shift + u, shift + v];
            e.extend(i * k..i * k + (k - 2));
            edges.push(e);
        }
    }
    Ok(Hypergraph::new(shift + g.n(), edges))
}

/// Reduction from k-uniform hypergraph k-colourability to k-colourability
/// of a minimally k-connected graph: a clique gadget per hyperedge and a
/// bipartite gadget per cyclic window of the vertex list.
pub fn hypergraph_to_min_kconn(h: &Hypergraph, k: usize) -> Result<Graph, GadgetError> {
    if k < 3 {
        return Err(GadgetError::KTooSmall(3));
    }
    if !h.is_k_uniform(k) {
        return Err(GadgetError::NotUniform(k));
    }
    let hn = h.n();
    if hn < k {
        return Err(GadgetError::TooSmall(k));
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut next = hn;
    // P_e per hyperedge: K_k matched to the hyperedge vertices
    for e in h.edges() {
        let clique: Vec<usize> = (0..k).map(|i| next + i).collect();
        next += k;
        for (i, &a) in clique.iter().enumerate() {
            for &b in &clique[i + 1..] {
                edges.push((a, b));
            }
            edges.push((e[i], a));
        }
    }
    // Q_l per l in 1..=hn: K_{k,k-1} wired to a cyclic window
    for l in 1..=hn {
        let bs: Vec<usize> = (0..k).map(|i| next + i).collect();
        next += k;
        let cs: Vec<usize> = (0..k - 1).map(|i| next + i).collect();
        next += k - 1;
        for &b in &bs {
            for &c in &cs {
                edges.push((b, c));
            }
        }
        for (i, &b) in bs.iter().enumerate() {
            edges.push((b, (i + l) % hn));
        }
    }
    Ok(Graph::from_edges(next, &edges).expect("construction emits simple edges"))
}

/// The grid family member G'_{3,x}: the 3-by-x grid plus two vertex-disjoint
/// edges joining corner vertices at distance two. Lies in the 3-connected
/// part of the class and has exactly x-2 vertices of degree 4.
pub fn grid_family(x: usize) -> Result<Graph, GadgetError> {
    if x < 3 {
        return Err(GadgetError::GridTooNarrow(x));
    }
    let id = |r: usize, c: usize| 3 * c + r;
    let mut g = Graph::empty(3 * x);
    for c in 0..x {
        g.add_edge(id(0, c), id(1, c));
        g.add_edge(id(1, c), id(2, c));
        if c + 1 < x {
            for r in 0..3 {
                g.add_edge(id(r, c), id(r, c + 1));
            }
        }
    }
    g.add_edge(id(0, 0), id(2, 0));
    g.add_edge(id(0, x - 1), id(2, x - 1));
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{self, CutMode, OracleLimits};

    fn lim() -> OracleLimits {
        OracleLimits::generous()
    }

    #[test]
    fn hub_gadget_counts() {
        let g4 = hub_gadget(4).unwrap();
        assert_eq!(g4.graph.n(), 19);
        assert_eq!(g4.outlets.len(), 4);
        for &o in &g4.outlets {
            assert_eq!(g4.graph.degree(o), 2);
        }
        assert!(hub_gadget(3).is_err());
    }

    #[test]
    fn hub_gadget_degree_profile() {
        // outlets have degree 2; diamond interiors 3; shared picks 4; the
        // caterpillar spine vertices sit in three diamonds, degree 6
        let g5 = hub_gadget(5).unwrap();
        let mut degrees: Vec<usize> = g5.graph.vertices().map(|v| g5.graph.degree(v)).collect();
        degrees.sort_unstable();
        degrees.dedup();
        assert_eq!(degrees, vec![2, 3, 4, 6]);
        let deg2: Vec<usize> = g5
            .graph
            .vertices()
            .filter(|&v| g5.graph.degree(v) == 2)
            .collect();
        assert_eq!(deg2, g5.outlets);
    }

    #[test]
    fn hub_gadget_outlets_monochromatic() {
        for l in [4, 5] {
            let gg = hub_gadget(l).unwrap();
            let mut total = 0usize;
            oracle::for_each_canonical_colouring(&gg.graph, 3, &lim(), |c| {
                let cols: BTreeSet<usize> = gg.outlets.iter().map(|&o| c.get(o).unwrap()).collect();
                assert_eq!(cols.len(), 1, "outlets split colours at l = {l}");
                total += 1;
            })
            .unwrap();
            assert!(total > 0, "hub gadget has proper 3-colourings");
        }
    }

    #[test]
    fn reduce_mlc3_small_max_degree_unchanged() {
        let g = Graph::complete(4);
        let r = reduce_to_mlc3(&g).unwrap();
        assert_eq!(r.graph.n(), 4);
        assert!(r.notes.is_empty());
    }

    #[test]
    fn reduce_mlc3_w5() {
        let g = crate::morass::odd_wheel(5).unwrap();
        let r = reduce_to_mlc3(&g).unwrap();
        assert_eq!(r.notes.len(), 1); // only the hub has degree >= 4
        assert_eq!(r.graph.n(), 5 + 9 * 5 - 17);
        // reduced instance is 2-connected with maximal local connectivity 3
        let report = connectivity::classify(&r.graph, 3).unwrap();
        assert!(report.c2);
        assert!(connectivity::is_k_connected(&r.graph, 2));
        // W5 is not 3-colourable, so neither is the output
        assert!(oracle::brute_k_colourable(&r.graph, 3, &lim())
            .unwrap()
            .is_none());
    }

    #[test]
    fn boost_connectivity_examples() {
        let p3 = Graph::path(3);
        let b = boost_connectivity(&p3, 1).unwrap();
        assert!(connectivity::is_k_connected(&b, 2));
        assert_eq!(
            oracle::brute_chromatic(&p3, &lim()).unwrap(),
            oracle::brute_chromatic(&b, &lim()).unwrap()
        );

        let c4 = Graph::cycle(4);
        let b = boost_connectivity(&c4, 2).unwrap();
        assert!(connectivity::is_k_connected(&b, 3));
        assert_eq!(
            oracle::brute_chromatic(&c4, &lim()).unwrap(),
            oracle::brute_chromatic(&b, &lim()).unwrap()
        );

        let pet = crate::fixtures::petersen();
        let b = boost_connectivity(&pet, 3).unwrap();
        assert!(connectivity::is_k_connected(&b, 4));
    }

    #[test]
    fn degree_gadget_g64_base() {
        let g = degree_gadget(6, 4).unwrap();
        assert_eq!(g.recursion_chain, vec![6]);
        assert_eq!(g.graph.n() - g.outlets.len(), 5);
        assert!(g.graph.vertices().all(|v| g.graph.degree(v) <= 4));
    }

    #[test]
    fn degree_gadget_g104_recursion() {
        let g = degree_gadget(10, 4).unwrap();
        assert_eq!(g.recursion_chain, vec![10, 8, 6]);
        assert_eq!(g.graph.n() - g.outlets.len(), 13);
        assert!(g.graph.vertices().all(|v| g.graph.degree(v) <= 4));
        assert!(degree_gadget(4, 4).is_err());
        assert!(degree_gadget(6, 3).is_err());
    }

    #[test]
    fn reduce_mleck_unchanged_when_low_degree() {
        let g = Graph::complete(5); // degree 4 = k
        let r = reduce_to_mleck(&g, 4).unwrap();
        assert_eq!(r.graph.edges(), g.edges());
        assert!(r.notes.is_empty());
    }

    #[test]
    fn reduce_mleck_k6() {
        let g = Graph::complete(6);
        let r = reduce_to_mleck(&g, 4).unwrap();
        assert!(r.graph.vertices().all(|v| r.graph.degree(v) <= 4));
        assert!(connectivity::is_k_connected(&r.graph, 3));
        // K6 needs four colours, so the reduced graph is not 3-colourable
        assert!(oracle::brute_k_colourable(&r.graph, 3, &lim())
            .unwrap()
            .is_none());
    }

    #[test]
    fn rigid_hypergraph_counts() {
        let h = rigid_hypergraph(3).unwrap();
        assert_eq!(h.n(), 9);
        assert_eq!(h.edges().len(), 81);
        assert_eq!(
            oracle::count_hypergraph_colourings(&h, 3, &lim()).unwrap(),
            6
        );
        // the canonical cell colouring is proper
        let mut colouring = vec![0usize; 9];
        for i in 0..3 {
            for j in 0..3 {
                colouring[i * 3 + j] = i + 1;
            }
        }
        for e in h.edges() {
            let first = colouring[e[0]];
            assert!(!e.iter().all(|&v| colouring[v] == first));
        }
    }

    #[test]
    fn graph_to_hypergraph_counts() {
        let h = graph_to_hypergraph(&Graph::complete(4), 3).unwrap();
        assert_eq!(h.edges().len(), 81 + 6 * 3);
        let empty = graph_to_hypergraph(&Graph::empty(4), 3).unwrap();
        assert_eq!(empty.edges().len(), 81);
        assert!(oracle::brute_hypergraph_colourable(&empty, 3, &lim())
            .unwrap()
            .is_some());
    }

    #[test]
    fn min_kconn_single_hyperedge() {
        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]);
        let g = hypergraph_to_min_kconn(&h, 3).unwrap();
        assert_eq!(g.n(), 3 + 3 + 3 * 5);
        let report = connectivity::classify(&g, 3).unwrap();
        assert!(report.minimally_k_connected, "{report:?}");
    }

    #[test]
    fn grid_family_shape() {
        let g = grid_family(3).unwrap();
        assert_eq!(g.n(), 9);
        let deg4: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == 4).collect();
        assert_eq!(deg4.len(), 1);
        assert!(grid_family(2).is_err());

        let g5 = grid_family(5).unwrap();
        let report = connectivity::classify(&g5, 3).unwrap();
        assert!(report.c1_hat, "{report:?}");
        let deg4 = g5.vertices().filter(|&v| g5.degree(v) == 4).count();
        assert_eq!(deg4, 3);
    }

    #[test]
    fn grid_family_three_colourable() {
        for x in [3, 4, 5, 6] {
            let g = grid_family(x).unwrap();
            assert!(oracle::brute_k_colourable(&g, 3, &lim()).unwrap().is_some());
        }
    }

    #[test]
    fn brute_cut_vs_flow_on_k4() {
        let g = Graph::complete(4);
        assert_eq!(
            oracle::brute_min_cut(&g, 0, 1, CutMode::Edge, &OracleLimits::default()).unwrap(),
            3
        );
    }
}
