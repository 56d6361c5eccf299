//! k-colouring of k-connected graphs with maximal local edge-connectivity k:
//! isolating-edge-cut decomposition, side capping, colour merging, and the
//! top-level algorithm.

use thiserror::Error;

use crate::brooks;
use crate::colouring::{ColourOutcome, Colouring, Obstruction};
use crate::connectivity::{self, EdgeCut};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MlecError {
    #[error("k must be at least 3")]
    KTooSmall,
    #[error("graph is not {k}-connected (pair {x}, {y} has local connectivity {value})")]
    NotKConnected {
        k: usize,
        x: Vertex,
        y: Vertex,
        value: usize,
    },
    #[error("local edge-connectivity exceeds {k} on pair ({x}, {y})")]
    NotMlec { k: usize, x: Vertex, y: Vertex },
    #[error("need at least two vertices of degree above k")]
    TooFewHighDegree,
    #[error("cut is not a k-edge cut with vertex-disjoint edges")]
    BadCut,
    #[error("merge images have sizes {{1, k}}; no permutation exists")]
    ForbiddenImagePair,
    #[error("colouring domain mismatch with the cut sides")]
    BadMergeInput,
    #[error("class preconditions violated during decomposition: {0}")]
    ClassViolation(String),
}

/// Vertices of degree above k.
pub fn high_degree_vertices(g: &Graph, k: usize) -> Vec<Vertex> {
    g.vertices().filter(|&v| g.degree(v) > k).collect()
}

fn boundary_size(g: &Graph, members: &[bool]) -> usize {
    let mut d = 0;
    for u in g.vertices() {
        if members[u] {
            d += g.neighbours(u).iter().filter(|&&w| !members[w]).count();
        }
    }
    d
}

/// Finds a k-edge cut with pairwise vertex-disjoint edges such that one side
/// contains exactly one vertex of degree above k, by flow between two high
/// vertices followed by good-set minimisation: repeatedly intersect with the
/// small side of a flow between two high vertices still sharing the set.
pub fn find_isolating_edge_cut(g: &Graph, k: usize) -> Result<(EdgeCut, Vertex), MlecError> {
    if k < 3 {
        return Err(MlecError::KTooSmall);
    }
    let n = g.n();
    let high = high_degree_vertices(g, k);
    if high.len() < 2 {
        return Err(MlecError::TooFewHighDegree);
    }

    // one flow between two high-degree vertices gives the first good set
    let mut in_x = good_side(g, k, high[0], high[1])?;
    loop {
        let inside: Vec<Vertex> = high.iter().copied().filter(|&v| in_x[v]).collect();
        match inside.len() {
            0 => {
                return Err(MlecError::ClassViolation(
                    "good set lost every high-degree vertex".into(),
                ))
            }
            1 => {
                let x_iso = inside[0];
                let x_side: Vec<Vertex> = (0..n).filter(|&v| in_x[v]).collect();
                let y_side: Vec<Vertex> = (0..n).filter(|&v| !in_x[v]).collect();
                let edges: Vec<(Vertex, Vertex)> = g
                    .edges()
                    .into_iter()
                    .filter(|&(u, v)| in_x[u] != in_x[v])
                    .collect();
                if edges.len() != k || !edges_vertex_disjoint(&edges) {
                    return Err(MlecError::ClassViolation(format!(
                        "isolating cut has {} edges, vertex-disjoint: {}",
                        edges.len(),
                        edges_vertex_disjoint(&edges)
                    )));
                }
                return Ok((
                    EdgeCut {
                        edges,
                        x_side,
                        y_side,
                    },
                    x_iso,
                ));
            }
            _ => {
                // shrink: a good set around one of the two lowest high
                // vertices inside, excluding the other
                let refine = good_side(g, k, inside[0], inside[1])?;
                let mut any = false;
                for v in 0..n {
                    let keep = in_x[v] && refine[v];
                    if keep {
                        any = true;
                    }
                    in_x[v] = keep;
                }
                if !any {
                    return Err(MlecError::ClassViolation(
                        "good-set intersection became empty".into(),
                    ));
                }
                if boundary_size(g, &in_x) != k {
                    return Err(MlecError::ClassViolation(
                        "good-set intersection is not a k-edge boundary".into(),
                    ));
                }
            }
        }
    }
}

/// Membership vector of a good set (boundary k, size at most n/2) containing
/// exactly one of the two given high-degree vertices.
fn good_side(g: &Graph, k: usize, a: Vertex, b: Vertex) -> Result<Vec<bool>, MlecError> {
    let (value, cut) = connectivity::local_edge_connectivity(g, a, b)
        .map_err(|_| MlecError::ClassViolation("flow query failed".into()))?;
    if value > k {
        return Err(MlecError::NotMlec { k, x: a, y: b });
    }
    if value < k {
        return Err(MlecError::NotKConnected {
            k,
            x: a,
            y: b,
            value,
        });
    }
    let n = g.n();
    let mut in_a = vec![false; n];
    for &v in &cut.x_side {
        in_a[v] = true;
    }
    if cut.x_side.len() * 2 <= n {
        Ok(in_a)
    } else {
        Ok(in_a.into_iter().map(|x| !x).collect())
    }
}

fn edges_vertex_disjoint(edges: &[(Vertex, Vertex)]) -> bool {
    let mut seen: Vec<Vertex> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    let len = seen.len();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == len
}

/// Which side of a cut to keep when capping.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    X,
    Y,
}

/// A capped side `G_X`: the kept side plus the far endpoints of the cut,
/// completed into a clique.
#[derive(Clone, Debug)]
pub struct CappedSide {
    pub graph: Graph,
    /// new identifier -> identifier in the parent graph
    pub to_parent: Vec<Vertex>,
    /// new identifiers of the far-side endpoints forming the added clique
    pub clique: Vec<Vertex>,
}

/// Builds `G_X` (or `G_Y`): the induced subgraph on the kept side plus the
/// far endpoints of the cut edges, with those endpoints made a clique.
pub fn cap_side(g: &Graph, cut: &EdgeCut, keep: Side) -> Result<CappedSide, MlecError> {
    if !edges_vertex_disjoint(&cut.edges) {
        return Err(MlecError::BadCut);
    }
    let mut in_x = vec![false; g.n()];
    for &v in &cut.x_side {
        in_x[v] = true;
    }
    for &(a, b) in &cut.edges {
        if in_x[a] == in_x[b] || !g.has_edge(a, b) {
            return Err(MlecError::BadCut);
        }
    }
    // the cut must be the full boundary of its bipartition
    if boundary_size(g, &in_x) != cut.edges.len() {
        return Err(MlecError::BadCut);
    }
    let (kept, far): (Vec<Vertex>, Vec<Vertex>) = match keep {
        Side::X => (cut.x_side.clone(), cut.y_endpoints()),
        Side::Y => (cut.y_side.clone(), cut.x_endpoints()),
    };
    let mut all = kept;
    all.extend(far.iter().copied());
    let (mut sub, to_parent) = g.induced(&all);
    let far_local: Vec<Vertex> = far
        .iter()
        .map(|&v| to_parent.binary_search(&v).expect("far endpoint kept"))
        .collect();
    for (i, &a) in far_local.iter().enumerate() {
        for &b in &far_local[i + 1..] {
            sub.add_edge(a, b);
        }
    }
    Ok(CappedSide {
        graph: sub,
        to_parent,
        clique: far_local,
    })
}

/// Colour permutation for merging across a vertex-disjoint edge cut: build
/// the auxiliary graph on colour classes (a clique per side plus one edge
/// per cut edge), k-colour it with the first clique pinned to its real
/// colours, and read σ off the second clique. Edges are oriented with the
/// side-1 endpoint first.
fn merge_sigma_oriented(
    k: usize,
    oriented_edges: &[(Vertex, Vertex)],
    colour1: impl Fn(Vertex) -> usize,
    colour2: impl Fn(Vertex) -> usize,
) -> Result<Vec<usize>, MlecError> {
    let mut t_colours: Vec<usize> = oriented_edges.iter().map(|&(a, _)| colour1(a)).collect();
    t_colours.sort_unstable();
    t_colours.dedup();
    let mut w_colours: Vec<usize> = oriented_edges.iter().map(|&(_, b)| colour2(b)).collect();
    w_colours.sort_unstable();
    w_colours.dedup();
    let t = t_colours.len();
    let w = w_colours.len();
    if (t == 1 && w == k) || (t == k && w == 1) {
        return Err(MlecError::ForbiddenImagePair);
    }
    // cross edges between colour classes, indexed into t_colours/w_colours
    let mut cross: Vec<(usize, usize)> = oriented_edges
        .iter()
        .map(|&(xa, yb)| {
            (
                t_colours.binary_search(&colour1(xa)).unwrap(),
                w_colours.binary_search(&colour2(yb)).unwrap(),
            )
        })
        .collect();
    cross.sort_unstable();
    cross.dedup();

    // assign ψ(t_i) = t_colours[i]; extend to the w clique by backtracking
    let mut psi_w = vec![0usize; w];
    let mut j = 0usize;
    loop {
        let mut c = psi_w[j] + 1;
        let mut placed = false;
        while c <= k {
            let clash_t = cross.iter().any(|&(ti, wj)| wj == j && t_colours[ti] == c);
            let clash_w = psi_w[..j].contains(&c);
            if !clash_t && !clash_w {
                psi_w[j] = c;
                placed = true;
                break;
            }
            c += 1;
        }
        if placed {
            if j + 1 == w {
                break;
            }
            j += 1;
            psi_w[j] = 0;
        } else {
            psi_w[j] = 0;
            if j == 0 {
                return Err(MlecError::ClassViolation(
                    "auxiliary merge graph is not k-colourable".into(),
                ));
            }
            j -= 1;
        }
    }
    // σ maps each used colour of side 2 to its ψ value; unused colours fill
    // in the remaining slots in sorted order
    let mut sigma = vec![0usize; k];
    let mut taken = vec![false; k + 1];
    for (j, &wc) in w_colours.iter().enumerate() {
        sigma[wc - 1] = psi_w[j];
        taken[psi_w[j]] = true;
    }
    let mut free = (1..=k).filter(|&c| !taken[c]);
    for c in 1..=k {
        if sigma[c - 1] == 0 {
            sigma[c - 1] = free.next().expect("bijection completion");
        }
    }
    Ok(sigma)
}

/// Merges proper k-colourings of the two sides of a vertex-disjoint k-edge
/// cut into a proper k-colouring of the whole graph (identity on side 1, a
/// permutation on side 2). Fails when the colour-image sizes on the cut
/// endpoints are {1, k}.
pub fn merge_colourings(
    g: &Graph,
    cut: &EdgeCut,
    c1: &Colouring,
    c2: &Colouring,
) -> Result<Colouring, MlecError> {
    let k = c1.k();
    if c2.k() != k {
        return Err(MlecError::BadMergeInput);
    }
    if cut.x_side.iter().any(|&v| c1.get(v).is_none())
        || cut.y_side.iter().any(|&v| c2.get(v).is_none())
    {
        return Err(MlecError::BadMergeInput);
    }
    let max_id = cut
        .x_side
        .iter()
        .chain(cut.y_side.iter())
        .max()
        .map_or(0, |&m| m + 1);
    let mut in_x = vec![false; max_id];
    for &v in &cut.x_side {
        in_x[v] = true;
    }
    let oriented: Vec<(Vertex, Vertex)> = cut
        .edges
        .iter()
        .map(|&(a, b)| if in_x[a] { (a, b) } else { (b, a) })
        .collect();
    let sigma = merge_sigma_oriented(k, &oriented, |v| c1.get(v).unwrap(), |v| c2.get(v).unwrap())?;
    let mut out = Colouring::new(g.n(), k);
    for &v in &cut.x_side {
        out.set(v, c1.get(v).unwrap());
    }
    for &v in &cut.y_side {
        out.set(v, sigma[c2.get(v).unwrap() - 1]);
    }
    Ok(out)
}

/// Options for `colour_kconn_mleck`.
#[derive(Clone, Copy, Debug)]
pub struct MlecOptions {
    /// Check k-connectivity and the all-pairs λ bound before running.
    pub check_preconditions: bool,
    /// Re-classify every capped side during the recursion (tests only).
    pub verify_steps: bool,
}

impl Default for MlecOptions {
    fn default() -> Self {
        MlecOptions {
            check_preconditions: true,
            verify_steps: false,
        }
    }
}

impl MlecOptions {
    pub fn trusted() -> Self {
        MlecOptions {
            check_preconditions: false,
            verify_steps: false,
        }
    }
}

fn check_class(g: &Graph, k: usize) -> Result<(), MlecError> {
    if !connectivity::is_k_connected(g, k) {
        // locate a violating pair for the report
        for x in g.vertices() {
            for y in (x + 1)..g.n() {
                let v = connectivity::kappa_at_most(g, x, y, k);
                if v < k {
                    return Err(MlecError::NotKConnected { k, x, y, value: v });
                }
            }
        }
        return Err(MlecError::NotKConnected {
            k,
            x: 0,
            y: 0,
            value: 0,
        });
    }
    for x in g.vertices() {
        for y in (x + 1)..g.n() {
            if connectivity::lambda_at_most(g, x, y, k + 1) > k {
                return Err(MlecError::NotMlec { k, x, y });
            }
        }
    }
    Ok(())
}

struct DecompStep {
    /// cut edges oriented with the isolated-side endpoint first
    cut: Vec<(Vertex, Vertex)>,
    /// colours on the whole X side (including the cut endpoints), orig ids
    phi_x: Vec<(Vertex, usize)>,
}

/// Mutable decomposition state over the original identifiers: a unit flow
/// network with tombstoned vertices, epoch-stamped search buffers, and
/// touched-arc tracking so a step costs work proportional to the region it
/// explores rather than the whole graph.
struct LiveDecomp {
    k: usize,
    first: Vec<u32>,
    next: Vec<u32>,
    to: Vec<u32>,
    cap: Vec<u8>,
    alive: Vec<bool>,
    degree: Vec<usize>,
    n_live: usize,
    high: std::collections::BTreeSet<Vertex>,
    seen: Vec<u32>,
    epoch: u32,
    mark: Vec<u32>,
    mark_epoch: u32,
    touched: Vec<u32>,
}

const ARC_NONE: u32 = u32::MAX;

/// An isolated side: its vertex list and the oriented cut edges.
type IsolatedSide = (Vec<Vertex>, Vec<(Vertex, Vertex)>);

impl LiveDecomp {
    fn new(g: &Graph, k: usize) -> Self {
        let n = g.n();
        let mut live = LiveDecomp {
            k,
            first: vec![ARC_NONE; n],
            next: Vec::with_capacity(4 * g.m()),
            to: Vec::with_capacity(4 * g.m()),
            cap: Vec::with_capacity(4 * g.m()),
            alive: vec![true; n],
            degree: g.vertices().map(|v| g.degree(v)).collect(),
            n_live: n,
            high: g.vertices().filter(|&v| g.degree(v) > k).collect(),
            seen: vec![0; n],
            epoch: 0,
            mark: vec![0; n],
            mark_epoch: 0,
            touched: Vec::new(),
        };
        for (u, v) in g.edges() {
            live.push_arc_pair(u, v);
        }
        live
    }

    fn push_arc_pair(&mut self, u: Vertex, v: Vertex) {
        let e = self.to.len() as u32;
        self.to.push(v as u32);
        self.cap.push(1);
        self.next.push(self.first[u]);
        self.first[u] = e;
        self.to.push(u as u32);
        self.cap.push(1);
        self.next.push(self.first[v]);
        self.first[v] = e + 1;
    }

    fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        let mut e = self.first[u];
        while e != ARC_NONE {
            if self.to[e as usize] as usize == v {
                return true;
            }
            e = self.next[e as usize];
        }
        false
    }

    /// One augmenting unit via a shortest path in the residual network;
    /// true on success. Breadth-first search keeps the exploration local
    /// when the cut sits near the endpoints.
    fn augment(&mut self, s: Vertex, t: Vertex) -> bool {
        self.epoch += 1;
        let epoch = self.epoch;
        self.seen[s] = epoch;
        let mut queue: std::collections::VecDeque<Vertex> = std::collections::VecDeque::new();
        // arc taken to reach each newly visited vertex
        let mut via: std::collections::HashMap<Vertex, u32> = std::collections::HashMap::new();
        queue.push_back(s);
        let mut found = false;
        'bfs: while let Some(u) = queue.pop_front() {
            let mut e = self.first[u];
            while e != ARC_NONE {
                let v = self.to[e as usize] as usize;
                if self.cap[e as usize] > 0 && self.alive[v] && self.seen[v] != epoch {
                    self.seen[v] = epoch;
                    via.insert(v, e);
                    if v == t {
                        found = true;
                        break 'bfs;
                    }
                    queue.push_back(v);
                }
                e = self.next[e as usize];
            }
        }
        if found {
            let mut v = t;
            while v != s {
                let e = via[&v];
                self.cap[e as usize] -= 1;
                self.cap[e as usize ^ 1] += 1;
                self.touched.push(e);
                v = self.to[(e ^ 1) as usize] as usize;
            }
        }
        found
    }

    fn reset_flow(&mut self) {
        for &e in &self.touched {
            self.cap[e as usize] = 1;
            self.cap[e as usize ^ 1] = 1;
        }
        self.touched.clear();
    }

    /// Residual-reachable vertices from `s` as a list; membership stays
    /// queryable through `seen == epoch` until the next search.
    fn reach_list(&mut self, s: Vertex) -> Vec<Vertex> {
        self.epoch += 1;
        let epoch = self.epoch;
        self.seen[s] = epoch;
        let mut out = vec![s];
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let mut e = self.first[u];
            while e != ARC_NONE {
                let v = self.to[e as usize] as usize;
                if self.cap[e as usize] > 0 && self.alive[v] && self.seen[v] != epoch {
                    self.seen[v] = epoch;
                    out.push(v);
                    stack.push(v);
                }
                e = self.next[e as usize];
            }
        }
        out
    }

    /// Membership list of a good set (boundary k, at most half the live
    /// vertices) containing exactly one of a, b.
    fn good_side(&mut self, a: Vertex, b: Vertex) -> Result<Vec<Vertex>, MlecError> {
        let mut value = 0usize;
        while value <= self.k && self.augment(a, b) {
            value += 1;
        }
        if value > self.k {
            self.reset_flow();
            return Err(MlecError::NotMlec {
                k: self.k,
                x: a,
                y: b,
            });
        }
        if value < self.k {
            self.reset_flow();
            return Err(MlecError::NotKConnected {
                k: self.k,
                x: a,
                y: b,
                value,
            });
        }
        let reach = self.reach_list(a);
        let side = if 2 * reach.len() <= self.n_live {
            reach
        } else {
            // complement of the reachable side among live vertices
            let epoch = self.epoch;
            (0..self.alive.len())
                .filter(|&v| self.alive[v] && self.seen[v] != epoch)
                .collect()
        };
        self.reset_flow();
        Ok(side)
    }

    fn mark_set(&mut self, vs: &[Vertex]) {
        self.mark_epoch += 1;
        for &v in vs {
            self.mark[v] = self.mark_epoch;
        }
    }

    fn is_marked(&self, v: Vertex) -> bool {
        self.mark[v] == self.mark_epoch
    }

    /// Boundary edges of a marked set, oriented (marked endpoint first).
    /// Each crossing edge has exactly one arc in the lists of the marked
    /// side, so every edge appears once.
    fn boundary_of_marked(&self, vs: &[Vertex]) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for &u in vs {
            let mut e = self.first[u];
            while e != ARC_NONE {
                let v = self.to[e as usize] as usize;
                if self.alive[v] && !self.is_marked(v) {
                    out.push((u, v));
                }
                e = self.next[e as usize];
            }
        }
        out
    }

    /// Finds a k-edge cut isolating exactly one high-degree vertex; returns
    /// its X side and the cut edges (X endpoint first).
    fn isolating_cut(&mut self) -> Result<IsolatedSide, MlecError> {
        let mut it = self.high.iter().copied();
        let (a, b) = (
            it.next().ok_or(MlecError::TooFewHighDegree)?,
            it.next().ok_or(MlecError::TooFewHighDegree)?,
        );
        let mut x_side = self.good_side(a, b)?;
        loop {
            let inside: Vec<Vertex> = x_side
                .iter()
                .copied()
                .filter(|&v| self.degree[v] > self.k)
                .collect();
            match inside.len() {
                0 => {
                    return Err(MlecError::ClassViolation(
                        "good set lost every high-degree vertex".into(),
                    ))
                }
                1 => {
                    self.mark_set(&x_side);
                    let edges = self.boundary_of_marked(&x_side);
                    if edges.len() != self.k || !edges_vertex_disjoint(&edges) {
                        return Err(MlecError::ClassViolation(format!(
                            "isolating cut has {} edges, vertex-disjoint: {}",
                            edges.len(),
                            edges_vertex_disjoint(&edges)
                        )));
                    }
                    x_side.sort_unstable();
                    return Ok((x_side, edges));
                }
                _ => {
                    let refine = self.good_side(inside[0], inside[1])?;
                    self.mark_set(&refine);
                    let smaller: Vec<Vertex> = x_side
                        .iter()
                        .copied()
                        .filter(|&v| self.is_marked(v))
                        .collect();
                    if smaller.is_empty() {
                        return Err(MlecError::ClassViolation(
                            "good-set intersection became empty".into(),
                        ));
                    }
                    x_side = smaller;
                    self.mark_set(&x_side);
                    if self.boundary_of_marked(&x_side).len() != self.k {
                        return Err(MlecError::ClassViolation(
                            "good-set intersection is not a k-edge boundary".into(),
                        ));
                    }
                }
            }
        }
    }

    /// The capped isolated side G_X as a small dense graph with its map.
    fn capped_x(&self, x_side: &[Vertex], cut: &[(Vertex, Vertex)]) -> (Graph, Vec<Vertex>) {
        let mut verts: Vec<Vertex> = x_side.to_vec();
        let far: Vec<Vertex> = cut.iter().map(|&(_, y)| y).collect();
        verts.extend(far.iter().copied());
        verts.sort_unstable();
        verts.dedup();
        let local = |v: Vertex| verts.binary_search(&v).expect("member");
        let mut g = Graph::empty(verts.len());
        // induced edges among X ∪ Y_S
        for &u in &verts {
            let mut e = self.first[u];
            while e != ARC_NONE {
                let v = self.to[e as usize] as usize;
                if self.alive[v] && v > u && verts.binary_search(&v).is_ok() {
                    // skip far-far pairs that are not real edges yet: all
                    // arcs are real edges, the clique below adds the rest
                    g.add_edge(local(u), local(v));
                }
                e = self.next[e as usize];
            }
        }
        for (i, &a) in far.iter().enumerate() {
            for &b in &far[i + 1..] {
                g.add_edge(local(a), local(b));
            }
        }
        (g, verts)
    }

    /// Removes the X interior and completes X_S into a clique (the live
    /// graph becomes G_Y).
    fn apply_cut(&mut self, x_side: &[Vertex], cut: &[(Vertex, Vertex)]) {
        let x_s: Vec<Vertex> = cut.iter().map(|&(x, _)| x).collect();
        self.mark_set(&x_s);
        for &v in x_side {
            if self.is_marked(v) {
                continue;
            }
            // remove interior vertex
            self.alive[v] = false;
            self.n_live -= 1;
            self.high.remove(&v);
            let mut e = self.first[v];
            while e != ARC_NONE {
                let w = self.to[e as usize] as usize;
                if self.alive[w] {
                    self.degree[w] -= 1;
                }
                e = self.next[e as usize];
            }
        }
        for (i, &a) in x_s.iter().enumerate() {
            for &b in &x_s[i + 1..] {
                if !self.adjacent(a, b) {
                    self.push_arc_pair(a, b);
                    self.degree[a] += 1;
                    self.degree[b] += 1;
                }
            }
        }
        for &a in &x_s {
            if self.degree[a] <= self.k {
                self.high.remove(&a);
            }
        }
    }

    /// Dense snapshot of the live graph.
    fn materialize(&self) -> (Graph, Vec<Vertex>) {
        let verts: Vec<Vertex> = (0..self.alive.len()).filter(|&v| self.alive[v]).collect();
        let mut g = Graph::empty(verts.len());
        let local = |v: Vertex| verts.binary_search(&v).expect("live vertex");
        for &u in &verts {
            let mut e = self.first[u];
            while e != ARC_NONE {
                let v = self.to[e as usize] as usize;
                if self.alive[v] && v > u {
                    g.add_edge(local(u), local(v));
                }
                e = self.next[e as usize];
            }
        }
        (g, verts)
    }
}

/// k-colours a k-connected graph with maximal local edge-connectivity k, or
/// reports the complete-graph / odd-wheel obstruction. Decomposes along
/// isolating edge cuts, colours the isolated side by the one-high-vertex
/// routine, and merges with colour permutations.
pub fn colour_kconn_mleck(
    g: &Graph,
    k: usize,
    opts: MlecOptions,
) -> Result<ColourOutcome, MlecError> {
    if k < 3 {
        return Err(MlecError::KTooSmall);
    }
    if opts.check_preconditions {
        check_class(g, k)?;
    }
    let n = g.n();
    let mut live = LiveDecomp::new(g, k);
    let mut steps: Vec<DecompStep> = Vec::new();

    let (base_outcome, base_map) = loop {
        if live.high.len() <= 1 {
            let (cur, map) = live.materialize();
            break (base_case(&cur, k)?, map);
        }
        let (x_side, cut_edges) = live.isolating_cut()?;
        let (gx, gx_map) = live.capped_x(&x_side, &cut_edges);
        if opts.verify_steps {
            verify_capped(&gx, k)?;
        }
        let cx = brooks::lovasz_colour_trusted(&gx, k).map_err(|e| {
            MlecError::ClassViolation(format!("capped side rejected by colouring routine: {e}"))
        })?;
        live.mark_set(&x_side);
        let phi_x: Vec<(Vertex, usize)> = gx_map
            .iter()
            .enumerate()
            .filter(|&(_, &v)| live.is_marked(v))
            .map(|(local, &v)| (v, cx.get(local).unwrap()))
            .collect();
        steps.push(DecompStep {
            cut: cut_edges.clone(),
            phi_x,
        });
        let live_before = live.n_live;
        live.apply_cut(&x_side, &cut_edges);
        if live.n_live >= live_before {
            // the isolated side had no interior, which k-connected members
            // of the class never produce
            return Err(MlecError::ClassViolation(
                "isolating cut made no progress".into(),
            ));
        }
        if opts.verify_steps {
            let (gy, _) = live.materialize();
            verify_capped(&gy, k)?;
        }
    };

    let base_colouring = match base_outcome {
        ColourOutcome::Coloured { colouring } => colouring,
        obstructed => {
            if steps.is_empty() {
                return Ok(obstructed);
            }
            return Err(MlecError::ClassViolation(
                "inner capped graph reported an obstruction".into(),
            ));
        }
    };

    // bottom-up merging with a lazily composed colour permutation:
    // actual(v) = pi[acc[v] - 1]
    let mut acc: Vec<Option<usize>> = vec![None; n];
    let mut pi: Vec<usize> = (1..=k).collect();
    for (local, &orig) in base_map.iter().enumerate() {
        acc[orig] = base_colouring.get(local);
    }
    for step in steps.iter().rev() {
        let phi1: std::collections::HashMap<Vertex, usize> = step.phi_x.iter().copied().collect();
        let sigma = merge_sigma_oriented(
            k,
            &step.cut,
            |v| phi1[&v],
            |v| pi[acc[v].expect("y side coloured below") - 1],
        )?;
        // pi := sigma ∘ pi
        for slot in pi.iter_mut() {
            *slot = sigma[*slot - 1];
        }
        let mut inv = vec![0usize; k];
        for (i, &p) in pi.iter().enumerate() {
            inv[p - 1] = i + 1;
        }
        for &(v, colour) in &step.phi_x {
            acc[v] = Some(inv[colour - 1]);
        }
    }
    let mut out = Colouring::new(n, k);
    for v in 0..n {
        out.set(
            v,
            pi[acc[v].expect("decomposition covers every vertex") - 1],
        );
    }
    Ok(ColourOutcome::coloured(out))
}

fn verify_capped(g: &Graph, k: usize) -> Result<(), MlecError> {
    let report = connectivity::classify(g, k)
        .map_err(|_| MlecError::ClassViolation("classify failed on capped side".into()))?;
    if !report.c1_hat {
        return Err(MlecError::ClassViolation(format!(
            "capped side left the class: global connectivity {}, max lambda {}",
            report.global_connectivity, report.max_lambda
        )));
    }
    Ok(())
}

fn distinct(n: usize, k: usize) -> Colouring {
    let mut c = Colouring::new(n, k);
    for v in 0..n {
        c.set(v, v + 1);
    }
    c
}

/// At most one vertex of degree above k: Brooks, the dominating-vertex
/// reduction, or the one-high-vertex colouring.
fn base_case(g: &Graph, k: usize) -> Result<ColourOutcome, MlecError> {
    let n = g.n();
    if n <= k {
        return Ok(ColourOutcome::coloured(distinct(n, k)));
    }
    let high = high_degree_vertices(g, k);
    match high.len() {
        0 => {
            if g.is_complete() {
                return Ok(ColourOutcome::obstructed(Obstruction::Complete));
            }
            brooks::brooks_colour(g, k)
                .map_err(|e| MlecError::ClassViolation(format!("Brooks rejected the graph: {e}")))
        }
        1 => {
            let h = high[0];
            if g.degree(h) == n - 1 {
                // dominating high vertex: (k-1)-colour the rest
                let (rest, map) = g.remove_vertices(&[h]);
                let out = brooks::brooks_colour(&rest, k - 1).map_err(|e| {
                    MlecError::ClassViolation(format!("dominating reduction failed: {e}"))
                })?;
                match out {
                    ColourOutcome::Coloured { colouring } => {
                        let mut c = Colouring::new(n, k);
                        c.set(h, k);
                        for (local, &orig) in map.iter().enumerate() {
                            c.set(orig, colouring.get(local).unwrap());
                        }
                        Ok(ColourOutcome::coloured(c))
                    }
                    ColourOutcome::Obstructed {
                        obstruction: Obstruction::OddCycle,
                    } => Ok(ColourOutcome::obstructed(Obstruction::OddWheel)),
                    ColourOutcome::Obstructed { .. } => Err(MlecError::ClassViolation(
                        "unexpected obstruction under a dominating vertex".into(),
                    )),
                }
            } else {
                brooks::lovasz_colour_trusted(g, k)
                    .map(ColourOutcome::coloured)
                    .map_err(|e| {
                        MlecError::ClassViolation(format!("one-high-vertex routine failed: {e}"))
                    })
            }
        }
        _ => unreachable!("caller peels until at most one high-degree vertex remains"),
    }
}
