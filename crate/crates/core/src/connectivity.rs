//! Local vertex/edge connectivity via unit-capacity augmenting-path flow,
//! cut and separation extraction, global connectivity, and classification
//! into the connectivity-constrained graph classes.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConnError {
    #[error("x and y must be distinct")]
    SameVertex,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),
    #[error("graph needs at least 2 vertices")]
    TooSmall,
    #[error("k must be at least 1")]
    BadK,
}

/// Unit-capacity flow network with paired arcs (`arc ^ 1` is the reverse).
struct FlowNet {
    first: Vec<u32>,
    next: Vec<u32>,
    to: Vec<u32>,
    cap: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl FlowNet {
    fn new(n: usize) -> Self {
        FlowNet {
            first: vec![NONE; n],
            next: Vec::new(),
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add_arc(&mut self, u: usize, v: usize, cap_fwd: u32, cap_rev: u32) {
        let e = self.to.len() as u32;
        self.to.push(v as u32);
        self.cap.push(cap_fwd);
        self.next.push(self.first[u]);
        self.first[u] = e;
        self.to.push(u as u32);
        self.cap.push(cap_rev);
        self.next.push(self.first[v]);
        self.first[v] = e + 1;
    }

    /// Sends at most `limit` units from `s` to `t` with DFS augmentation.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let n = self.first.len();
        let mut flow = 0usize;
        let mut seen = vec![false; n];
        let mut path: Vec<u32> = Vec::new();
        let mut stack: Vec<(usize, u32)> = Vec::new();
        while flow < limit {
            // One DFS for one augmenting unit (all arc capacities are small).
            seen.iter_mut().for_each(|x| *x = false);
            path.clear();
            stack.clear();
            stack.push((s, self.first[s]));
            seen[s] = true;
            let mut found = false;
            'dfs: while let Some(&mut (_, ref mut e)) = stack.last_mut() {
                let mut cur = *e;
                while cur != NONE {
                    let v = self.to[cur as usize] as usize;
                    if self.cap[cur as usize] > 0 && !seen[v] {
                        *e = self.next[cur as usize];
                        seen[v] = true;
                        path.push(cur);
                        if v == t {
                            found = true;
                            break 'dfs;
                        }
                        stack.push((v, self.first[v]));
                        continue 'dfs;
                    }
                    cur = self.next[cur as usize];
                }
                stack.pop();
                path.pop();
            }
            if !found {
                break;
            }
            for &e in &path {
                self.cap[e as usize] -= 1;
                self.cap[e as usize ^ 1] += 1;
            }
            flow += 1;
        }
        flow
    }

    /// Vertices reachable from `s` in the residual network.
    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let n = self.first.len();
        let mut seen = vec![false; n];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            let mut e = self.first[u];
            while e != NONE {
                let v = self.to[e as usize] as usize;
                if self.cap[e as usize] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
                e = self.next[e as usize];
            }
        }
        seen
    }
}

/// A minimal edge cut for a fixed bipartition: the cut edges are exactly the
/// boundary of `x_side`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCut {
    pub edges: Vec<(Vertex, Vertex)>,
    pub x_side: Vec<Vertex>,
    pub y_side: Vec<Vertex>,
}

impl EdgeCut {
    fn x_membership(&self) -> Vec<bool> {
        let max = self
            .x_side
            .iter()
            .chain(self.y_side.iter())
            .max()
            .map_or(0, |&m| m + 1);
        let mut in_x = vec![false; max];
        for &v in &self.x_side {
            in_x[v] = true;
        }
        in_x
    }

    /// Endpoints of the cut edges lying on the x side (the set `X_S`).
    pub fn x_endpoints(&self) -> Vec<Vertex> {
        let in_x = self.x_membership();
        let mut out: Vec<Vertex> = self
            .edges
            .iter()
            .map(|&(a, b)| if in_x[a] { a } else { b })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Endpoints of the cut edges lying on the y side (the set `Y_S`).
    pub fn y_endpoints(&self) -> Vec<Vertex> {
        let in_x = self.x_membership();
        let mut out: Vec<Vertex> = self
            .edges
            .iter()
            .map(|&(a, b)| if in_x[a] { b } else { a })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// A vertex separation `(X, Z, Y)`: removing `Z` leaves no `X`–`Y` edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separation {
    pub x_side: Vec<Vertex>,
    pub separator: Vec<Vertex>,
    pub y_side: Vec<Vertex>,
}

fn check_pair(g: &Graph, x: Vertex, y: Vertex) -> Result<(), ConnError> {
    if x >= g.n() {
        return Err(ConnError::VertexOutOfRange(x));
    }
    if y >= g.n() {
        return Err(ConnError::VertexOutOfRange(y));
    }
    if x == y {
        return Err(ConnError::SameVertex);
    }
    Ok(())
}

fn edge_flow_net(g: &Graph) -> FlowNet {
    let mut net = FlowNet::new(g.n());
    for (u, v) in g.edges() {
        net.add_arc(u, v, 1, 1);
    }
    net
}

/// λ(x, y) capped at `limit`, without cut extraction.
pub fn lambda_at_most(g: &Graph, x: Vertex, y: Vertex, limit: usize) -> usize {
    let mut net = edge_flow_net(g);
    net.max_flow(x, y, limit)
}

/// Local edge-connectivity λ(x, y) together with a Menger-minimal edge cut.
/// The returned x side is the residual-reachable side (lowest-identifier
/// canonical choice is implied by the deterministic DFS).
pub fn local_edge_connectivity(
    g: &Graph,
    x: Vertex,
    y: Vertex,
) -> Result<(usize, EdgeCut), ConnError> {
    check_pair(g, x, y)?;
    let mut net = edge_flow_net(g);
    let value = net.max_flow(x, y, usize::MAX);
    let reach = net.residual_reachable(x);
    let x_side: Vec<Vertex> = g.vertices().filter(|&v| reach[v]).collect();
    let y_side: Vec<Vertex> = g.vertices().filter(|&v| !reach[v]).collect();
    let edges: Vec<(Vertex, Vertex)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| reach[u] != reach[v])
        .collect();
    debug_assert_eq!(edges.len(), value);
    Ok((
        value,
        EdgeCut {
            edges,
            x_side,
            y_side,
        },
    ))
}

/// Flow value for internally-disjoint paths between non-adjacent x, y in the
/// split-vertex network, optionally extracting the separation.
fn kappa_nonadjacent(
    g: &Graph,
    x: Vertex,
    y: Vertex,
    limit: usize,
    extract: bool,
) -> (usize, Option<Separation>) {
    // v_in = 2v, v_out = 2v + 1
    let n = g.n();
    let inf = (n as u32) + 1;
    let mut net = FlowNet::new(2 * n);
    for v in g.vertices() {
        let c = if v == x || v == y { inf } else { 1 };
        net.add_arc(2 * v, 2 * v + 1, c, 0);
    }
    for (u, v) in g.edges() {
        net.add_arc(2 * u + 1, 2 * v, inf, 0);
        net.add_arc(2 * v + 1, 2 * u, inf, 0);
    }
    let value = net.max_flow(2 * x + 1, 2 * y, limit);
    if !extract {
        return (value, None);
    }
    let reach = net.residual_reachable(2 * x + 1);
    let mut separator = Vec::new();
    let mut x_side = Vec::new();
    let mut y_side = Vec::new();
    for v in g.vertices() {
        if reach[2 * v] && !reach[2 * v + 1] {
            separator.push(v);
        } else if reach[2 * v + 1] {
            x_side.push(v);
        } else {
            y_side.push(v);
        }
    }
    debug_assert_eq!(separator.len(), value);
    (
        value,
        Some(Separation {
            x_side,
            separator,
            y_side,
        }),
    )
}

/// Local connectivity κ(x, y): the maximum number of internally disjoint
/// x–y paths. For adjacent pairs this is 1 plus the value in `g \ xy`, and
/// the returned separation witnesses Menger in `g \ xy`.
pub fn local_vertex_connectivity(
    g: &Graph,
    x: Vertex,
    y: Vertex,
) -> Result<(usize, Option<Separation>), ConnError> {
    check_pair(g, x, y)?;
    if g.has_edge(x, y) {
        let h = g.remove_edge(x, y);
        let (value, sep) = kappa_nonadjacent(&h, x, y, usize::MAX, true);
        Ok((value + 1, sep))
    } else {
        let (value, sep) = kappa_nonadjacent(g, x, y, usize::MAX, true);
        Ok((value, sep))
    }
}

/// κ(x, y) capped at `limit`, without separation extraction.
pub fn kappa_at_most(g: &Graph, x: Vertex, y: Vertex, limit: usize) -> usize {
    if g.has_edge(x, y) {
        let h = g.remove_edge(x, y);
        kappa_nonadjacent(&h, x, y, limit.saturating_sub(1), false).0 + 1
    } else {
        kappa_nonadjacent(g, x, y, limit, false).0
    }
}

/// Global connectivity: the largest k such that the graph is k-connected,
/// computed with the standard neighbourhood-pair reduction around a vertex
/// of minimum degree.
pub fn global_connectivity(g: &Graph) -> Result<usize, ConnError> {
    global_connectivity_capped(g, usize::MAX)
}

fn global_connectivity_capped(g: &Graph, cap: usize) -> Result<usize, ConnError> {
    let n = g.n();
    if n < 2 {
        return Err(ConnError::TooSmall);
    }
    if !g.is_connected() {
        return Ok(0);
    }
    if g.is_complete() {
        return Ok((n - 1).min(cap));
    }
    let v0 = g
        .vertices()
        .min_by_key(|&v| g.degree(v))
        .expect("non-empty");
    let mut best = cap.min(n - 1);
    for u in g.vertices() {
        if u != v0 && !g.has_edge(v0, u) {
            best = best.min(kappa_at_most(g, v0, u, best));
            if best == 0 {
                return Ok(0);
            }
        }
    }
    let nb = g.neighbours(v0).to_vec();
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            if !g.has_edge(a, b) {
                best = best.min(kappa_at_most(g, a, b, best));
            }
        }
    }
    Ok(best)
}

/// True iff the graph is k-connected (threshold test with capped flows).
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return g.n() >= 1 && g.is_connected();
    }
    if g.n() < k + 1 {
        return false;
    }
    match global_connectivity_capped(g, k) {
        Ok(c) => c >= k,
        Err(_) => false,
    }
}

/// Membership report for the connectivity-constrained classes at level `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub k: usize,
    /// maximum degree at most k
    pub c0: bool,
    /// maximal local edge-connectivity k
    pub c1: bool,
    /// maximal local connectivity k
    pub c2: bool,
    /// local connectivity at most k over adjacent pairs
    pub c3: bool,
    pub c0_hat: bool,
    pub c1_hat: bool,
    pub c2_hat: bool,
    pub c3_hat: bool,
    pub minimally_k_connected: bool,
    pub max_degree: usize,
    pub global_connectivity: usize,
    pub max_lambda: usize,
    pub max_kappa: usize,
    pub max_edge_kappa: usize,
    /// Lexicographically first pair attaining `max_lambda`.
    pub max_lambda_pair: Option<(Vertex, Vertex)>,
}

/// Classifies `g` against the class lattice at level `k` by definition:
/// all-pairs λ and κ, adjacent-pair κ, global connectivity, and the
/// per-edge deletion test for minimal k-connectivity. Exact maxima are
/// reported; this is a diagnostic for small graphs, not a hot path.
pub fn classify(g: &Graph, k: usize) -> Result<ClassReport, ConnError> {
    if k == 0 {
        return Err(ConnError::BadK);
    }
    let n = g.n();
    let max_degree = g.max_degree();
    let mut max_lambda = 0usize;
    let mut max_kappa = 0usize;
    let mut max_edge_kappa = 0usize;
    let mut max_lambda_pair = None;
    for x in 0..n {
        for y in (x + 1)..n {
            let lam = lambda_at_most(g, x, y, usize::MAX);
            if lam > max_lambda {
                max_lambda = lam;
                max_lambda_pair = Some((x, y));
            }
            let kap = kappa_at_most(g, x, y, usize::MAX);
            max_kappa = max_kappa.max(kap);
            if g.has_edge(x, y) {
                max_edge_kappa = max_edge_kappa.max(kap);
            }
        }
    }
    let global = if n < 2 { 0 } else { global_connectivity(g)? };
    let c0 = max_degree <= k;
    let c1 = max_lambda <= k;
    let c2 = max_kappa <= k;
    let c3 = max_edge_kappa <= k;
    let k_connected = n >= 2 && global >= k;
    let minimally_k_connected = k_connected
        && g.edges().into_iter().all(|(u, v)| {
            // a (k-1)-cut of g \ uv must separate u from v
            let h = g.remove_edge(u, v);
            kappa_at_most(&h, u, v, k) < k
        });
    Ok(ClassReport {
        k,
        c0,
        c1,
        c2,
        c3,
        c0_hat: c0 && k_connected,
        c1_hat: c1 && k_connected,
        c2_hat: c2 && k_connected,
        c3_hat: c3 && k_connected,
        minimally_k_connected,
        max_degree,
        global_connectivity: global,
        max_lambda,
        max_kappa,
        max_edge_kappa,
        max_lambda_pair,
    })
}
