//! Brute-force ground truth: exact colourability, chromatic number, list
//! colourability, hypergraph colourability, criticality and minimum cuts by
//! enumeration. Only for small instances; every entry point enforces an
//! explicit size cap rather than truncating silently.

use thiserror::Error;

use crate::colouring::Colouring;
use crate::gadgets::Hypergraph;
use crate::graph::{Graph, Vertex};
use crate::listfpt::ListAssignment;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("{what}: size {size} exceeds oracle cap {cap}")]
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("vertex-mode min cut requires a non-adjacent pair")]
    AdjacentPair,
    #[error("x and y must be distinct")]
    SameVertex,
}

/// Size caps for the brute-force procedures.
#[derive(Clone, Copy, Debug)]
pub struct OracleLimits {
    pub max_vertices: usize,
    pub max_cut_vertices: usize,
    pub max_cut_edges: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_vertices: 20,
            max_cut_vertices: 10,
            max_cut_edges: 20,
        }
    }
}

impl OracleLimits {
    /// Wider caps for test corpora where reductions inflate instance sizes.
    pub fn generous() -> Self {
        OracleLimits {
            max_vertices: 220,
            max_cut_vertices: 12,
            max_cut_edges: 24,
        }
    }
}

pub enum CutMode {
    Edge,
    Vertex,
}

/// Static search order: breadth-first from a highest-degree vertex, so
/// conflicts surface early during backtracking.
fn search_order(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    while let Some(start) = (0..n)
        .filter(|&v| !seen[v])
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
    {
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in g.neighbours(u) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    order
}

fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<(), OracleError> {
    if size > cap {
        return Err(OracleError::SizeCap { what, size, cap });
    }
    Ok(())
}

/// Exhaustive k-colourability: backtracking with lowest-colour-first value
/// order, the canonical-colour symmetry cut (the first use of colour c
/// requires c-1 to be in use), forward checking, and most-constrained-first
/// vertex selection. Returns a witness or definitive infeasibility.
pub fn brute_k_colourable(
    g: &Graph,
    k: usize,
    limits: &OracleLimits,
) -> Result<Option<Colouring>, OracleError> {
    check_cap("brute_k_colourable", g.n(), limits.max_vertices)?;
    let n = g.n();
    if n == 0 {
        return Ok(Some(Colouring::new(0, k)));
    }
    if k == 0 {
        return Ok(None);
    }
    // a palette beyond n colours never helps
    let kk = k.min(n).min(63);
    let mut search = ColourSearch {
        g,
        k: kk,
        avail: vec![(1u64 << kk) - 1; n],
        colour: vec![0; n],
        uncoloured_deg: (0..n).map(|v| g.degree(v)).collect(),
        trail: Vec::new(),
    };
    if search.solve(0) {
        let mut out = Colouring::new(n, k);
        for v in 0..n {
            out.set(v, search.colour[v]);
        }
        Ok(Some(out))
    } else {
        Ok(None)
    }
}

struct ColourSearch<'a> {
    g: &'a Graph,
    k: usize,
    avail: Vec<u64>,
    colour: Vec<usize>,
    uncoloured_deg: Vec<usize>,
    trail: Vec<(Vertex, u64)>,
}

impl ColourSearch<'_> {
    fn solve(&mut self, max_used: usize) -> bool {
        // most constrained vertex first; ties towards more uncoloured
        // neighbours, then the lowest identifier
        let v = match (0..self.g.n())
            .filter(|&v| self.colour[v] == 0)
            .min_by_key(|&v| {
                (
                    self.avail[v].count_ones(),
                    std::cmp::Reverse(self.uncoloured_deg[v]),
                    v,
                )
            }) {
            None => return true,
            Some(v) => v,
        };
        let bound = self.k.min(max_used + 1);
        for c in 1..=bound {
            if self.avail[v] >> (c - 1) & 1 == 0 {
                continue;
            }
            let bit = 1u64 << (c - 1);
            let mark = self.trail.len();
            self.colour[v] = c;
            let mut dead = false;
            for i in 0..self.g.neighbours(v).len() {
                let w = self.g.neighbours(v)[i];
                if self.colour[w] == 0 {
                    self.uncoloured_deg[w] -= 1;
                    if self.avail[w] & bit != 0 {
                        self.avail[w] &= !bit;
                        self.trail.push((w, bit));
                        if self.avail[w] == 0 {
                            dead = true;
                        }
                    }
                }
            }
            if !dead && self.solve(max_used.max(c)) {
                return true;
            }
            // undo
            for &(w, b) in &self.trail[mark..] {
                self.avail[w] |= b;
            }
            self.trail.truncate(mark);
            self.colour[v] = 0;
            for i in 0..self.g.neighbours(v).len() {
                let w = self.g.neighbours(v)[i];
                if self.colour[w] == 0 && w != v {
                    self.uncoloured_deg[w] += 1;
                }
            }
        }
        false
    }
}

/// Least k for which a k-colouring exists.
pub fn brute_chromatic(g: &Graph, limits: &OracleLimits) -> Result<usize, OracleError> {
    check_cap("brute_chromatic", g.n(), limits.max_vertices)?;
    if g.n() == 0 {
        return Ok(0);
    }
    let mut k = 1;
    loop {
        if brute_k_colourable(g, k, limits)?.is_some() {
            return Ok(k);
        }
        k += 1;
    }
}

/// Exhaustive list colouring over the list products.
pub fn brute_list_colourable(
    g: &Graph,
    lists: &ListAssignment,
    limits: &OracleLimits,
) -> Result<Option<Colouring>, OracleError> {
    check_cap("brute_list_colourable", g.n(), limits.max_vertices)?;
    assert_eq!(lists.n(), g.n(), "list assignment domain mismatch");
    let n = g.n();
    let max_colour = lists.max_colour().unwrap_or(0);
    if n == 0 {
        return Ok(Some(Colouring::new(0, max_colour)));
    }
    let order = search_order(g);
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let earlier: Vec<Vec<usize>> = order
        .iter()
        .map(|&v| {
            g.neighbours(v)
                .iter()
                .map(|&w| pos[w])
                .filter(|&p| p < pos[v])
                .collect()
        })
        .collect();
    let menus: Vec<Vec<usize>> = order.iter().map(|&v| lists.list(v).to_vec()).collect();
    let mut choice = vec![0usize; n]; // index into menus[i], offset by 1; 0 = unset
    let mut i = 0usize;
    loop {
        let mut idx = choice[i]; // next candidate index
        let mut placed = false;
        while idx < menus[i].len() {
            let c = menus[i][idx];
            if earlier[i].iter().all(|&p| menus[p][choice[p] - 1] != c) {
                choice[i] = idx + 1;
                placed = true;
                break;
            }
            idx += 1;
        }
        if placed {
            if i + 1 == n {
                let mut out = Colouring::new(n, max_colour);
                for (p, &v) in order.iter().enumerate() {
                    out.set(v, menus[p][choice[p] - 1]);
                }
                return Ok(Some(out));
            }
            i += 1;
            choice[i] = 0;
        } else {
            choice[i] = 0;
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
        }
    }
}

fn connected_avoiding(
    g: &Graph,
    x: Vertex,
    y: Vertex,
    dead_vertices: &[bool],
    dead_edges: &[(Vertex, Vertex)],
) -> bool {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut stack = vec![x];
    seen[x] = true;
    while let Some(u) = stack.pop() {
        if u == y {
            return true;
        }
        for &v in g.neighbours(u) {
            if seen[v] || dead_vertices[v] {
                continue;
            }
            let e = (u.min(v), u.max(v));
            if dead_edges.contains(&e) {
                continue;
            }
            seen[v] = true;
            stack.push(v);
        }
    }
    false
}

fn combinations(m: usize, s: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    // visits s-subsets of 0..m; f returns true to stop
    let mut idx: Vec<usize> = (0..s).collect();
    if s > m {
        return false;
    }
    loop {
        if f(&idx) {
            return true;
        }
        // next combination
        let mut i = s;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] != i + m - s {
                break;
            }
            if i == 0 {
                return false;
            }
        }
        idx[i] += 1;
        for j in (i + 1)..s {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Minimum x–y cut by subset enumeration, in edge or vertex mode. The
/// vertex mode requires a non-adjacent pair (Menger ground truth).
pub fn brute_min_cut(
    g: &Graph,
    x: Vertex,
    y: Vertex,
    mode: CutMode,
    limits: &OracleLimits,
) -> Result<usize, OracleError> {
    if x == y {
        return Err(OracleError::SameVertex);
    }
    match mode {
        CutMode::Edge => {
            check_cap("brute_min_cut[edge]", g.m(), limits.max_cut_edges)?;
            let edges = g.edges();
            let dead_v = vec![false; g.n()];
            for s in 0..=edges.len() {
                let mut found = false;
                combinations(edges.len(), s, |idx| {
                    let dead: Vec<(Vertex, Vertex)> = idx.iter().map(|&i| edges[i]).collect();
                    if !connected_avoiding(g, x, y, &dead_v, &dead) {
                        found = true;
                        return true;
                    }
                    false
                });
                if found {
                    return Ok(s);
                }
            }
            unreachable!("removing all edges must disconnect distinct vertices");
        }
        CutMode::Vertex => {
            check_cap("brute_min_cut[vertex]", g.n(), limits.max_cut_vertices)?;
            if g.has_edge(x, y) {
                return Err(OracleError::AdjacentPair);
            }
            let candidates: Vec<Vertex> = g.vertices().filter(|&v| v != x && v != y).collect();
            for s in 0..=candidates.len() {
                let mut found = false;
                combinations(candidates.len(), s, |idx| {
                    let mut dead_v = vec![false; g.n()];
                    for &i in idx {
                        dead_v[candidates[i]] = true;
                    }
                    if !connected_avoiding(g, x, y, &dead_v, &[]) {
                        found = true;
                        return true;
                    }
                    false
                });
                if found {
                    return Ok(s);
                }
            }
            unreachable!("removing all other vertices disconnects a non-adjacent pair");
        }
    }
}

/// χ(g) = k and every single-edge deletion is (k-1)-colourable.
pub fn is_k_critical(g: &Graph, k: usize, limits: &OracleLimits) -> Result<bool, OracleError> {
    check_cap("is_k_critical", g.n(), limits.max_vertices)?;
    if k == 0 {
        return Ok(false);
    }
    if brute_k_colourable(g, k, limits)?.is_none() {
        return Ok(false);
    }
    if brute_k_colourable(g, k - 1, limits)?.is_some() {
        return Ok(false);
    }
    for (u, v) in g.edges() {
        if brute_k_colourable(&g.remove_edge(u, v), k - 1, limits)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Enumerates canonical proper hypergraph colourings (first use of colour c
/// requires c-1 in use) and calls `f` with each. Returns the number of
/// canonical colourings visited.
fn hypergraph_canonical_colourings(
    h: &Hypergraph,
    k: usize,
    mut f: impl FnMut(&[usize]) -> bool,
) -> usize {
    let n = h.n();
    if n == 0 {
        let stop = f(&[]);
        let _ = stop;
        return 1;
    }
    // hyperedges indexed by their maximal vertex: checked on assignment
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in h.edges().iter().enumerate() {
        if let Some(&mx) = e.iter().max() {
            closing[mx].push(i);
        }
    }
    let mut colour = vec![0usize; n];
    let mut count = 0usize;
    let mut v = 0usize;
    let mut stopped = false;
    loop {
        if stopped {
            break;
        }
        let max_used = colour[..v].iter().copied().max().unwrap_or(0);
        let bound = k.min(max_used + 1);
        let mut c = colour[v] + 1;
        let mut placed = false;
        while c <= bound {
            colour[v] = c;
            let ok = closing[v].iter().all(|&ei| {
                let e = &h.edges()[ei];
                // monochromatic check: every vertex of e equals c?
                !e.iter().all(|&w| colour[w] == c)
            });
            if ok {
                placed = true;
                break;
            }
            c += 1;
        }
        if placed {
            if v + 1 == n {
                count += 1;
                if f(&colour) {
                    stopped = true;
                }
                // continue searching from this leaf
            } else {
                v += 1;
                colour[v] = 0;
                continue;
            }
        } else {
            colour[v] = 0;
            if v == 0 {
                break;
            }
            v -= 1;
            continue;
        }
    }
    count
}

/// Exhaustive k-colouring of a hypergraph with no monochromatic edge.
pub fn brute_hypergraph_colourable(
    h: &Hypergraph,
    k: usize,
    limits: &OracleLimits,
) -> Result<Option<Vec<usize>>, OracleError> {
    check_cap("brute_hypergraph_colourable", h.n(), limits.max_vertices)?;
    let mut witness = None;
    hypergraph_canonical_colourings(h, k, |c| {
        witness = Some(c.to_vec());
        true
    });
    Ok(witness)
}

/// Exact number of proper k-colourings (no monochromatic edge), counting all
/// colour permutations: each canonical colouring using `u` colours stands
/// for k!/(k-u)! actual ones.
pub fn count_hypergraph_colourings(
    h: &Hypergraph,
    k: usize,
    limits: &OracleLimits,
) -> Result<usize, OracleError> {
    check_cap("count_hypergraph_colourings", h.n(), limits.max_vertices)?;
    let mut total = 0usize;
    hypergraph_canonical_colourings(h, k, |c| {
        let used = c.iter().copied().max().unwrap_or(0);
        let mut ways = 1usize;
        for i in 0..used {
            ways *= k - i;
        }
        total += ways;
        false
    });
    Ok(total)
}

/// Visits every canonical proper k-colouring of a graph. Sufficient for
/// checking colour-permutation-invariant properties of all colourings.
pub fn for_each_canonical_colouring(
    g: &Graph,
    k: usize,
    limits: &OracleLimits,
    mut f: impl FnMut(&Colouring),
) -> Result<usize, OracleError> {
    check_cap("for_each_canonical_colouring", g.n(), limits.max_vertices)?;
    let h = Hypergraph::from_graph_edges(g);
    let n = g.n();
    let count = hypergraph_canonical_colourings(&h, k, |c| {
        let mut col = Colouring::new(n, k);
        for (v, &cv) in c.iter().enumerate() {
            col.set(v, cv);
        }
        f(&col);
        false
    });
    Ok(count)
}
