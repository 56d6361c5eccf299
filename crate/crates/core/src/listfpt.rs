//! Degree-list colouring machinery (Gallai trees, long lists, degree
//! choosability) and the FPT k-colouring algorithm parameterized by the
//! number of vertices of degree above k.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::brooks;
use crate::colouring::{ColourOutcome, Colouring, Infeasibility, Obstruction};
use crate::graph::{self, Graph, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ListError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("list of vertex {0} is shorter than its degree")]
    NotDegreeList(Vertex),
    #[error("no vertex has a long list")]
    NoLongList,
    #[error("graph is a Gallai tree; use the Gallai-tree routine")]
    IsGallaiTree,
    #[error("graph is not a Gallai tree")]
    NotGallaiTree,
    #[error("list assignment does not match the vertex set")]
    BadDomain,
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

/// Per-vertex finite colour sets. Lists are kept sorted and deduplicated;
/// colours are positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListAssignment {
    lists: Vec<Vec<usize>>,
}

impl ListAssignment {
    pub fn new(mut lists: Vec<Vec<usize>>) -> Self {
        for l in &mut lists {
            l.sort_unstable();
            l.dedup();
            assert!(l.iter().all(|&c| c > 0), "colours are positive integers");
        }
        ListAssignment { lists }
    }

    pub fn uniform(n: usize, colours: &[usize]) -> Self {
        ListAssignment::new(vec![colours.to_vec(); n])
    }

    pub fn n(&self) -> usize {
        self.lists.len()
    }

    pub fn list(&self, v: Vertex) -> &[usize] {
        &self.lists[v]
    }

    pub fn max_colour(&self) -> Option<usize> {
        self.lists.iter().filter_map(|l| l.last().copied()).max()
    }

    pub fn remove_colour(&mut self, v: Vertex, c: usize) {
        if let Ok(pos) = self.lists[v].binary_search(&c) {
            self.lists[v].remove(pos);
        }
    }

    /// True iff |L(v)| >= d(v) for every vertex.
    pub fn is_degree_list(&self, g: &Graph) -> bool {
        g.vertices().all(|v| self.lists[v].len() >= g.degree(v))
    }

    fn first_violation(&self, g: &Graph) -> Option<Vertex> {
        g.vertices().find(|&v| self.lists[v].len() < g.degree(v))
    }

    /// Lowest-identifier vertex with |L(v)| > d(v), if any.
    pub fn long_vertex(&self, g: &Graph) -> Option<Vertex> {
        g.vertices().find(|&v| self.lists[v].len() > g.degree(v))
    }

    /// Restriction to an induced subgraph given by its vertex map.
    pub fn restrict(&self, map: &[Vertex]) -> ListAssignment {
        ListAssignment {
            lists: map.iter().map(|&v| self.lists[v].clone()).collect(),
        }
    }

    pub fn into_lists(self) -> Vec<Vec<usize>> {
        self.lists
    }
}

/// One B-uniform leaf-block peel.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelStep {
    pub block: Vec<Vertex>,
    pub attachment: Vertex,
    pub removed_list: Vec<usize>,
}

/// Infeasibility certificate for a Gallai tree: the peel sequence ending at
/// a clique or odd cycle whose tight lists are all equal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelCertificate {
    pub steps: Vec<PeelStep>,
    pub terminal_vertices: Vec<Vertex>,
    pub terminal_list: Vec<usize>,
}

/// True iff every block is a complete graph or an odd cycle.
pub fn is_gallai_tree(g: &Graph) -> Result<bool, ListError> {
    if !g.is_connected() {
        return Err(ListError::Disconnected);
    }
    let bf = graph::blocks(g);
    for b in &bf.blocks {
        let (sub, _) = g.induced(b);
        if !block_is_gallai(&sub) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn block_is_gallai(sub: &Graph) -> bool {
    sub.is_complete()
        || (sub.n() >= 3 && sub.n() % 2 == 1 && sub.vertices().all(|v| sub.degree(v) == 2))
}

fn greedy_from_lists(g: &Graph, order: &[Vertex], lists: &ListAssignment) -> Option<Colouring> {
    let k = lists.max_colour().unwrap_or(0);
    let mut c = Colouring::new(g.n(), k);
    for &v in order {
        let mut chosen = None;
        'cols: for &col in lists.list(v) {
            for &w in g.neighbours(v) {
                if c.get(w) == Some(col) {
                    continue 'cols;
                }
            }
            chosen = Some(col);
            break;
        }
        c.set(v, chosen?);
    }
    Some(c)
}

/// L-colouring of a connected graph with a degree-list assignment in which
/// some vertex has a long list: greedy over the reversed search ordering
/// rooted at that vertex.
pub fn long_list_colour(g: &Graph, lists: &ListAssignment) -> Result<Colouring, ListError> {
    if lists.n() != g.n() {
        return Err(ListError::BadDomain);
    }
    if !g.is_connected() {
        return Err(ListError::Disconnected);
    }
    if let Some(v) = lists.first_violation(g) {
        return Err(ListError::NotDegreeList(v));
    }
    let root = lists.long_vertex(g).ok_or(ListError::NoLongList)?;
    let mut order = graph::search_ordering(g, root).expect("connectivity checked");
    order.reverse();
    greedy_from_lists(g, &order, lists)
        .ok_or_else(|| ListError::Internal("long-list greedy ran out of colours".into()))
}

/// Colour one endpoint of an adjacent pair with differing lists, making the
/// other endpoint long, then finish greedily. `g` must stay connected after
/// the removal (callers pick a non-cut vertex).
fn split_pair_and_finish(
    g: &Graph,
    lists: &ListAssignment,
    u: Vertex,
    u_other: Vertex,
) -> Result<Colouring, ListError> {
    // choose the orientation that yields a colour outside the other list
    let (w, w_other) = if lists
        .list(u)
        .iter()
        .any(|c| !lists.list(u_other).contains(c))
    {
        (u, u_other)
    } else {
        (u_other, u)
    };
    let colour = *lists
        .list(w)
        .iter()
        .find(|c| !lists.list(w_other).contains(c))
        .ok_or_else(|| ListError::Internal("differing lists share every colour".into()))?;
    let (rest, map) = g.remove_vertices(&[w]);
    let mut rest_lists = lists.restrict(&map);
    for (local, &orig) in map.iter().enumerate() {
        if g.has_edge(w, orig) {
            rest_lists.remove_colour(local, colour);
        }
    }
    let sub = long_list_colour(&rest, &rest_lists)?;
    let k = lists.max_colour().unwrap_or(0);
    let mut out = Colouring::new(g.n(), k);
    out.set(w, colour);
    for (local, &orig) in map.iter().enumerate() {
        out.set(orig, sub.get(local).unwrap());
    }
    Ok(out)
}

/// L-colouring of a Gallai tree with a degree-list assignment, or the peel
/// certificate showing none exists.
pub fn gallai_tree_colour(g: &Graph, lists: &ListAssignment) -> Result<ColourOutcome, ListError> {
    if lists.n() != g.n() {
        return Err(ListError::BadDomain);
    }
    if !is_gallai_tree(g)? {
        return Err(ListError::NotGallaiTree);
    }
    if let Some(v) = lists.first_violation(g) {
        return Err(ListError::NotDegreeList(v));
    }
    let k = lists.max_colour().unwrap_or(0);
    // working copy in original identifiers throughout
    let mut cur = g.clone();
    let mut cur_map: Vec<Vertex> = (0..g.n()).collect();
    let mut cur_lists = lists.clone();
    let mut assigned: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut steps: Vec<PeelStep> = Vec::new();

    let finish = |assigned: BTreeMap<Vertex, usize>,
                  tail: Colouring,
                  tail_map: &[Vertex]|
     -> ColourOutcome {
        let mut out = Colouring::new(g.n(), k);
        for (v, c) in assigned {
            out.set(v, c);
        }
        for (local, &orig) in tail_map.iter().enumerate() {
            out.set(orig, tail.get(local).unwrap());
        }
        ColourOutcome::coloured(out)
    };

    loop {
        if cur_lists.long_vertex(&cur).is_some() {
            let tail = long_list_colour(&cur, &cur_lists)?;
            return Ok(finish(assigned, tail, &cur_map));
        }
        let bf = graph::blocks(&cur);
        if bf.blocks.len() == 1 {
            let block = &bf.blocks[0];
            let common = cur_lists.list(block[0]).to_vec();
            if block
                .iter()
                .all(|&v| cur_lists.list(v) == common.as_slice())
            {
                return Ok(ColourOutcome::obstructed(Obstruction::Infeasible {
                    witness: Infeasibility::UniformPeel {
                        certificate: PeelCertificate {
                            steps,
                            terminal_vertices: cur_map.clone(),
                            terminal_list: common,
                        },
                    },
                }));
            }
            // adjacent pair with differing lists exists
            let (u, u2) = adjacent_differing_pair(&cur, &cur_lists, None)
                .ok_or_else(|| ListError::Internal("unequal lists but no differing edge".into()))?;
            let tail = split_pair_and_finish(&cur, &cur_lists, u, u2)?;
            return Ok(finish(assigned, tail, &cur_map));
        }
        // pick the first leaf block (exactly one cut vertex inside)
        let (leaf_idx, attach) = bf
            .blocks
            .iter()
            .enumerate()
            .find_map(|(i, b)| {
                let cuts: Vec<Vertex> =
                    b.iter().copied().filter(|&v| bf.is_cut_vertex(v)).collect();
                (cuts.len() == 1).then(|| (i, cuts[0]))
            })
            .ok_or_else(|| ListError::Internal("no leaf block in a block forest".into()))?;
        let block = bf.blocks[leaf_idx].clone();
        let interior: Vec<Vertex> = block.iter().copied().filter(|&v| v != attach).collect();
        let common = cur_lists.list(interior[0]).to_vec();
        let uniform = interior
            .iter()
            .all(|&u| cur_lists.list(u) == common.as_slice() && common.len() == cur.degree(u));
        if uniform {
            // colour the interior from the common list and peel it off
            let (sub, sub_map) = cur.induced(&block);
            let attach_local = sub_map.binary_search(&attach).unwrap();
            let interior_cols = colour_uniform_leaf(&sub, attach_local, &common)
                .ok_or_else(|| ListError::Internal("leaf block colouring failed".into()))?;
            for (local, col) in interior_cols {
                assigned.insert(cur_map[sub_map[local]], col);
            }
            steps.push(PeelStep {
                block: block.iter().map(|&v| cur_map[v]).collect(),
                attachment: cur_map[attach],
                removed_list: common.clone(),
            });
            // shrink the graph and update the attachment list
            let (next, next_local_map) = cur.remove_vertices(&interior);
            let mut next_lists = ListAssignment {
                lists: next_local_map
                    .iter()
                    .map(|&v| cur_lists.list(v).to_vec())
                    .collect(),
            };
            let attach_new = next_local_map.binary_search(&attach).unwrap();
            for &c in &common {
                next_lists.remove_colour(attach_new, c);
            }
            cur_map = next_local_map.iter().map(|&v| cur_map[v]).collect();
            cur = next;
            cur_lists = next_lists;
        } else {
            let (u, u2) = adjacent_differing_pair(&cur, &cur_lists, Some((&block, attach)))
                .ok_or_else(|| {
                    ListError::Internal("non-uniform leaf has no differing edge".into())
                })?;
            let tail = split_pair_and_finish(&cur, &cur_lists, u, u2)?;
            return Ok(finish(assigned, tail, &cur_map));
        }
    }
}

/// Adjacent vertices with different lists, optionally restricted to the
/// interior of a given block.
fn adjacent_differing_pair(
    g: &Graph,
    lists: &ListAssignment,
    within: Option<(&[Vertex], Vertex)>,
) -> Option<(Vertex, Vertex)> {
    let allowed = |v: Vertex| match within {
        Some((block, attach)) => v != attach && block.binary_search(&v).is_ok(),
        None => true,
    };
    for (u, v) in g.edges() {
        if allowed(u) && allowed(v) && lists.list(u) != lists.list(v) {
            return Some((u, v));
        }
    }
    None
}

/// Colours the interior of a uniform leaf block (clique or odd cycle) from
/// the common list; returns (local vertex, colour) pairs.
fn colour_uniform_leaf(
    sub: &Graph,
    attach_local: Vertex,
    common: &[usize],
) -> Option<Vec<(Vertex, usize)>> {
    let interior: Vec<Vertex> = sub.vertices().filter(|&v| v != attach_local).collect();
    if sub.is_complete() {
        if common.len() < interior.len() {
            return None;
        }
        Some(
            interior
                .iter()
                .enumerate()
                .map(|(i, &v)| (v, common[i]))
                .collect(),
        )
    } else {
        // odd cycle: walk the interior path between the attachment's two
        // neighbours and alternate the two list colours
        if common.len() != 2 {
            return None;
        }
        let (a, b) = (common[0], common[1]);
        let start = sub.neighbours(attach_local)[0];
        let mut path = vec![start];
        let mut prev = attach_local;
        let mut curv = start;
        while path.len() < interior.len() {
            let next = sub.neighbours(curv).iter().copied().find(|&w| w != prev)?;
            path.push(next);
            prev = curv;
            curv = next;
        }
        Some(
            path.iter()
                .enumerate()
                .map(|(i, &v)| (v, if i % 2 == 0 { a } else { b }))
                .collect(),
        )
    }
}

/// L-colouring for a connected non-Gallai-tree with a degree-list
/// assignment. Always succeeds: the non-Gallai block is coloured last,
/// after greedy elimination ordered by decreasing distance from it; the
/// core itself falls to a long list, a differing edge, or the Brooks
/// pattern on equal lists.
pub fn degree_choosable_colour(g: &Graph, lists: &ListAssignment) -> Result<Colouring, ListError> {
    if lists.n() != g.n() {
        return Err(ListError::BadDomain);
    }
    if is_gallai_tree(g)? {
        return Err(ListError::IsGallaiTree);
    }
    if let Some(v) = lists.first_violation(g) {
        return Err(ListError::NotDegreeList(v));
    }
    let k = lists.max_colour().unwrap_or(0);
    let bf = graph::blocks(g);
    let core_block = bf
        .blocks
        .iter()
        .find(|b| {
            let (sub, _) = g.induced(b);
            !block_is_gallai(&sub)
        })
        .ok_or(ListError::IsGallaiTree)?;

    // multi-source BFS distance from the core
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue: VecDeque<Vertex> = VecDeque::new();
    for &v in core_block {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbours(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let mut outside: Vec<Vertex> = g.vertices().filter(|&v| dist[v] > 0).collect();
    outside.sort_by_key(|&v| std::cmp::Reverse(dist[v]));

    let mut out = Colouring::new(g.n(), k);
    for &v in &outside {
        let chosen = lists
            .list(v)
            .iter()
            .copied()
            .find(|&col| g.neighbours(v).iter().all(|&w| out.get(w) != Some(col)))
            .ok_or_else(|| ListError::Internal("outer greedy ran out of colours".into()))?;
        out.set(v, chosen);
    }

    // reduced lists on the core
    let (core, core_map) = g.induced(core_block);
    let mut core_lists = lists.restrict(&core_map);
    for (local, &orig) in core_map.iter().enumerate() {
        for &w in g.neighbours(orig) {
            if let Some(c) = out.get(w) {
                core_lists.remove_colour(local, c);
            }
        }
    }
    let core_col = colour_core(&core, &core_lists)?;
    for (local, &orig) in core_map.iter().enumerate() {
        out.set(orig, core_col.get(local).unwrap());
    }
    Ok(out)
}

/// Colours a 2-connected block that is neither a clique nor an odd cycle
/// from lists with |L(v)| >= d(v).
fn colour_core(core: &Graph, lists: &ListAssignment) -> Result<Colouring, ListError> {
    if lists.long_vertex(core).is_some() {
        return long_list_colour(core, lists);
    }
    if let Some((u, u2)) = adjacent_differing_pair(core, lists, None) {
        return split_pair_and_finish(core, lists, u, u2);
    }
    // all lists equal and tight: the core is r-regular with palette K
    let palette = lists.list(0).to_vec();
    let r = palette.len();
    if r == 2 {
        // even cycle: alternate
        let side = core
            .bipartition()
            .ok_or_else(|| ListError::Internal("odd cycle reached the core case".into()))?;
        let k = lists.max_colour().unwrap_or(0);
        let mut c = Colouring::new(core.n(), k);
        for v in core.vertices() {
            c.set(v, palette[side[v] as usize]);
        }
        return Ok(c);
    }
    // Brooks on the block, then rename 1..=r into the palette
    let outcome = brooks::brooks_colour(core, r)
        .map_err(|e| ListError::Internal(format!("Brooks rejected the core: {e}")))?;
    match outcome {
        ColourOutcome::Coloured { colouring } => {
            let k = lists.max_colour().unwrap_or(0);
            let mut c = Colouring::new(core.n(), k);
            for v in core.vertices() {
                c.set(v, palette[colouring.get(v).unwrap() - 1]);
            }
            Ok(c)
        }
        ColourOutcome::Obstructed { obstruction } => Err(ListError::Internal(format!(
            "non-Gallai core obstructed: {obstruction:?}"
        ))),
    }
}

/// Statistics from an FPT run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FptStats {
    /// Canonical colourings of the high-degree core that were enumerated.
    pub branches: usize,
}

/// k-colouring parameterized by the vertices of degree above k: enumerate
/// canonical proper colourings of the high-degree core (restricted-growth
/// strings over at most min(k, p) colours), extend each over the remaining
/// components through the degree-list machinery.
pub fn fpt_colour(g: &Graph, k: usize) -> ColourOutcome {
    fpt_colour_stats(g, k).0
}

pub fn fpt_colour_stats(g: &Graph, k: usize) -> (ColourOutcome, FptStats) {
    assert!(k >= 1, "k must be positive");
    let x: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) > k).collect();
    let p = x.len();
    let max_classes = k.min(p);
    let mut stats = FptStats::default();

    // the rest of the graph and its components are branch-independent
    let (rest, rest_map) = g.remove_vertices(&x);
    let comps = rest.components();
    let comp_graphs: Vec<(Graph, Vec<Vertex>)> = comps
        .iter()
        .map(|comp| {
            let (sub, local_map) = rest.induced(comp);
            let orig_map: Vec<Vertex> = local_map.iter().map(|&v| rest_map[v]).collect();
            (sub, orig_map)
        })
        .collect();
    let comp_is_gallai: Vec<bool> = comp_graphs
        .iter()
        .map(|(sub, _)| is_gallai_tree(sub).expect("components are connected"))
        .collect();

    let mut in_x = vec![usize::MAX; g.n()];
    for (i, &v) in x.iter().enumerate() {
        in_x[v] = i;
    }

    let mut rgs = vec![1usize; p];
    loop {
        if p > 0 {
            stats.branches += 1;
        } else {
            stats.branches = 1;
        }
        if rgs_proper_on_core(g, &x, &rgs) {
            if let Some(col) = extend_branch(g, k, &x, &rgs, &comp_graphs, &comp_is_gallai) {
                return (ColourOutcome::coloured(col), stats);
            }
        }
        if p == 0 || !advance_rgs(&mut rgs, max_classes) {
            break;
        }
    }
    (
        ColourOutcome::obstructed(Obstruction::Infeasible {
            witness: Infeasibility::Exhausted,
        }),
        stats,
    )
}

fn rgs_proper_on_core(g: &Graph, x: &[Vertex], rgs: &[usize]) -> bool {
    for (i, &u) in x.iter().enumerate() {
        for (j, &v) in x.iter().enumerate().skip(i + 1) {
            if rgs[i] == rgs[j] && g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

/// Next restricted-growth string with values bounded by `max_classes`;
/// false when exhausted. The first position is pinned to 1.
fn advance_rgs(rgs: &mut [usize], max_classes: usize) -> bool {
    let p = rgs.len();
    let mut i = p;
    while i > 1 {
        i -= 1;
        let prefix_max = rgs[..i].iter().copied().max().unwrap_or(0);
        if rgs[i] < max_classes.min(prefix_max + 1) {
            rgs[i] += 1;
            for slot in rgs[i + 1..].iter_mut() {
                *slot = 1;
            }
            return true;
        }
    }
    false
}

fn extend_branch(
    g: &Graph,
    k: usize,
    x: &[Vertex],
    rgs: &[usize],
    comp_graphs: &[(Graph, Vec<Vertex>)],
    comp_is_gallai: &[bool],
) -> Option<Colouring> {
    let mut out = Colouring::new(g.n(), k);
    for (i, &v) in x.iter().enumerate() {
        out.set(v, rgs[i]);
    }
    for ((sub, orig_map), &gallai) in comp_graphs.iter().zip(comp_is_gallai) {
        // lists: palette minus the colours of X-neighbours
        let lists: Vec<Vec<usize>> = orig_map
            .iter()
            .map(|&orig| {
                let mut banned = vec![false; k + 1];
                for &w in g.neighbours(orig) {
                    if let Some(c) = out.get(w) {
                        banned[c] = true;
                    }
                }
                (1..=k).filter(|&c| !banned[c]).collect()
            })
            .collect();
        if lists.iter().any(|l| l.is_empty()) && sub.n() == 1 {
            return None;
        }
        let assignment = ListAssignment::new(lists);
        let coloured = if assignment.long_vertex(sub).is_some() {
            long_list_colour(sub, &assignment).ok()?
        } else if gallai {
            match gallai_tree_colour(sub, &assignment).ok()? {
                ColourOutcome::Coloured { colouring } => colouring,
                ColourOutcome::Obstructed { .. } => return None,
            }
        } else {
            degree_choosable_colour(sub, &assignment).ok()?
        };
        for (local, &orig) in orig_map.iter().enumerate() {
            out.set(orig, coloured.get(local).unwrap());
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::is_proper_colouring;
    use crate::fixtures;
    use crate::oracle::{self, OracleLimits};

    fn lim() -> OracleLimits {
        OracleLimits::default()
    }

    #[test]
    fn gallai_tree_recognition() {
        assert!(is_gallai_tree(&Graph::path(5)).unwrap());
        assert!(!is_gallai_tree(&Graph::cycle(4)).unwrap());
        // two K4's sharing a vertex
        let mut g = Graph::complete(4);
        let mut h = Graph::empty(7);
        for (u, v) in g.edges() {
            h.add_edge(u, v);
        }
        for u in 4..7 {
            h.add_edge(3, u);
            for v in (u + 1)..7 {
                h.add_edge(u, v);
            }
        }
        g = h;
        assert!(is_gallai_tree(&g).unwrap());
        assert!(is_gallai_tree(&Graph::empty(2)).is_err());
    }

    #[test]
    fn long_list_basics() {
        let g = Graph::empty(1);
        let l = ListAssignment::new(vec![vec![1]]);
        let c = long_list_colour(&g, &l).unwrap();
        assert_eq!(c.get(0), Some(1));

        let g = Graph::cycle(4);
        let l = ListAssignment::new(vec![vec![1, 2], vec![1, 2], vec![1, 2, 3], vec![1, 2]]);
        let c = long_list_colour(&g, &l).unwrap();
        assert!(is_proper_colouring(&g, &c));
        assert!(oracle::brute_list_colourable(&g, &l, &lim())
            .unwrap()
            .is_some());

        let g = Graph::complete(4);
        let l = ListAssignment::new(vec![
            vec![1, 2, 3],
            vec![1, 2, 3],
            vec![1, 2, 3],
            vec![1, 2, 3, 4],
        ]);
        let c = long_list_colour(&g, &l).unwrap();
        assert!(is_proper_colouring(&g, &c));
    }

    #[test]
    fn gallai_uniform_odd_cycle_infeasible() {
        let g = Graph::cycle(5);
        let l = ListAssignment::uniform(5, &[1, 2]);
        let out = gallai_tree_colour(&g, &l).unwrap();
        match out.obstruction() {
            Some(Obstruction::Infeasible {
                witness: Infeasibility::UniformPeel { certificate },
            }) => {
                assert_eq!(certificate.terminal_vertices.len(), 5);
                assert_eq!(certificate.terminal_list, vec![1, 2]);
            }
            other => panic!("expected a peel certificate, got {other:?}"),
        }
    }

    #[test]
    fn gallai_one_differing_list_succeeds() {
        let g = Graph::cycle(5);
        let l = ListAssignment::new(vec![
            vec![1, 2],
            vec![1, 2],
            vec![1, 3],
            vec![1, 2],
            vec![1, 2],
        ]);
        let out = gallai_tree_colour(&g, &l).unwrap();
        let c = out.colouring().unwrap();
        assert!(is_proper_colouring(&g, c));
        for v in g.vertices() {
            assert!(l.list(v).contains(&c.get(v).unwrap()));
        }
    }

    #[test]
    fn gallai_k3_mixed_lists() {
        let g = Graph::complete(3);
        let l = ListAssignment::new(vec![vec![1, 2], vec![1, 2], vec![1, 3]]);
        let out = gallai_tree_colour(&g, &l).unwrap();
        let c = out.colouring().unwrap();
        assert!(is_proper_colouring(&g, c));
        assert!(oracle::brute_list_colourable(&g, &l, &lim())
            .unwrap()
            .is_some());
    }

    #[test]
    fn gallai_peel_through_leaf_blocks() {
        // triangle with a pendant path; tight lists force a peel
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
        let l = ListAssignment::new(vec![
            vec![1, 2],
            vec![1, 2],
            vec![1, 2, 3],
            vec![3, 4],
            vec![4],
        ]);
        let out = gallai_tree_colour(&g, &l).unwrap();
        match out {
            ColourOutcome::Coloured { ref colouring } => {
                assert!(is_proper_colouring(&g, colouring));
                for v in g.vertices() {
                    assert!(l.list(v).contains(&colouring.get(v).unwrap()));
                }
            }
            ColourOutcome::Obstructed { .. } => {
                assert!(
                    oracle::brute_list_colourable(&g, &l, &lim())
                        .unwrap()
                        .is_none(),
                    "implementation said infeasible but the oracle disagrees"
                );
            }
        }
    }

    #[test]
    fn degree_choosable_even_cycle() {
        let g = Graph::cycle(4);
        let l = ListAssignment::uniform(4, &[1, 2]);
        let c = degree_choosable_colour(&g, &l).unwrap();
        assert!(is_proper_colouring(&g, &c));
        let l2 = ListAssignment::new(vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 1]]);
        let c2 = degree_choosable_colour(&g, &l2).unwrap();
        assert!(is_proper_colouring(&g, &c2));
        for v in g.vertices() {
            assert!(l2.list(v).contains(&c2.get(v).unwrap()));
        }
    }

    #[test]
    fn degree_choosable_rejects_gallai_tree() {
        let g = Graph::path(4);
        let l = ListAssignment::uniform(4, &[1, 2]);
        assert_eq!(
            degree_choosable_colour(&g, &l).unwrap_err(),
            ListError::IsGallaiTree
        );
    }

    #[test]
    fn fpt_star_succeeds() {
        let g = fixtures::star(6);
        let (out, stats) = fpt_colour_stats(&g, 3);
        let c = out.colouring().unwrap();
        assert!(is_proper_colouring(&g, c));
        assert!(c.colours_used() <= 2);
        assert_eq!(stats.branches, 1); // p = 1, one class
    }

    #[test]
    fn fpt_k5_with_4_infeasible() {
        let out = fpt_colour(&Graph::complete(5), 4);
        assert!(matches!(
            out.obstruction(),
            Some(Obstruction::Infeasible { .. })
        ));
    }

    #[test]
    fn fpt_w5_infeasible() {
        let g = crate::morass::odd_wheel(5).unwrap();
        let out = fpt_colour(&g, 3);
        assert!(matches!(
            out.obstruction(),
            Some(Obstruction::Infeasible { .. })
        ));
    }

    #[test]
    fn fpt_branch_bound() {
        let g = fixtures::petersen();
        let (_, stats) = fpt_colour_stats(&g, 3);
        assert_eq!(stats.branches, 1); // p = 0
        let w9 = crate::morass::odd_wheel(9).unwrap();
        let (_, stats) = fpt_colour_stats(&w9, 3);
        assert!(stats.branches <= 1); // p = 1 -> min(3,1)^1
    }
}
