//! Greedy colouring over vertex orderings, the constructive Brooks
//! algorithm, and the one-high-degree-vertex colouring for 3-connected
//! graphs without dominating vertices.

use thiserror::Error;

use crate::colouring::{ColourOutcome, Colouring, Infeasibility, Obstruction};
use crate::graph::{self, Graph, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BrooksError {
    #[error("order is not a permutation of the vertex set")]
    BadOrder,
    #[error("k must be at least {0}")]
    KTooSmall(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("maximum degree {0} exceeds k = {1}")]
    DegreeTooHigh(usize, usize),
    #[error("graph is not 3-connected")]
    NotThreeConnected,
    #[error("more than one vertex of degree above k")]
    TooManyHighDegree,
    #[error("vertex {0} dominates the graph")]
    DominatingVertex(Vertex),
}

fn validate_order(g: &Graph, order: &[Vertex]) -> Result<(), BrooksError> {
    if order.len() != g.n() {
        return Err(BrooksError::BadOrder);
    }
    let mut seen = vec![false; g.n()];
    for &v in order {
        if v >= g.n() || seen[v] {
            return Err(BrooksError::BadOrder);
        }
        seen[v] = true;
    }
    Ok(())
}

/// Greedy colouring along `order` on top of an optional partial seed: each
/// vertex takes the lowest colour in `1..=k` unused by coloured neighbours.
/// Fails with the first stuck vertex.
pub fn greedy_colour_seeded(
    g: &Graph,
    order: &[Vertex],
    k: usize,
    seed: &Colouring,
) -> ColourOutcome {
    let mut c = seed.clone();
    for &v in order {
        if c.get(v).is_some() {
            continue;
        }
        let mut used = vec![false; k + 1];
        for &w in g.neighbours(v) {
            if let Some(cw) = c.get(w) {
                if cw <= k {
                    used[cw] = true;
                }
            }
        }
        match (1..=k).find(|&col| !used[col]) {
            Some(col) => c.set(v, col),
            None => {
                return ColourOutcome::obstructed(Obstruction::Infeasible {
                    witness: Infeasibility::StuckVertex { vertex: v },
                })
            }
        }
    }
    ColourOutcome::coloured(c)
}

/// Greedy colouring of all vertices along `order` with palette `1..=k`.
pub fn greedy_colour(g: &Graph, order: &[Vertex], k: usize) -> Result<ColourOutcome, BrooksError> {
    validate_order(g, order)?;
    Ok(greedy_colour_seeded(g, order, k, &Colouring::new(g.n(), k)))
}

fn distinct_colours(n: usize, k: usize) -> Colouring {
    let mut c = Colouring::new(n, k);
    for v in 0..n {
        c.set(v, v + 1);
    }
    c
}

/// Colours a connected graph with maximum degree at most k using k colours,
/// or reports the Brooks obstruction: the complete graph on k+1 vertices
/// (or an odd cycle when routed here with k = 2).
pub fn brooks_colour(g: &Graph, k: usize) -> Result<ColourOutcome, BrooksError> {
    if k < 2 {
        return Err(BrooksError::KTooSmall(2));
    }
    if !g.is_connected() {
        return Err(BrooksError::Disconnected);
    }
    if g.max_degree() > k {
        return Err(BrooksError::DegreeTooHigh(g.max_degree(), k));
    }
    Ok(brooks_inner(g, k))
}

fn brooks_inner(g: &Graph, k: usize) -> ColourOutcome {
    let n = g.n();
    if n <= k {
        return ColourOutcome::coloured(distinct_colours(n, k));
    }
    if k == 2 {
        return match g.bipartition() {
            Some(side) => {
                let mut c = Colouring::new(n, 2);
                for v in g.vertices() {
                    c.set(v, side[v] as usize + 1);
                }
                ColourOutcome::coloured(c)
            }
            None => ColourOutcome::obstructed(Obstruction::OddCycle),
        };
    }
    if g.is_complete() {
        // n > k and degrees at most k force exactly K_{k+1}
        return ColourOutcome::obstructed(Obstruction::Complete);
    }
    // Non-regular case: greedy towards a vertex of degree below k.
    if let Some(v) = g.vertices().find(|&v| g.degree(v) < k) {
        return greedy_to_root(g, v, k, &Colouring::new(n, k));
    }
    // k-regular with a cut vertex: colour block by block.
    let bf = graph::blocks(g);
    if bf.blocks.len() > 1 {
        return colour_via_blocks(g, &bf, k);
    }
    // k-regular and 2-connected: the two-nonadjacent-neighbour trick.
    regular_two_connected(g, k)
}

/// Greedy over the reversed search ordering rooted at `root`, on top of a
/// seed; the root is coloured last.
fn greedy_to_root(g: &Graph, root: Vertex, k: usize, seed: &Colouring) -> ColourOutcome {
    let mut order = graph::search_ordering(g, root).expect("caller ensures connectivity");
    order.reverse();
    greedy_colour_seeded(g, &order, k, seed)
}

fn colour_via_blocks(g: &Graph, bf: &graph::BlockForest, k: usize) -> ColourOutcome {
    // Walk the block forest outward from block 0; each block is coloured
    // with its attachment vertex first, then the colours are permuted to
    // match the colour already assigned to the attachment.
    let n = g.n();
    let mut final_c = Colouring::new(n, k);
    let nb = bf.blocks.len();
    let mut done = vec![false; nb];
    // queue of (block index, attachment vertex or None)
    let mut queue: std::collections::VecDeque<(usize, Option<Vertex>)> =
        std::collections::VecDeque::new();
    for b in 0..nb {
        if done[b] {
            continue;
        }
        queue.push_back((b, None));
        done[b] = true;
        while let Some((bi, attach)) = queue.pop_front() {
            let (sub, map) = g.induced(&bf.blocks[bi]);
            // every block of a k-regular graph with a cut vertex has a
            // vertex of degree below k inside the block
            let root_local = match attach {
                Some(a) => map.iter().position(|&v| v == a).unwrap(),
                None => (0..sub.n())
                    .min_by_key(|&v| sub.degree(v))
                    .expect("blocks are non-empty"),
            };
            let outcome = if sub.n() == 1 {
                ColourOutcome::coloured(distinct_colours(1, k))
            } else {
                greedy_to_root(&sub, root_local, k, &Colouring::new(sub.n(), k))
            };
            let mut sub_c = match outcome {
                ColourOutcome::Coloured { colouring } => colouring,
                obstructed => return obstructed,
            };
            if let Some(a) = attach {
                let want = final_c.get(a).expect("attachment coloured by parent block");
                let got = sub_c.get(root_local).unwrap();
                if want != got {
                    let mut perm: Vec<usize> = (1..=k).collect();
                    perm[want - 1] = got;
                    perm[got - 1] = want;
                    sub_c = sub_c.permuted(&perm);
                }
            }
            for (local, &orig) in map.iter().enumerate() {
                final_c.set(orig, sub_c.get(local).unwrap());
            }
            // enqueue blocks that share a cut vertex with this one
            for (ci, &cv) in bf.cut_vertices.iter().enumerate() {
                if bf.blocks[bi].binary_search(&cv).is_err() {
                    continue;
                }
                for &other in &bf.incidence[ci] {
                    if !done[other] {
                        done[other] = true;
                        queue.push_back((other, Some(cv)));
                    }
                }
            }
        }
    }
    ColourOutcome::coloured(final_c)
}

/// k-regular, 2-connected, not complete, k >= 3: find v with non-adjacent
/// neighbours a, b such that g - {a, b} is connected; colour a and b alike
/// and finish greedily towards v.
fn regular_two_connected(g: &Graph, k: usize) -> ColourOutcome {
    for v in g.vertices() {
        let nb = g.neighbours(v);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let (rest, map) = g.remove_vertices(&[a, b]);
                if !rest.is_connected() {
                    continue;
                }
                let mut seed = Colouring::new(g.n(), k);
                seed.set(a, 1);
                seed.set(b, 1);
                let v_local = map.iter().position(|&w| w == v).unwrap();
                let mut order =
                    graph::search_ordering(&rest, v_local).expect("connectivity just checked");
                order.reverse();
                let order_orig: Vec<Vertex> = order.into_iter().map(|w| map[w]).collect();
                return greedy_colour_seeded(g, &order_orig, k, &seed);
            }
        }
    }
    unreachable!("a k-regular 2-connected non-complete graph admits the Brooks pattern")
}

/// Colouring for a 3-connected graph with at most one vertex of degree
/// above k and no dominating vertices: the two same-coloured neighbours of
/// the high vertex leave it a free colour.
pub fn lovasz_colour(g: &Graph, k: usize) -> Result<Colouring, BrooksError> {
    if !crate::connectivity::is_k_connected(g, 3) {
        return Err(BrooksError::NotThreeConnected);
    }
    lovasz_colour_trusted(g, k)
}

/// `lovasz_colour` without the 3-connectivity check, for callers that hold
/// a structural guarantee (the capped sides of the decomposition).
pub fn lovasz_colour_trusted(g: &Graph, k: usize) -> Result<Colouring, BrooksError> {
    if k < 3 {
        return Err(BrooksError::KTooSmall(3));
    }
    let high: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) > k).collect();
    if high.len() > 1 {
        return Err(BrooksError::TooManyHighDegree);
    }
    if let Some(d) = g.vertices().find(|&v| g.degree(v) == g.n() - 1) {
        return Err(BrooksError::DominatingVertex(d));
    }
    if !g.is_connected() {
        return Err(BrooksError::Disconnected);
    }
    let h = g
        .vertices()
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .expect("connected graphs are non-empty");
    // breadth-first layering from h; lowest-identifier vertex at distance 2
    let mut dist = vec![usize::MAX; g.n()];
    dist[h] = 0;
    let mut queue = std::collections::VecDeque::from([h]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbours(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let y = g
        .vertices()
        .find(|&v| dist[v] == 2)
        .expect("no dominating vertex in a connected graph leaves a distance-two vertex");
    let z1 = g
        .neighbours(h)
        .iter()
        .copied()
        .find(|&z| g.has_edge(z, y))
        .expect("distance-two vertex has a common neighbour with h");

    let mut seed = Colouring::new(g.n(), k);
    seed.set(h, 1);
    seed.set(y, 1);
    let (rest, map) = g.remove_vertices(&[h, y]);
    let z1_local = map.iter().position(|&w| w == z1).unwrap();
    let mut order =
        graph::search_ordering(&rest, z1_local).map_err(|_| BrooksError::NotThreeConnected)?;
    order.reverse();
    let order_orig: Vec<Vertex> = order.into_iter().map(|w| map[w]).collect();
    match greedy_colour_seeded(g, &order_orig, k, &seed) {
        ColourOutcome::Coloured { colouring } => Ok(colouring),
        ColourOutcome::Obstructed { .. } => {
            unreachable!("the reverse search ordering always leaves a free colour")
        }
    }
}
