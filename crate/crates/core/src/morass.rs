//! Odd wheels, Hajós joins, wheel-morass certificates, and the 3-colouring
//! algorithm for graphs with maximal local edge-connectivity 3: every block
//! is either 3-coloured or certified as a morass by an explicit join tree.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::colouring::{ColourOutcome, Colouring, Obstruction};
use crate::connectivity;
use crate::graph::{self, Graph, Vertex};
use crate::mlec::{self, MlecOptions};
use crate::oracle::{self, OracleError, OracleLimits};
use crate::rng::SplitMix64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MorassError {
    #[error("rim length must be odd and at least 3, got {0}")]
    BadRimLength(usize),
    #[error("expected edge ({0}, {1}) is missing")]
    MissingEdge(Vertex, Vertex),
    #[error("need exactly joins + 1 rim lengths")]
    RimCountMismatch,
    #[error("local edge-connectivity exceeds 3 on pair ({0}, {1})")]
    NotMlec3(Vertex, Vertex),
    #[error("graph is not 3-connected")]
    NotThreeConnected,
    #[error("local connectivity exceeds 3 on pair ({0}, {1})")]
    NotMlc3(Vertex, Vertex),
    #[error("3-connected graph with local connectivity 3 must have local edge-connectivity 3; pair ({0}, {1}) violates it")]
    EdgeConnectivityInconsistent(Vertex, Vertex),
    #[error("morass-minus-edge colouring hit the oracle size cap: {0}")]
    OracleCap(OracleError),
    #[error("class preconditions violated during recursion: {0}")]
    ClassViolation(String),
}

/// Odd cycle of the given length plus a universal hub. Rim vertices are
/// `0..rim_length` in cycle order; the hub is `rim_length`.
pub fn odd_wheel(rim_length: usize) -> Result<Graph, MorassError> {
    if rim_length < 3 || rim_length.is_multiple_of(2) {
        return Err(MorassError::BadRimLength(rim_length));
    }
    let mut g = Graph::empty(rim_length + 1);
    for i in 0..rim_length {
        g.add_edge(i, (i + 1) % rim_length);
        g.add_edge(i, rim_length);
    }
    Ok(g)
}

/// Result of a Hajós join: the combined graph and the embedding of the
/// second operand (the first keeps its identifiers).
#[derive(Clone, Debug)]
pub struct HajosJoined {
    pub graph: Graph,
    /// vertex of g2 -> vertex of the joined graph
    pub right_map: Vec<Vertex>,
}

/// Deletes `u1 v1` from g1 and `u2 v2` from g2, identifies u1 with u2, and
/// adds the edge `v1 v2`.
pub fn hajos_join(
    g1: &Graph,
    u1: Vertex,
    v1: Vertex,
    g2: &Graph,
    u2: Vertex,
    v2: Vertex,
) -> Result<HajosJoined, MorassError> {
    if !g1.has_edge(u1, v1) {
        return Err(MorassError::MissingEdge(u1, v1));
    }
    if !g2.has_edge(u2, v2) {
        return Err(MorassError::MissingEdge(u2, v2));
    }
    let n1 = g1.n();
    let mut right_map = vec![0usize; g2.n()];
    let mut next = n1;
    for w in g2.vertices() {
        if w == u2 {
            right_map[w] = u1;
        } else {
            right_map[w] = next;
            next += 1;
        }
    }
    let mut g = Graph::empty(next);
    for (a, b) in g1.edges() {
        if (a.min(b), a.max(b)) != (u1.min(v1), u1.max(v1)) {
            g.add_edge(a, b);
        }
    }
    for (a, b) in g2.edges() {
        if (a.min(b), a.max(b)) != (u2.min(v2), u2.max(v2)) {
            g.add_edge(right_map[a], right_map[b]);
        }
    }
    g.add_edge(v1, right_map[v2]);
    Ok(HajosJoined {
        graph: g,
        right_map,
    })
}

/// Join tree certifying that a graph is a wheel morass: leaves are odd
/// wheels embedded by explicit vertex maps, internal nodes record the Hajós
/// join data. Replaying the tree from the leaves reconstructs the graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "snake_case")]
pub enum MorassCertificate {
    Wheel {
        rim: usize,
        /// canonical wheel vertex (rim 0..rim in cycle order, hub = rim)
        /// -> host vertex
        map: Vec<Vertex>,
    },
    Join {
        left: Box<MorassCertificate>,
        right: Box<MorassCertificate>,
        u1: Vertex,
        v1: Vertex,
        u2: Vertex,
        v2: Vertex,
        identified: Vertex,
        new_edge: (Vertex, Vertex),
    },
}

type EdgeSet = BTreeSet<(Vertex, Vertex)>;

fn norm(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    (a.min(b), a.max(b))
}

impl MorassCertificate {
    /// Number of odd-wheel leaves.
    pub fn leaves(&self) -> usize {
        match self {
            MorassCertificate::Wheel { .. } => 1,
            MorassCertificate::Join { left, right, .. } => left.leaves() + right.leaves(),
        }
    }

    /// Rewrites every host vertex through `map`.
    pub fn relabel(&self, map: &[Vertex]) -> MorassCertificate {
        match self {
            MorassCertificate::Wheel { rim, map: m } => MorassCertificate::Wheel {
                rim: *rim,
                map: m.iter().map(|&v| map[v]).collect(),
            },
            MorassCertificate::Join {
                left,
                right,
                u1,
                v1,
                u2,
                v2,
                identified,
                new_edge,
            } => MorassCertificate::Join {
                left: Box::new(left.relabel(map)),
                right: Box::new(right.relabel(map)),
                u1: map[*u1],
                v1: map[*v1],
                u2: map[*u2],
                v2: map[*v2],
                identified: map[*identified],
                new_edge: (map[new_edge.0], map[new_edge.1]),
            },
        }
    }

    /// Replays the join tree; `None` when any structural condition fails.
    pub fn replay(&self) -> Option<(BTreeSet<Vertex>, EdgeSet)> {
        match self {
            MorassCertificate::Wheel { rim, map } => {
                if *rim < 3 || rim % 2 == 0 || map.len() != rim + 1 {
                    return None;
                }
                let distinct: BTreeSet<Vertex> = map.iter().copied().collect();
                if distinct.len() != map.len() {
                    return None;
                }
                let mut edges = EdgeSet::new();
                for i in 0..*rim {
                    edges.insert(norm(map[i], map[(i + 1) % rim]));
                    edges.insert(norm(map[i], map[*rim]));
                }
                Some((distinct, edges))
            }
            MorassCertificate::Join {
                left,
                right,
                u1,
                v1,
                u2,
                v2,
                identified,
                new_edge,
            } => {
                let (lv, mut le) = left.replay()?;
                let (rv, mut re) = right.replay()?;
                if u1 != identified || u2 != identified || v1 == v2 {
                    return None;
                }
                if *new_edge != norm(*v1, *v2) && *new_edge != (*v1, *v2) {
                    return None;
                }
                let shared: Vec<Vertex> = lv.intersection(&rv).copied().collect();
                if shared != vec![*identified] {
                    return None;
                }
                if !le.remove(&norm(*u1, *v1)) {
                    return None;
                }
                if !re.remove(&norm(*u2, *v2)) {
                    return None;
                }
                let joiner = norm(*v1, *v2);
                if le.contains(&joiner) || re.contains(&joiner) {
                    return None;
                }
                let mut vs = lv;
                vs.extend(rv);
                let mut es = le;
                es.extend(re);
                es.insert(joiner);
                Some((vs, es))
            }
        }
    }
}

/// True iff replaying the certificate yields exactly the vertex set and
/// edge set of `g` (the stored maps give an edge-preserving bijection).
pub fn verify_morass_certificate(g: &Graph, cert: &MorassCertificate) -> bool {
    match cert.replay() {
        None => false,
        Some((vs, es)) => {
            vs.len() == g.n()
                && vs.iter().all(|&v| v < g.n())
                && es == g.edges().into_iter().collect::<EdgeSet>()
        }
    }
}

/// Morass generated by a left fold of Hajós joins with fresh odd wheels,
/// joining only at rim vertices on both sides. Deterministic under `seed`.
pub fn random_morass(
    joins: usize,
    rim_lengths: &[usize],
    seed: u64,
) -> Result<(Graph, MorassCertificate), MorassError> {
    if rim_lengths.len() != joins + 1 {
        return Err(MorassError::RimCountMismatch);
    }
    for &r in rim_lengths {
        if r < 3 || r % 2 == 0 {
            return Err(MorassError::BadRimLength(r));
        }
    }
    let mut rng = SplitMix64::new(seed);
    let r0 = rim_lengths[0];
    let mut current = odd_wheel(r0)?;
    let mut cert = MorassCertificate::Wheel {
        rim: r0,
        map: (0..=r0).collect(),
    };
    let mut is_rim: Vec<bool> = (0..=r0).map(|v| v < r0).collect();

    for &r in &rim_lengths[1..] {
        let rim_edges: Vec<(Vertex, Vertex)> = current
            .edges()
            .into_iter()
            .filter(|&(a, b)| is_rim[a] && is_rim[b])
            .collect();
        let &(mut u1, mut v1) = rng.pick(&rim_edges);
        if rng.chance(1, 2) {
            std::mem::swap(&mut u1, &mut v1);
        }
        let wheel = odd_wheel(r)?;
        let i = rng.below(r);
        let (mut u2, mut v2) = (i, (i + 1) % r);
        if rng.chance(1, 2) {
            std::mem::swap(&mut u2, &mut v2);
        }
        let joined = hajos_join(&current, u1, v1, &wheel, u2, v2)?;
        let leaf = MorassCertificate::Wheel {
            rim: r,
            map: (0..=r).map(|c| joined.right_map[c]).collect(),
        };
        let v2_new = joined.right_map[v2];
        cert = MorassCertificate::Join {
            left: Box::new(cert),
            right: Box::new(leaf),
            u1,
            v1,
            u2: joined.right_map[u2],
            v2: v2_new,
            identified: u1,
            new_edge: norm(v1, v2_new),
        };
        let mut new_rim = vec![false; joined.graph.n()];
        for (v, &flag) in is_rim.iter().enumerate() {
            new_rim[v] = flag;
        }
        for c in 0..=r {
            if c < r {
                new_rim[joined.right_map[c]] = true;
            }
        }
        is_rim = new_rim;
        current = joined.graph;
    }
    debug_assert!(verify_morass_certificate(&current, &cert));
    Ok((current, cert))
}

/// Options for the maximal-local-edge-connectivity-3 colouring routines.
#[derive(Clone, Copy, Debug)]
pub struct C13Options {
    /// Verify the all-pairs λ <= 3 precondition up front.
    pub check_class: bool,
    /// Size caps for the morass-minus-edge colouring steps.
    pub oracle: OracleLimits,
}

impl Default for C13Options {
    fn default() -> Self {
        C13Options {
            check_class: true,
            oracle: OracleLimits::default(),
        }
    }
}

impl C13Options {
    pub fn trusted() -> Self {
        C13Options {
            check_class: false,
            oracle: OracleLimits::default(),
        }
    }

    pub fn trusted_with(oracle: OracleLimits) -> Self {
        C13Options {
            check_class: false,
            oracle,
        }
    }
}

fn check_mlec3(g: &Graph) -> Result<(), MorassError> {
    for x in g.vertices() {
        for y in (x + 1)..g.n() {
            if connectivity::lambda_at_most(g, x, y, 4) > 3 {
                return Err(MorassError::NotMlec3(x, y));
            }
        }
    }
    Ok(())
}

enum BlockOutcome {
    Coloured(Colouring),
    Morass(MorassCertificate),
}

enum FullOutcome {
    Coloured(Colouring),
    MorassBlock {
        vertices: Vec<Vertex>,
        cert: MorassCertificate,
    },
}

/// 3-colours a graph with maximal local edge-connectivity 3, or returns the
/// morass obstruction: a block together with a join-tree certificate that
/// replays to it.
pub fn colour3_mlec3(g: &Graph, opts: C13Options) -> Result<ColourOutcome, MorassError> {
    if opts.check_class {
        check_mlec3(g)?;
    }
    match colour3_full(g, &opts.oracle)? {
        FullOutcome::Coloured(c) => Ok(ColourOutcome::coloured(c)),
        FullOutcome::MorassBlock { vertices, cert } => {
            Ok(ColourOutcome::obstructed(Obstruction::MorassBlock {
                vertices,
                certificate: cert,
            }))
        }
    }
}

/// Per-block dispatch plus stitching of block colourings over the block
/// forest (child block colours are permuted to agree at the cut vertex).
fn colour3_full(g: &Graph, limits: &OracleLimits) -> Result<FullOutcome, MorassError> {
    let n = g.n();
    let bf = graph::blocks(g);
    let mut block_colourings: Vec<Colouring> = Vec::with_capacity(bf.blocks.len());
    let mut block_maps: Vec<Vec<Vertex>> = Vec::with_capacity(bf.blocks.len());
    for block in &bf.blocks {
        let (sub, map) = g.induced(block);
        match colour_block(&sub, limits)? {
            BlockOutcome::Coloured(c) => {
                block_colourings.push(c);
                block_maps.push(map);
            }
            BlockOutcome::Morass(cert) => {
                return Ok(FullOutcome::MorassBlock {
                    vertices: map,
                    cert,
                });
            }
        }
    }
    // stitch over the block forest
    let mut out = Colouring::new(n, 3);
    let nb = bf.blocks.len();
    let mut done = vec![false; nb];
    let mut queue: std::collections::VecDeque<usize> = std::collections::VecDeque::new();
    for start in 0..nb {
        if done[start] {
            continue;
        }
        done[start] = true;
        queue.push_back(start);
        while let Some(bi) = queue.pop_front() {
            let map = &block_maps[bi];
            let mut c = block_colourings[bi].clone();
            // permute to match any vertex already coloured (at most one:
            // the attachment cut vertex towards the processed region)
            if let Some((local, want)) = map
                .iter()
                .enumerate()
                .find_map(|(i, &v)| out.get(v).map(|w| (i, w)))
            {
                let got = c.get(local).unwrap();
                if got != want {
                    let mut perm: Vec<usize> = (1..=3).collect();
                    perm[want - 1] = got;
                    perm[got - 1] = want;
                    c = c.permuted(&perm);
                }
            }
            for (local, &orig) in map.iter().enumerate() {
                out.set(orig, c.get(local).unwrap());
            }
            for (ci, &cv) in bf.cut_vertices.iter().enumerate() {
                if bf.blocks[bi].binary_search(&cv).is_err() {
                    continue;
                }
                for &other in &bf.incidence[ci] {
                    if !done[other] {
                        done[other] = true;
                        queue.push_back(other);
                    }
                }
            }
        }
    }
    Ok(FullOutcome::Coloured(out))
}

/// Full recursion on a derived graph, requiring any morass verdict to cover
/// the whole graph (a strictly smaller morass block inside a 2-connected
/// member of the class is impossible).
fn colour3_whole(g: &Graph, limits: &OracleLimits) -> Result<BlockOutcome, MorassError> {
    match colour3_full(g, limits)? {
        FullOutcome::Coloured(c) => Ok(BlockOutcome::Coloured(c)),
        FullOutcome::MorassBlock { vertices, cert } => {
            if vertices.len() == g.n() {
                Ok(BlockOutcome::Morass(cert))
            } else {
                Err(MorassError::ClassViolation(
                    "morass block strictly inside a derived graph".into(),
                ))
            }
        }
    }
}

fn distinct3(n: usize) -> Colouring {
    let mut c = Colouring::new(n, 3);
    for v in 0..n {
        c.set(v, v + 1);
    }
    c
}

fn two_colouring_as3(g: &Graph) -> Option<Colouring> {
    g.bipartition().map(|side| {
        let mut c = Colouring::new(g.n(), 3);
        for v in g.vertices() {
            c.set(v, side[v] as usize + 1);
        }
        c
    })
}

/// Finds a 2-element vertex cut of a connected graph, or `None` when the
/// graph is 3-connected. Scans the standard reduction pairs around a vertex
/// of minimum degree, lowest identifiers first.
fn find_two_cut(b: &Graph) -> Option<(Vertex, Vertex)> {
    let v0 = b.vertices().min_by_key(|&v| b.degree(v))?;
    if b.degree(v0) < 3 {
        // a vertex of degree at most 2: its neighbourhood is a cut
        let nb = b.neighbours(v0);
        if nb.len() == 2 && b.n() > 3 {
            return Some((nb[0], nb[1]));
        }
    }
    let mut candidates: Vec<(Vertex, Vertex)> = Vec::new();
    for u in b.vertices() {
        if u != v0 && !b.has_edge(v0, u) {
            candidates.push((v0.min(u), v0.max(u)));
        }
    }
    let nb = b.neighbours(v0).to_vec();
    for (i, &a) in nb.iter().enumerate() {
        for &c in &nb[i + 1..] {
            if !b.has_edge(a, c) {
                candidates.push((a, c));
            }
        }
    }
    candidates.sort_unstable();
    candidates.dedup();
    for (x, y) in candidates {
        if let Ok((value, Some(sep))) = connectivity::local_vertex_connectivity(b, x, y) {
            if value <= 2 && sep.separator.len() == 2 {
                return Some((sep.separator[0], sep.separator[1]));
            }
        }
    }
    None
}

fn induced_with_edge(
    b: &Graph,
    verts: &[Vertex],
    extra: Option<(Vertex, Vertex)>,
) -> (Graph, Vec<Vertex>) {
    let (mut sub, map) = b.induced(verts);
    if let Some((u, v)) = extra {
        let ul = map.binary_search(&u).expect("edge endpoint kept");
        let vl = map.binary_search(&v).expect("edge endpoint kept");
        sub.add_edge(ul, vl);
    }
    (sub, map)
}

/// Colouring of a derived subgraph translated back to host identifiers.
fn to_host(c: &Colouring, map: &[Vertex]) -> BTreeMap<Vertex, usize> {
    map.iter()
        .enumerate()
        .map(|(local, &host)| (host, c.get(local).unwrap()))
        .collect()
}

fn colour_block(b: &Graph, limits: &OracleLimits) -> Result<BlockOutcome, MorassError> {
    let n = b.n();
    if n <= 3 {
        return Ok(BlockOutcome::Coloured(distinct3(n)));
    }
    if let Some(c) = two_colouring_as3(b) {
        return Ok(BlockOutcome::Coloured(c));
    }
    match find_two_cut(b) {
        None => {
            // 3-connected block: the k = 3 theorem applies directly
            match mlec::colour_kconn_mleck(b, 3, MlecOptions::trusted()) {
                Ok(ColourOutcome::Coloured { colouring }) => Ok(BlockOutcome::Coloured(colouring)),
                Ok(ColourOutcome::Obstructed { obstruction }) => match obstruction {
                    Obstruction::Complete | Obstruction::OddWheel => {
                        let (hub, rim) = graph::odd_wheel_structure(b).ok_or_else(|| {
                            MorassError::ClassViolation(
                                "obstructed block is not an odd wheel".into(),
                            )
                        })?;
                        let mut map = rim;
                        let rim_len = map.len();
                        map.push(hub);
                        Ok(BlockOutcome::Morass(MorassCertificate::Wheel {
                            rim: rim_len,
                            map,
                        }))
                    }
                    other => Err(MorassError::ClassViolation(format!(
                        "unexpected obstruction in a 3-connected block: {other:?}"
                    ))),
                },
                Err(e) => Err(MorassError::ClassViolation(format!(
                    "3-connected block rejected: {e}"
                ))),
            }
        }
        Some((x, y)) => two_separation_case(b, x, y, limits),
    }
}

fn two_separation_case(
    b: &Graph,
    x: Vertex,
    y: Vertex,
    limits: &OracleLimits,
) -> Result<BlockOutcome, MorassError> {
    let (rest, rmap) = b.remove_vertices(&[x, y]);
    let comps = rest.components();
    if comps.len() < 2 {
        return Err(MorassError::ClassViolation(
            "two-cut does not separate the block".into(),
        ));
    }
    let a_idx = (0..comps.len())
        .min_by_key(|&i| (comps[i].len(), rmap[comps[i][0]]))
        .unwrap();
    let a_verts: Vec<Vertex> = comps[a_idx].iter().map(|&v| rmap[v]).collect();
    let b_verts: Vec<Vertex> = (0..comps.len())
        .filter(|&i| i != a_idx)
        .flat_map(|i| comps[i].iter().map(|&v| rmap[v]))
        .collect();

    let mut with_sep_a = a_verts.clone();
    with_sep_a.extend([x, y]);
    let mut with_sep_b = b_verts.clone();
    with_sep_b.extend([x, y]);
    let (ha, ha_map) = induced_with_edge(b, &with_sep_a, Some((x, y)));
    let (hb, hb_map) = induced_with_edge(b, &with_sep_b, Some((x, y)));

    let ra = colour3_whole(&ha, limits)?;
    let rb = colour3_whole(&hb, limits)?;
    match (ra, rb) {
        (BlockOutcome::Coloured(ca), BlockOutcome::Coloured(cb)) => {
            // both carry the virtual edge, so x and y differ in each;
            // align the two colours and take the union
            let ca_host = to_host(&ca, &ha_map);
            let cb_host = to_host(&cb, &hb_map);
            let mut perm = [0usize; 3];
            let (cax, cay) = (ca_host[&x], ca_host[&y]);
            let (cbx, cby) = (cb_host[&x], cb_host[&y]);
            perm[cbx - 1] = cax;
            perm[cby - 1] = cay;
            let missing_from: usize = (1..=3).find(|c| perm[c - 1] == 0).unwrap();
            let missing_to: usize = (1..=3).find(|c| c != &cax && c != &cay).unwrap();
            perm[missing_from - 1] = missing_to;
            let mut out = Colouring::new(b.n(), 3);
            for (&v, &c) in &ca_host {
                out.set(v, c);
            }
            for (&v, &c) in &cb_host {
                out.set(v, perm[c - 1]);
            }
            Ok(BlockOutcome::Coloured(out))
        }
        (BlockOutcome::Morass(cert), _) => {
            let cert_host = cert.relabel(&ha_map);
            morass_side_case(b, x, y, &a_verts, &b_verts, cert_host, limits)
        }
        (_, BlockOutcome::Morass(cert)) => {
            let cert_host = cert.relabel(&hb_map);
            morass_side_case(b, x, y, &b_verts, &a_verts, cert_host, limits)
        }
    }
}

/// `H_A` (on `a_verts` plus the separator, virtual edge xy) is a morass.
/// Analyses the bridge structure of the other side.
fn morass_side_case(
    b: &Graph,
    x: Vertex,
    y: Vertex,
    a_verts: &[Vertex],
    b_verts: &[Vertex],
    cert_a: MorassCertificate,
    limits: &OracleLimits,
) -> Result<BlockOutcome, MorassError> {
    if b.has_edge(x, y) {
        return Err(MorassError::ClassViolation(
            "morass side with an adjacent separator pair".into(),
        ));
    }
    let mut gb_verts = b_verts.to_vec();
    gb_verts.extend([x, y]);
    let (gb, gb_map) = b.induced(&gb_verts);
    let xg = gb_map.binary_search(&x).unwrap();
    let yg = gb_map.binary_search(&y).unwrap();
    let (lam, cut) = connectivity::local_edge_connectivity(&gb, xg, yg)
        .map_err(|_| MorassError::ClassViolation("bridge flow failed".into()))?;
    if lam != 1 {
        return Err(MorassError::ClassViolation(format!(
            "morass side coexists with λ = {lam} across the separator"
        )));
    }
    let (pg, qg) = cut.edges[0];
    // orient the bridge: x' on the x side of the cut
    let mut in_x_side = vec![false; gb.n()];
    for &v in &cut.x_side {
        in_x_side[v] = true;
    }
    let (xpg, ypg) = if in_x_side[pg] { (pg, qg) } else { (qg, pg) };
    let x_prime = gb_map[xpg];
    let y_prime = gb_map[ypg];
    let gx_verts: Vec<Vertex> = cut.x_side.iter().map(|&v| gb_map[v]).collect();
    let gy_verts: Vec<Vertex> = cut.y_side.iter().map(|&v| gb_map[v]).collect();

    if x == x_prime || y == y_prime {
        // orient the degenerate side to x
        let (x, y, x_prime, y_prime, gx_verts, gy_verts) = if x == x_prime {
            (x, y, x_prime, y_prime, gx_verts, gy_verts)
        } else {
            (y, x, y_prime, x_prime, gy_verts, gx_verts)
        };
        let _ = x_prime;
        if gx_verts != [x] {
            return Err(MorassError::ClassViolation(
                "degenerate bridge side contains extra vertices".into(),
            ));
        }
        degenerate_case(b, x, y, y_prime, a_verts, &gy_verts, cert_a, limits)
    } else if b.has_edge(x, x_prime) {
        let c1 = colour_plain_side(b, &gx_verts, limits)?;
        finish_mixed(b, x, x_prime, y_prime, &gx_verts, &c1, limits)
    } else if b.has_edge(y, y_prime) {
        let c1 = colour_plain_side(b, &gy_verts, limits)?;
        finish_mixed(b, y, y_prime, x_prime, &gy_verts, &c1, limits)
    } else {
        let (hx, hx_map) = induced_with_edge(b, &gx_verts, Some((x, x_prime)));
        let (hy, hy_map) = induced_with_edge(b, &gy_verts, Some((y, y_prime)));
        let rx = colour3_whole(&hx, limits)?;
        match rx {
            BlockOutcome::Coloured(cx) => {
                let c1 = to_host(&cx, &hx_map);
                finish_mixed(b, x, x_prime, y_prime, &gx_verts, &c1, limits)
            }
            BlockOutcome::Morass(cert_x_local) => {
                let cert_x = cert_x_local.relabel(&hx_map);
                match colour3_whole(&hy, limits)? {
                    BlockOutcome::Coloured(cy) => {
                        let c1 = to_host(&cy, &hy_map);
                        finish_mixed(b, y, y_prime, x_prime, &gy_verts, &c1, limits)
                    }
                    BlockOutcome::Morass(cert_y_local) => {
                        let cert_y = cert_y_local.relabel(&hy_map);
                        // b is itself a morass: join H_A with H_x at x,
                        // then the result with H_y at y
                        let m1 = MorassCertificate::Join {
                            left: Box::new(cert_a),
                            right: Box::new(cert_x),
                            u1: x,
                            v1: y,
                            u2: x,
                            v2: x_prime,
                            identified: x,
                            new_edge: norm(y, x_prime),
                        };
                        let cert = MorassCertificate::Join {
                            left: Box::new(m1),
                            right: Box::new(cert_y),
                            u1: y,
                            v1: x_prime,
                            u2: y,
                            v2: y_prime,
                            identified: y,
                            new_edge: norm(x_prime, y_prime),
                        };
                        Ok(BlockOutcome::Morass(cert))
                    }
                }
            }
        }
    }
}

/// Degenerate bridge case (`x = x'`, so the bridge side is `{x}` alone):
/// either the whole block is a morass via a single join, or the morass side
/// is coloured through its 4-criticality.
#[allow(clippy::too_many_arguments)]
fn degenerate_case(
    b: &Graph,
    x: Vertex,
    y: Vertex,
    y_prime: Vertex,
    a_verts: &[Vertex],
    gy_verts: &[Vertex],
    cert_a: MorassCertificate,
    limits: &OracleLimits,
) -> Result<BlockOutcome, MorassError> {
    let (hy, hy_map) = induced_with_edge(b, gy_verts, Some((y, y_prime)));
    match colour3_whole(&hy, limits)? {
        BlockOutcome::Morass(cert_y_local) => {
            let cert_y = cert_y_local.relabel(&hy_map);
            let cert = MorassCertificate::Join {
                left: Box::new(cert_a),
                right: Box::new(cert_y),
                u1: y,
                v1: x,
                u2: y,
                v2: y_prime,
                identified: y,
                new_edge: norm(x, y_prime),
            };
            Ok(BlockOutcome::Morass(cert))
        }
        BlockOutcome::Coloured(cy) => {
            // colour the morass side minus its virtual edge: 4-criticality
            // forces the separator pair onto one colour
            let mut ga_verts = a_verts.to_vec();
            ga_verts.extend([x, y]);
            let (ga, ga_map) = b.induced(&ga_verts);
            let c1_local = oracle::brute_k_colourable(&ga, 3, limits)
                .map_err(MorassError::OracleCap)?
                .ok_or_else(|| {
                    MorassError::ClassViolation("morass minus an edge failed to colour".into())
                })?;
            let c1 = to_host(&c1_local, &ga_map);
            if c1[&x] != c1[&y] {
                return Err(MorassError::ClassViolation(
                    "morass side coloured with distinct separator colours".into(),
                ));
            }
            let c2 = to_host(&cy, &hy_map);
            // transpose side-2 colours so the copies of y agree
            let (want, got) = (c1[&y], c2[&y]);
            let mut out = Colouring::new(b.n(), 3);
            for (&v, &c) in &c1 {
                out.set(v, c);
            }
            for (&v, &c) in &c2 {
                let c = if c == got {
                    want
                } else if c == want {
                    got
                } else {
                    c
                };
                out.set(v, c);
            }
            Ok(BlockOutcome::Coloured(out))
        }
    }
}

/// Colours a plain induced side of the bridge (it can never be a morass).
fn colour_plain_side(
    b: &Graph,
    verts: &[Vertex],
    limits: &OracleLimits,
) -> Result<BTreeMap<Vertex, usize>, MorassError> {
    let (sub, map) = b.induced(verts);
    match colour3_whole(&sub, limits)? {
        BlockOutcome::Coloured(c) => Ok(to_host(&c, &map)),
        BlockOutcome::Morass(_) => Err(MorassError::ClassViolation(
            "plain bridge side certified as a morass".into(),
        )),
    }
}

/// Combines a colouring `c1` of the bridge side containing `p` (with
/// `c1(p) != c1(p')`) with a colouring of the rest of the block through the
/// replacement edge `p q'`: J = b - (side \ {p}) + pq'.
fn finish_mixed(
    b: &Graph,
    p: Vertex,
    p_prime: Vertex,
    q_prime: Vertex,
    side_verts: &[Vertex],
    c1: &BTreeMap<Vertex, usize>,
    limits: &OracleLimits,
) -> Result<BlockOutcome, MorassError> {
    if c1[&p] == c1[&p_prime] {
        return Err(MorassError::ClassViolation(
            "bridge side coloured with equal endpoint colours".into(),
        ));
    }
    let mut in_side = vec![false; b.n()];
    for &v in side_verts {
        in_side[v] = true;
    }
    let keep: Vec<Vertex> = b.vertices().filter(|&v| !in_side[v] || v == p).collect();
    let (j, j_map) = induced_with_edge(b, &keep, Some((p, q_prime)));
    let c2 = match colour3_whole(&j, limits)? {
        BlockOutcome::Coloured(c) => to_host(&c, &j_map),
        BlockOutcome::Morass(_) => {
            // J is a morass, hence 4-critical: J minus the replacement
            // edge is 3-colourable; find such a colouring by oracle
            let pl = j_map.binary_search(&p).unwrap();
            let ql = j_map.binary_search(&q_prime).unwrap();
            let jm = j.remove_edge(pl, ql);
            let c = oracle::brute_k_colourable(&jm, 3, limits)
                .map_err(MorassError::OracleCap)?
                .ok_or_else(|| {
                    MorassError::ClassViolation("morass minus an edge failed to colour".into())
                })?;
            to_host(&c, &j_map)
        }
    };
    // permutation with σ(c2(p)) = c1(p) and σ(c2(q')) != c1(p')
    let perms: [[usize; 3]; 6] = [
        [1, 2, 3],
        [1, 3, 2],
        [2, 1, 3],
        [2, 3, 1],
        [3, 1, 2],
        [3, 2, 1],
    ];
    let sigma = perms
        .iter()
        .find(|s| s[c2[&p] - 1] == c1[&p] && s[c2[&q_prime] - 1] != c1[&p_prime])
        .ok_or_else(|| {
            MorassError::ClassViolation("no aligning permutation for the bridge".into())
        })?;
    let mut out = Colouring::new(b.n(), 3);
    for (&v, &c) in c1 {
        out.set(v, c);
    }
    for (&v, &c) in &c2 {
        out.set(v, sigma[c - 1]);
    }
    Ok(BlockOutcome::Coloured(out))
}

/// Optimal colouring for a graph with maximal local edge-connectivity 3:
/// χ is 0, 1, 2, 3 or 4, with a witnessing colouring.
pub fn optimal_colouring_mlec3(
    g: &Graph,
    opts: C13Options,
) -> Result<(usize, Colouring), MorassError> {
    if opts.check_class {
        check_mlec3(g)?;
    }
    let n = g.n();
    if n == 0 {
        return Ok((0, Colouring::new(0, 0)));
    }
    if g.m() == 0 {
        let mut c = Colouring::new(n, 1);
        for v in 0..n {
            c.set(v, 1);
        }
        return Ok((1, c));
    }
    if let Some(side) = g.bipartition() {
        let mut c = Colouring::new(n, 2);
        for v in g.vertices() {
            c.set(v, side[v] as usize + 1);
        }
        return Ok((2, c));
    }
    match colour3_full(g, &opts.oracle)? {
        FullOutcome::Coloured(c) => Ok((3, c)),
        FullOutcome::MorassBlock { .. } => {
            // 4 colours always suffice: the class is 3-degenerate
            let mut order: Vec<Vertex> = Vec::with_capacity(n);
            let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
            let mut gone = vec![false; n];
            for _ in 0..n {
                let v = g
                    .vertices()
                    .filter(|&v| !gone[v])
                    .min_by_key(|&v| (deg[v], v))
                    .unwrap();
                gone[v] = true;
                order.push(v);
                for &w in g.neighbours(v) {
                    if !gone[w] {
                        deg[w] -= 1;
                    }
                }
            }
            order.reverse();
            match crate::brooks::greedy_colour(g, &order, 4) {
                Ok(ColourOutcome::Coloured { colouring }) => Ok((4, colouring)),
                _ => Err(MorassError::ClassViolation(
                    "degeneracy greedy exceeded four colours".into(),
                )),
            }
        }
    }
}

/// 3-colouring for 3-connected graphs with maximal local connectivity 3.
/// Such graphs have maximal local edge-connectivity 3; a violation of that
/// implication is reported as an internal-invariant error.
pub fn colour3_3conn_mlc3(g: &Graph) -> Result<ColourOutcome, MorassError> {
    if !connectivity::is_k_connected(g, 3) {
        return Err(MorassError::NotThreeConnected);
    }
    for x in g.vertices() {
        for y in (x + 1)..g.n() {
            if connectivity::kappa_at_most(g, x, y, 4) > 3 {
                return Err(MorassError::NotMlc3(x, y));
            }
        }
    }
    for x in g.vertices() {
        for y in (x + 1)..g.n() {
            if connectivity::lambda_at_most(g, x, y, 4) > 3 {
                return Err(MorassError::EdgeConnectivityInconsistent(x, y));
            }
        }
    }
    mlec::colour_kconn_mleck(g, 3, MlecOptions::trusted())
        .map_err(|e| MorassError::ClassViolation(format!("{e}")))
}
