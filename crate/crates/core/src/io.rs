//! Text formats: edge lists with labels, DIMACS .col, colouring files,
//! list-assignment files and hypergraph files.

use std::collections::HashMap;

use thiserror::Error;

use crate::colouring::Colouring;
use crate::gadgets::Hypergraph;
use crate::graph::Graph;
use crate::listfpt::ListAssignment;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IoError {
    #[error("line {0}: self-loop on '{1}'")]
    Loop(usize, String),
    #[error("line {0}: expected {1}")]
    Malformed(usize, &'static str),
    #[error("line {0}: unknown vertex label '{1}'")]
    UnknownLabel(usize, String),
    #[error("line {0}: bad number '{1}'")]
    BadNumber(usize, String),
    #[error("DIMACS header missing")]
    MissingHeader,
    #[error("line {0}: vertex {1} outside 1..={2}")]
    DimacsRange(usize, usize, usize),
}

struct Interner {
    ids: HashMap<String, usize>,
    labels: Vec<String>,
}

impl Interner {
    fn new() -> Self {
        Interner {
            ids: HashMap::new(),
            labels: Vec::new(),
        }
    }

    fn intern(&mut self, label: &str) -> usize {
        if let Some(&id) = self.ids.get(label) {
            return id;
        }
        let id = self.labels.len();
        self.ids.insert(label.to_string(), id);
        self.labels.push(label.to_string());
        id
    }
}

/// Edge-list format: '#' comment lines, "v <label>" vertex declarations,
/// "<label> <label>" edges. Loops are rejected; parallel edges are
/// deduplicated with a warning.
pub fn parse_edge_list(text: &str) -> Result<(Graph, Vec<String>), IoError> {
    let mut interner = Interner::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut warnings = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["v", label] => {
                interner.intern(label);
            }
            [a, b] => {
                if a == b {
                    return Err(IoError::Loop(lineno + 1, a.to_string()));
                }
                let u = interner.intern(a);
                let v = interner.intern(b);
                let e = (u.min(v), u.max(v));
                if edges.contains(&e) {
                    warnings.push(format!(
                        "line {}: duplicate edge {} {} ignored",
                        lineno + 1,
                        a,
                        b
                    ));
                } else {
                    edges.push(e);
                }
            }
            _ => return Err(IoError::Malformed(lineno + 1, "two labels or 'v <label>'")),
        }
    }
    let mut g = Graph::from_edges(interner.labels.len(), &edges)
        .expect("loops rejected and labels interned in range");
    g.labels = Some(interner.labels);
    Ok((g, warnings))
}

pub fn write_edge_list(g: &Graph) -> String {
    // declare every vertex up front so identifiers survive a round trip
    // (certificates and reduction maps refer to them)
    let mut out = String::new();
    out.push_str(&format!("# n={} m={}\n", g.n(), g.m()));
    for v in g.vertices() {
        out.push_str(&format!("v {}\n", g.label(v)));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", g.label(u), g.label(v)));
    }
    out
}

/// DIMACS .col: "c" comments, one "p edge <n> <m>" header, "e <u> <v>"
/// edges with 1-based vertices.
pub fn parse_dimacs(text: &str) -> Result<(Graph, Vec<String>), IoError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut warnings = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["p", "edge", ns, _ms] => {
                n = Some(
                    ns.parse()
                        .map_err(|_| IoError::BadNumber(lineno + 1, ns.to_string()))?,
                );
            }
            ["e", a, b] => {
                let n = n.ok_or(IoError::MissingHeader)?;
                let u: usize = a
                    .parse()
                    .map_err(|_| IoError::BadNumber(lineno + 1, a.to_string()))?;
                let v: usize = b
                    .parse()
                    .map_err(|_| IoError::BadNumber(lineno + 1, b.to_string()))?;
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(IoError::DimacsRange(lineno + 1, w, n));
                    }
                }
                if u == v {
                    return Err(IoError::Loop(lineno + 1, a.to_string()));
                }
                let e = (u.min(v) - 1, u.max(v) - 1);
                if edges.contains(&e) {
                    warnings.push(format!(
                        "line {}: duplicate edge e {u} {v} ignored",
                        lineno + 1
                    ));
                } else {
                    edges.push(e);
                }
            }
            _ => {
                return Err(IoError::Malformed(
                    lineno + 1,
                    "'c ...', 'p edge n m' or 'e u v'",
                ))
            }
        }
    }
    let n = n.ok_or(IoError::MissingHeader)?;
    let mut g = Graph::from_edges(n, &edges).expect("range-checked above");
    g.labels = Some((1..=n).map(|v| v.to_string()).collect());
    Ok((g, warnings))
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

fn label_index(g: &Graph) -> HashMap<String, usize> {
    g.vertices().map(|v| (g.label(v), v)).collect()
}

/// Colouring file: one "<label> <colour>" pair per line. The palette size
/// is the largest colour unless `k` is given.
pub fn parse_colouring(text: &str, g: &Graph, k: Option<usize>) -> Result<Colouring, IoError> {
    let idx = label_index(g);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [label, colour] => {
                let &v = idx
                    .get(*label)
                    .ok_or_else(|| IoError::UnknownLabel(lineno + 1, label.to_string()))?;
                let c: usize = colour
                    .parse()
                    .map_err(|_| IoError::BadNumber(lineno + 1, colour.to_string()))?;
                pairs.push((v, c));
            }
            _ => return Err(IoError::Malformed(lineno + 1, "'<label> <colour>'")),
        }
    }
    let k = k.unwrap_or_else(|| pairs.iter().map(|&(_, c)| c).max().unwrap_or(0));
    let mut out = Colouring::new(g.n(), k);
    for (v, c) in pairs {
        out.set(v, c);
    }
    Ok(out)
}

pub fn write_colouring(g: &Graph, c: &Colouring) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        if let Some(col) = c.get(v) {
            out.push_str(&format!("{} {}\n", g.label(v), col));
        }
    }
    out
}

/// List-assignment file: one "<label>: c1 c2 c3" line per vertex; vertices
/// missing from the file get empty lists.
pub fn parse_lists(text: &str, g: &Graph) -> Result<ListAssignment, IoError> {
    let idx = label_index(g);
    let mut lists = vec![Vec::new(); g.n()];
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (head, tail) = line
            .split_once(':')
            .ok_or(IoError::Malformed(lineno + 1, "'<label>: c1 c2 ...'"))?;
        let label = head.trim();
        let &v = idx
            .get(label)
            .ok_or_else(|| IoError::UnknownLabel(lineno + 1, label.to_string()))?;
        let mut cs = Vec::new();
        for tok in tail.split_whitespace() {
            cs.push(
                tok.parse()
                    .map_err(|_| IoError::BadNumber(lineno + 1, tok.to_string()))?,
            );
        }
        lists[v] = cs;
    }
    Ok(ListAssignment::new(lists))
}

/// Hypergraph file: one hyperedge per line as whitespace-separated labels;
/// "v <label>" lines declare isolated vertices.
pub fn parse_hypergraph(text: &str) -> Result<(Hypergraph, Vec<String>), IoError> {
    let mut interner = Interner::new();
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let warnings = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["v", label] => {
                interner.intern(label);
            }
            labels if !labels.is_empty() => {
                let mut e: Vec<usize> = labels.iter().map(|l| interner.intern(l)).collect();
                e.sort_unstable();
                let before = e.len();
                e.dedup();
                if e.len() != before {
                    return Err(IoError::Malformed(
                        lineno + 1,
                        "distinct labels per hyperedge",
                    ));
                }
                edges.push(e);
            }
            _ => return Err(IoError::Malformed(lineno + 1, "labels or 'v <label>'")),
        }
    }
    let mut h = Hypergraph::new(interner.labels.len(), edges);
    h.labels = Some(interner.labels);
    Ok((h, warnings))
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    let mut in_edge = vec![false; h.n()];
    for e in h.edges() {
        for &v in e {
            in_edge[v] = true;
        }
    }
    for (v, &covered) in in_edge.iter().enumerate() {
        if !covered {
            out.push_str(&format!("v {}\n", h.label(v)));
        }
    }
    for e in h.edges() {
        let labels: Vec<String> = e.iter().map(|&v| h.label(v)).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}
