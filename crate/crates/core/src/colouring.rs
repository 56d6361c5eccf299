//! Colourings, outcomes and the proper-colouring checker.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::listfpt::PeelCertificate;
use crate::morass::MorassCertificate;

/// A (possibly partial) assignment of colours `1..=k` to vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Colouring {
    k: usize,
    slots: Vec<Option<usize>>,
}

impl Colouring {
    pub fn new(n: usize, k: usize) -> Self {
        Colouring {
            k,
            slots: vec![None; n],
        }
    }

    /// Total colouring from a dense vector of colours in `1..=k`.
    pub fn from_vec(k: usize, colours: Vec<usize>) -> Self {
        Colouring {
            k,
            slots: colours.into_iter().map(Some).collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.slots.len()
    }

    pub fn get(&self, v: Vertex) -> Option<usize> {
        self.slots[v]
    }

    pub fn set(&mut self, v: Vertex, colour: usize) {
        self.slots[v] = Some(colour);
    }

    pub fn unset(&mut self, v: Vertex) {
        self.slots[v] = None;
    }

    pub fn is_total(&self) -> bool {
        self.slots.iter().all(Option::is_some)
    }

    /// Distinct colours used on the given vertices.
    pub fn image(&self, vs: &[Vertex]) -> Vec<usize> {
        let mut out: Vec<usize> = vs.iter().filter_map(|&v| self.slots[v]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn colours_used(&self) -> usize {
        let mut seen = vec![false; self.k + 1];
        let mut count = 0;
        for c in self.slots.iter().flatten() {
            if !seen[*c] {
                seen[*c] = true;
                count += 1;
            }
        }
        count
    }

    /// Applies a permutation of `{1..k}` given as `perm[c-1] = σ(c)`.
    pub fn permuted(&self, perm: &[usize]) -> Colouring {
        Colouring {
            k: self.k,
            slots: self.slots.iter().map(|s| s.map(|c| perm[c - 1])).collect(),
        }
    }

    pub fn as_slots(&self) -> &[Option<usize>] {
        &self.slots
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColouringViolation {
    #[error("vertex {0} has no colour")]
    NotTotal(Vertex),
    #[error("vertex {vertex} has colour {colour} outside 1..={k}")]
    OutOfRange {
        vertex: Vertex,
        colour: usize,
        k: usize,
    },
    #[error("edge ({u}, {v}) is monochromatic with colour {colour}")]
    MonochromaticEdge { u: Vertex, v: Vertex, colour: usize },
}

/// Checks that `c` is a total proper colouring of `g` with colours in
/// `1..=c.k()`. On failure reports the first violation in vertex order.
pub fn verify_colouring(g: &Graph, c: &Colouring) -> Result<(), ColouringViolation> {
    assert_eq!(g.n(), c.n(), "colouring domain mismatch");
    for v in g.vertices() {
        match c.get(v) {
            None => return Err(ColouringViolation::NotTotal(v)),
            Some(col) if col == 0 || col > c.k() => {
                return Err(ColouringViolation::OutOfRange {
                    vertex: v,
                    colour: col,
                    k: c.k(),
                })
            }
            _ => {}
        }
    }
    for (u, v) in g.edges() {
        if c.get(u) == c.get(v) {
            return Err(ColouringViolation::MonochromaticEdge {
                u,
                v,
                colour: c.get(u).unwrap(),
            });
        }
    }
    Ok(())
}

pub fn is_proper_colouring(g: &Graph, c: &Colouring) -> bool {
    verify_colouring(g, c).is_ok()
}

/// Witness detail attached to an `Infeasible` obstruction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Infeasibility {
    /// Greedy ran out of colours at this vertex.
    StuckVertex { vertex: Vertex },
    /// A vertex with an empty colour list.
    EmptyList { vertex: Vertex },
    /// Gallai-tree peel ended in an all-lists-equal terminal block.
    UniformPeel { certificate: PeelCertificate },
    /// Every canonical colouring of the high-degree core was exhausted.
    Exhausted,
}

/// Structured negative result of a colouring algorithm.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Obstruction {
    /// The graph is the complete graph on k+1 vertices.
    Complete,
    /// The graph is an odd cycle (k = 2 routes only).
    OddCycle,
    /// The graph is an odd wheel (k = 3 only).
    OddWheel,
    /// A block of the graph is a wheel morass; the certificate replays to
    /// the induced subgraph on `vertices` (relabelled in sorted order).
    MorassBlock {
        vertices: Vec<Vertex>,
        certificate: MorassCertificate,
    },
    Infeasible {
        witness: Infeasibility,
    },
}

/// Either a proper colouring or a structured obstruction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ColourOutcome {
    Coloured { colouring: Colouring },
    Obstructed { obstruction: Obstruction },
}

impl ColourOutcome {
    pub fn coloured(c: Colouring) -> Self {
        ColourOutcome::Coloured { colouring: c }
    }

    pub fn obstructed(o: Obstruction) -> Self {
        ColourOutcome::Obstructed { obstruction: o }
    }

    pub fn is_coloured(&self) -> bool {
        matches!(self, ColourOutcome::Coloured { .. })
    }

    pub fn colouring(&self) -> Option<&Colouring> {
        match self {
            ColourOutcome::Coloured { colouring } => Some(colouring),
            _ => None,
        }
    }

    pub fn obstruction(&self) -> Option<&Obstruction> {
        match self {
            ColourOutcome::Obstructed { obstruction } => Some(obstruction),
            _ => None,
        }
    }
}
