//! Named fixture graphs: the figure graphs referenced by the test suite and
//! a few standard small graphs.

use crate::graph::Graph;

/// The 8-vertex graph with global connectivity 4, maximal local
/// connectivity 4 and maximal local edge-connectivity 5. Vertex order:
/// x, q, z1, z2, z3, z4, p, y.
pub fn fig3() -> Graph {
    let (x, q, z1, z2, z3, z4, p, y) = (0, 1, 2, 3, 4, 5, 6, 7);
    Graph::from_edges(
        8,
        &[
            (x, q),
            (x, z1),
            (x, z2),
            (x, z3),
            (x, z4),
            (z1, q),
            (z2, q),
            (z4, q),
            (z2, z3),
            (z1, p),
            (z3, p),
            (z4, p),
            (y, p),
            (y, z1),
            (y, z2),
            (y, z3),
            (y, z4),
        ],
    )
    .unwrap()
}

/// The pair of degree-5 vertices of `fig3` attaining λ = 5.
pub fn fig3_xy() -> (usize, usize) {
    (0, 7)
}

/// Petersen graph: outer cycle 0..5, inner pentagram 5..10.
pub fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    g
}

/// Triangular prism C3 × K2.
pub fn prism() -> Graph {
    Graph::from_edges(
        6,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .unwrap()
}

/// The 3-cube graph Q3.
pub fn cube_q3() -> Graph {
    let mut g = Graph::empty(8);
    for u in 0..8usize {
        for b in 0..3 {
            let v = u ^ (1 << b);
            if u < v {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Star K_{1,leaves} with the centre at 0.
pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::empty(leaves + 1);
    for v in 1..=leaves {
        g.add_edge(0, v);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig3_shape() {
        let g = fig3();
        assert_eq!(g.n(), 8);
        assert_eq!(g.m(), 17);
        let (x, y) = fig3_xy();
        assert_eq!(g.degree(x), 5);
        assert_eq!(g.degree(y), 5);
        assert!(!g.has_edge(x, y));
    }

    #[test]
    fn petersen_is_cubic() {
        let g = petersen();
        assert_eq!(g.n(), 10);
        assert_eq!(g.m(), 15);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
    }
}
