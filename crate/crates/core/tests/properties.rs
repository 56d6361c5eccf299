//! Cross-module invariant batteries over random and exhaustive corpora.

use locol::colouring::is_proper_colouring;
use locol::connectivity::{self, classify};
use locol::gadgets;
use locol::graph::{blocks, search_ordering, structural_predicates, Graph};
use locol::listfpt::{self, ListAssignment};
use locol::morass;
use locol::oracle::{self, CutMode, OracleLimits};
use locol::rng::SplitMix64;
use locol::sampler;

fn limits() -> OracleLimits {
    OracleLimits::generous()
}

/// All graphs on n vertices as edge-subset bitmasks.
fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    (0u32..(1 << pairs.len())).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

#[test]
fn blocks_contract_to_a_forest_and_confine_cycles() {
    let mut rng = SplitMix64::new(2024);
    for _ in 0..60 {
        let n = 2 + rng.below(49);
        let g = sampler::random_graph(n, 1, 4, &mut rng);
        let bf = blocks(&g);
        // block-cut incidence graph is a forest: vertices are blocks and
        // cut vertices, edges join each block to its cut vertices
        let nb = bf.blocks.len();
        let nc = bf.cut_vertices.len();
        let mut forest_edges = 0;
        for inc in &bf.incidence {
            forest_edges += inc.len();
        }
        // a forest has at most (vertices - components) edges; equality with
        // acyclicity follows from counting per component
        assert!(forest_edges < nb + nc || (nb + nc == 0 && forest_edges == 0));
        // every edge of g lies in exactly one block
        let mut seen = std::collections::HashSet::new();
        for b in &bf.blocks {
            let (sub, map) = g.induced(b);
            for (u, v) in sub.edges() {
                assert!(seen.insert((map[u], map[v])), "edge in two blocks");
            }
        }
        assert_eq!(seen.len(), g.m());
        // a fundamental cycle of any non-tree edge stays inside one block:
        // equivalent to the statement above plus forest contraction, checked
        // via: any two adjacent vertices share exactly one block
        for (u, v) in g.edges() {
            let shared: Vec<usize> = bf
                .blocks
                .iter()
                .enumerate()
                .filter(|(_, b)| b.binary_search(&u).is_ok() && b.binary_search(&v).is_ok())
                .map(|(i, _)| i)
                .collect();
            assert_eq!(shared.len(), 1);
        }
    }
}

#[test]
fn search_ordering_permutation_and_prefix() {
    let mut rng = SplitMix64::new(7);
    for _ in 0..80 {
        let n = 1 + rng.below(30);
        let g = sampler::random_connected_graph(n, rng.below(12), &mut rng);
        let start = rng.below(n);
        let ord = search_ordering(&g, start).unwrap();
        assert_eq!(ord[0], start);
        let mut sorted = ord.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..n).collect::<Vec<_>>());
        for i in 1..ord.len() {
            assert!(ord[..i].iter().any(|&z| g.has_edge(z, ord[i])));
        }
    }
}

#[test]
fn reverse_search_greedy_never_needs_more_than_max_degree_plus_one() {
    let mut rng = SplitMix64::new(11);
    for _ in 0..200 {
        let n = 2 + rng.below(20);
        let g = sampler::random_connected_graph(n, rng.below(14), &mut rng);
        let mut ord = search_ordering(&g, 0).unwrap();
        ord.reverse();
        let k = g.max_degree() + 1;
        let out = locol::brooks::greedy_colour(&g, &ord, k).unwrap();
        let c = out
            .colouring()
            .expect("max degree + 1 colours always extend");
        assert!(is_proper_colouring(&g, c));
    }
}

#[test]
fn structural_predicates_match_definition_scans() {
    // independent second route: direct definition scans
    fn scan(g: &Graph) -> (bool, bool, bool, Option<usize>) {
        let n = g.n();
        let complete = (0..n).all(|u| ((u + 1)..n).all(|v| g.has_edge(u, v)));
        let odd_cycle =
            n >= 3 && n % 2 == 1 && g.vertices().all(|v| g.degree(v) == 2) && g.is_connected();
        let mut odd_wheel = false;
        for hub in 0..n {
            if g.degree(hub) != n.saturating_sub(1) || n < 4 || n % 2 == 1 {
                continue;
            }
            let (rim, _) = g.remove_vertices(&[hub]);
            if rim.n() >= 3 && rim.vertices().all(|v| rim.degree(v) == 2) && rim.is_connected() {
                odd_wheel = true;
            }
        }
        let dominating = (0..n).find(|&v| g.degree(v) == n - 1);
        (complete, odd_cycle, odd_wheel, dominating)
    }
    // exhaustive through n = 6, dense random sample at n = 7
    for n in 0..=6 {
        for g in all_graphs(n) {
            let flags = structural_predicates(&g);
            let (c, oc, ow, d) = scan(&g);
            assert_eq!(flags.is_complete, c);
            assert_eq!(flags.is_odd_cycle, oc);
            assert_eq!(flags.is_odd_wheel, ow);
            assert_eq!(flags.dominating_vertex, d);
        }
    }
    let mut rng = SplitMix64::new(3);
    let pairs: Vec<(usize, usize)> = (0..7)
        .flat_map(|u| ((u + 1)..7).map(move |v| (u, v)))
        .collect();
    for _ in 0..20000 {
        let mask = rng.next_u64() & ((1 << 21) - 1);
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(7, &edges).unwrap();
        let flags = structural_predicates(&g);
        let (c, oc, ow, d) = scan(&g);
        assert_eq!(
            (
                flags.is_complete,
                flags.is_odd_cycle,
                flags.is_odd_wheel,
                flags.dominating_vertex
            ),
            (c, oc, ow, d)
        );
    }
}

#[test]
fn kappa_lambda_degree_chain_on_random_graphs() {
    let mut rng = SplitMix64::new(500);
    for _ in 0..500 {
        let n = 2 + rng.below(29);
        let g = sampler::random_graph(n, 1 + rng.below(3), 5, &mut rng);
        // sample a handful of pairs per graph
        for _ in 0..6 {
            let x = rng.below(n);
            let y = rng.below(n);
            if x == y {
                continue;
            }
            let kap = connectivity::kappa_at_most(&g, x, y, usize::MAX);
            let lam = connectivity::lambda_at_most(&g, x, y, usize::MAX);
            assert!(kap <= lam, "kappa {kap} > lambda {lam}");
            assert!(lam <= g.degree(x).min(g.degree(y)));
        }
    }
}

#[test]
fn mader_adjacent_pair_attains_min_degree() {
    let mut rng = SplitMix64::new(501);
    let mut done = 0;
    while done < 500 {
        let n = 2 + rng.below(16);
        let g = sampler::random_graph(n, 1 + rng.below(3), 4, &mut rng);
        if g.m() == 0 {
            continue;
        }
        let found = g.edges().into_iter().any(|(x, y)| {
            let kap = connectivity::kappa_at_most(&g, x, y, usize::MAX);
            kap == g.degree(x).min(g.degree(y))
        });
        assert!(found, "no adjacent pair attains its degree bound");
        done += 1;
    }
}

#[test]
fn menger_duality_flow_equals_brute_cut() {
    // exhaustive tiny graphs plus random graphs up to eight vertices
    let lim = OracleLimits {
        max_vertices: 24,
        max_cut_vertices: 12,
        max_cut_edges: 24,
    };
    let check = |g: &Graph, x: usize, y: usize| {
        let (lam, cut) = connectivity::local_edge_connectivity(g, x, y).unwrap();
        let brute_lam = oracle::brute_min_cut(g, x, y, CutMode::Edge, &lim).unwrap();
        assert_eq!(lam, brute_lam);
        assert_eq!(cut.edges.len(), lam);
        if !g.has_edge(x, y) {
            let (kap, sep) = connectivity::local_vertex_connectivity(g, x, y).unwrap();
            let brute_kap = oracle::brute_min_cut(g, x, y, CutMode::Vertex, &lim).unwrap();
            assert_eq!(kap, brute_kap);
            assert_eq!(sep.unwrap().separator.len(), kap);
        }
    };
    for n in 2..=4 {
        for g in all_graphs(n) {
            for x in 0..n {
                for y in (x + 1)..n {
                    check(&g, x, y);
                }
            }
        }
    }
    let mut rng = SplitMix64::new(8);
    for _ in 0..300 {
        let n = 5 + rng.below(4);
        let g = sampler::random_graph(n, 2, 5, &mut rng);
        if g.m() > 20 {
            continue;
        }
        for _ in 0..4 {
            let x = rng.below(n);
            let y = rng.below(n);
            if x != y {
                check(&g, x, y);
            }
        }
    }
}

#[test]
fn three_connected_mlc3_implies_mlec3() {
    // for 3-connected graphs, maximal local connectivity 3 forces maximal
    // local edge-connectivity 3
    let mut instances: Vec<Graph> = vec![
        locol::fixtures::petersen(),
        locol::fixtures::prism(),
        locol::fixtures::cube_q3(),
        morass::odd_wheel(5).unwrap(),
        morass::odd_wheel(7).unwrap(),
        morass::odd_wheel(9).unwrap(),
        gadgets::grid_family(4).unwrap(),
        gadgets::grid_family(5).unwrap(),
    ];
    let mut rng = SplitMix64::new(77);
    let mut added = 0;
    while added < 25 {
        let n = 8 + 2 * rng.below(4);
        let g = sampler::random_regular(n, 3, &mut rng);
        if connectivity::is_k_connected(&g, 3) {
            instances.push(g);
            added += 1;
        }
    }
    let mut checked = 0;
    for g in &instances {
        let report = classify(g, 3).unwrap();
        if report.c2 && report.global_connectivity >= 3 {
            assert!(
                report.c1,
                "local connectivity bound without the edge bound: {report:?}"
            );
            checked += 1;
        }
    }
    assert!(checked >= 25, "only {checked} three-connected instances");
}

#[test]
fn class_chain_monotone_on_random_graphs() {
    let mut rng = SplitMix64::new(21);
    for _ in 0..120 {
        let n = 2 + rng.below(10);
        let g = sampler::random_graph(n, 1 + rng.below(3), 4, &mut rng);
        for k in 1..=4 {
            let r = classify(&g, k).unwrap();
            assert!(!r.c0 || r.c1);
            assert!(!r.c1 || r.c2);
            assert!(!r.c2 || r.c3);
            for (flag, hat) in [
                (r.c0, r.c0_hat),
                (r.c1, r.c1_hat),
                (r.c2, r.c2_hat),
                (r.c3, r.c3_hat),
            ] {
                assert!(!hat || (flag && r.global_connectivity >= k));
            }
        }
    }
}

#[test]
fn brooks_agrees_with_oracle_on_subcubic_graphs() {
    // exhaustive through n = 6; seeded cubic samples at n = 7, 8
    for n in 2..=6 {
        for g in all_graphs(n) {
            if g.max_degree() > 3 || !g.is_connected() {
                continue;
            }
            let out = locol::brooks::brooks_colour(&g, 3).unwrap();
            let feasible = oracle::brute_k_colourable(&g, 3, &limits())
                .unwrap()
                .is_some();
            match out.colouring() {
                Some(c) => {
                    assert!(feasible);
                    assert!(is_proper_colouring(&g, c));
                }
                None => assert!(!feasible, "obstruction on a colourable graph"),
            }
        }
    }
    let mut rng = SplitMix64::new(31);
    let mut done = 0;
    while done < 300 {
        let n = if rng.chance(1, 2) { 8 } else { 7 };
        let g = if n == 8 {
            sampler::random_regular(8, 3, &mut rng)
        } else {
            sampler::random_connected_graph(7, rng.below(5), &mut rng)
        };
        if g.max_degree() > 3 || !g.is_connected() {
            continue;
        }
        let out = locol::brooks::brooks_colour(&g, 3).unwrap();
        let feasible = oracle::brute_k_colourable(&g, 3, &limits())
            .unwrap()
            .is_some();
        assert_eq!(out.is_coloured(), feasible);
        if let Some(c) = out.colouring() {
            assert!(is_proper_colouring(&g, c));
        }
        done += 1;
    }
}

#[test]
fn lovasz_on_two_hundred_valid_inputs() {
    let mut rng = SplitMix64::new(41);
    let mut done = 0;
    while done < 200 {
        let n = 8 + 2 * rng.below(4);
        let g = sampler::random_regular(n, 3, &mut rng);
        if !connectivity::is_k_connected(&g, 3) {
            continue;
        }
        let c = locol::brooks::lovasz_colour(&g, 3).unwrap();
        assert!(is_proper_colouring(&g, &c));
        assert!(c.colours_used() <= 3);
        done += 1;
    }
}

#[test]
fn mlec_verifies_class_preservation_in_test_mode() {
    use locol::mlec::{colour_kconn_mleck, MlecOptions};
    let opts = MlecOptions {
        check_preconditions: true,
        verify_steps: true,
    };
    for g in [
        gadgets::grid_family(4).unwrap(),
        gadgets::grid_family(5).unwrap(),
        gadgets::grid_family(6).unwrap(),
    ] {
        let out = colour_kconn_mleck(&g, 3, opts).unwrap();
        assert!(is_proper_colouring(&g, out.colouring().unwrap()));
    }
}

#[test]
fn two_wheel_matching_fixture_leaves_the_class() {
    // two W5 copies joined by a 3-edge matching between rim vertices: the
    // matched graph picks up a λ = 4 pair, so the class check must reject
    // it and the isolating-cut search must refuse to run
    let w5 = morass::odd_wheel(5).unwrap();
    let mut g = Graph::empty(12);
    for (u, v) in w5.edges() {
        g.add_edge(u, v);
        g.add_edge(u + 6, v + 6);
    }
    for i in 0..3 {
        g.add_edge(i, i + 6);
    }
    let report = classify(&g, 3).unwrap();
    assert!(
        !report.c1,
        "matching fixture unexpectedly stayed in the class"
    );
    assert!(matches!(
        locol::mlec::colour_kconn_mleck(&g, 3, locol::mlec::MlecOptions::default()),
        Err(locol::mlec::MlecError::NotMlec { .. })
    ));
}

#[test]
fn optimal_colouring_matches_oracle_chromatic_number() {
    let mut rng = SplitMix64::new(55);
    let mut done = 0;
    while done < 60 {
        let g = compose_c13_instance(6 + rng.below(9), &mut rng);
        if g.n() > 14 {
            continue;
        }
        let (chi, c) = morass::optimal_colouring_mlec3(&g, morass::C13Options::default()).unwrap();
        assert!(chi <= 4);
        assert!(is_proper_colouring(&g, &c));
        assert_eq!(chi, oracle::brute_chromatic(&g, &limits()).unwrap());
        done += 1;
    }
}

/// Glues random blocks from the maximal-local-edge-connectivity-3 family
/// at shared vertices: odd wheels (morass leaves), cycles, cliques of size
/// at most 4, diamonds and small generated morasses.
fn compose_c13_instance(target: usize, rng: &mut SplitMix64) -> Graph {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut n = 1usize;
    while n < target {
        let attach = rng.below(n);
        let style = rng.below(6);
        let block: Vec<(usize, usize)> = match style {
            0 => morass::odd_wheel(3 + 2 * rng.below(3)).unwrap().edges(),
            1 => Graph::cycle(4 + rng.below(4)).edges(),
            2 => Graph::complete(2 + rng.below(3)).edges(),
            3 => Graph::complete(4).remove_edge(0, 1).edges(),
            4 => {
                let (m, _) = morass::random_morass(1, &[3, 3], rng.next_u64()).unwrap();
                m.edges()
            }
            _ => Graph::path(2).edges(),
        };
        let block_n = block.iter().flat_map(|&(a, b)| [a, b]).max().unwrap() + 1;
        // vertex 0 of the block lands on the attachment vertex
        let translate = |v: usize| if v == 0 { attach } else { n + v - 1 };
        for (a, b) in block {
            edges.push((translate(a), translate(b)));
        }
        n += block_n - 1;
    }
    Graph::from_edges(n, &edges).expect("blocks are simple")
}

#[test]
fn degree_choosable_never_fails_on_valid_inputs() {
    let mut rng = SplitMix64::new(61);
    let mut done = 0;
    while done < 500 {
        let n = 4 + rng.below(9);
        let g = sampler::random_connected_graph(n, 1 + rng.below(6), &mut rng);
        if listfpt::is_gallai_tree(&g).unwrap() {
            continue;
        }
        let palette = g.max_degree() + 3;
        let lists: Vec<Vec<usize>> = g
            .vertices()
            .map(|v| {
                let want = g.degree(v) + usize::from(rng.chance(1, 4));
                let mut l = Vec::new();
                while l.len() < want {
                    let c = 1 + rng.below(palette);
                    if !l.contains(&c) {
                        l.push(c);
                    }
                }
                l
            })
            .collect();
        let assignment = ListAssignment::new(lists);
        let c = listfpt::degree_choosable_colour(&g, &assignment).unwrap();
        assert!(is_proper_colouring(&g, &c));
        for v in g.vertices() {
            assert!(assignment.list(v).contains(&c.get(v).unwrap()));
        }
        done += 1;
    }
}

#[test]
fn oracle_and_fpt_cross_check_wheel_criticality() {
    // W5 minus any edge is 3-colourable by both routes
    let g = morass::odd_wheel(5).unwrap();
    for (u, v) in g.edges() {
        let h = g.remove_edge(u, v);
        assert!(oracle::brute_k_colourable(&h, 3, &limits())
            .unwrap()
            .is_some());
        assert!(listfpt::fpt_colour(&h, 3).is_coloured());
    }
    assert!(!listfpt::fpt_colour(&g, 3).is_coloured());
}

#[test]
fn hub_gadget_connectivity_standalone_and_wired() {
    // standalone, each outlet reaches the rest only through its spine
    // vertex, so the gadget itself has a cut vertex; 2-connectivity is a
    // property of reduced graphs, where outlets gain an external edge
    let gg = gadgets::hub_gadget(4).unwrap();
    assert_eq!(connectivity::global_connectivity(&gg.graph).unwrap(), 1);
    let lim = OracleLimits {
        max_cut_vertices: 19,
        ..OracleLimits::default()
    };
    let mut best = usize::MAX;
    for x in gg.graph.vertices() {
        for y in (x + 1)..gg.graph.n() {
            if !gg.graph.has_edge(x, y) {
                best = best
                    .min(oracle::brute_min_cut(&gg.graph, x, y, CutMode::Vertex, &lim).unwrap());
            }
        }
    }
    assert_eq!(best, 1);
    // wiring the outlets into a cycle restores 2-connectedness
    let mut wired = gg.graph.clone();
    for i in 0..gg.outlets.len() {
        let a = gg.outlets[i];
        let b = gg.outlets[(i + 1) % gg.outlets.len()];
        wired.add_edge(a, b);
    }
    assert!(connectivity::is_k_connected(&wired, 2));
}

#[test]
fn decomposition_and_fpt_agree_beyond_oracle_reach() {
    // two independent algorithm paths on instances too big for the oracle:
    // the cut decomposition and the high-degree-core enumeration
    let mut rng = SplitMix64::new(91);
    let mut done = 0;
    while done < 40 {
        let n = 18 + 2 * rng.below(7);
        let g = sampler::random_regular(n, 3, &mut rng);
        if !connectivity::is_k_connected(&g, 3) {
            continue;
        }
        let a =
            locol::mlec::colour_kconn_mleck(&g, 3, locol::mlec::MlecOptions::trusted()).unwrap();
        let b = listfpt::fpt_colour(&g, 3);
        assert_eq!(a.is_coloured(), b.is_coloured(), "algorithms disagree");
        if let Some(c) = a.colouring() {
            assert!(is_proper_colouring(&g, c));
        }
        if let Some(c) = b.colouring() {
            assert!(is_proper_colouring(&g, c));
        }
        done += 1;
    }
    // composed class members against the block recursion
    let mut done = 0;
    while done < 30 {
        let g = compose_c13_instance(18 + rng.below(10), &mut rng);
        if g.n() > 30 {
            continue;
        }
        let a = morass::colour3_mlec3(&g, morass::C13Options::trusted_with(limits())).unwrap();
        let b = listfpt::fpt_colour(&g, 3);
        assert_eq!(
            a.is_coloured(),
            b.is_coloured(),
            "block recursion disagrees with fpt"
        );
        if let Some(c) = a.colouring() {
            assert!(is_proper_colouring(&g, c));
        }
        done += 1;
    }
}

#[test]
fn reduced_k4_pattern_hypergraph_is_uncolourable() {
    let h = gadgets::graph_to_hypergraph(&Graph::complete(4), 3).unwrap();
    assert!(oracle::brute_hypergraph_colourable(&h, 3, &limits())
        .unwrap()
        .is_none());
}
