mod common;

use common::{arb_graph, floyd, fw_diameter, graph_pairs, pairs_of};
use ldd_core::decompose::best_pair_by_p3;
use ldd_core::graph::{
    ball_subgraph, bfs_distances, bipartite_diam3_check, blow_up, diameter_of_edge_set, graph_diameter,
    peel_min_degree, walk_subgraph,
};
use ldd_core::{Dist, Graph};
use num_rational::Ratio;
use proptest::prelude::*;

/// Paths `u-a-b-v` on four distinct vertices, by brute force.
fn p3_count(g: &Graph, u: usize, v: usize) -> u64 {
    let n = g.vertex_count();
    let mut count = 0;
    for a in 0..n {
        for b in 0..n {
            let distinct = a != b && a != u && a != v && b != u && b != v;
            if distinct && g.has_edge(u, a) && g.has_edge(a, b) && g.has_edge(b, v) {
                count += 1;
            }
        }
    }
    count
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn bfs_matches_floyd(g in arb_graph(12)) {
        let d = floyd(g.vertex_count(), &graph_pairs(&g));
        for v in 0..g.vertex_count() {
            let bfs = bfs_distances(&g, v).unwrap();
            prop_assert_eq!(bfs.raw(), &d[v][..]);
        }
    }

    #[test]
    fn edge_set_diameter_matches_floyd(g in arb_graph(12), mask in any::<u64>()) {
        let s = g.edges().iter().enumerate().filter(|(i, _)| mask >> (i % 64) & 1 == 1).map(|(_, e)| *e).collect();
        prop_assert_eq!(diameter_of_edge_set(&g, &s).unwrap(), fw_diameter(&pairs_of(&s)));
    }

    #[test]
    fn walk_subgraph_membership_and_diameter(g in arb_graph(12), v in 0usize..12, w in 0usize..12, d in 0usize..6) {
        let n = g.vertex_count();
        let (v, w) = (v % n, w % n);
        let dist = floyd(n, &graph_pairs(&g));
        match walk_subgraph(&g, v, w, d) {
            Err(_) => prop_assert!(dist[v][w].is_none_or(|x| x > d)),
            Ok(sub) => {
                for u in 0..n {
                    let on_walk = matches!((dist[v][u], dist[u][w]), (Some(a), Some(b)) if a + b <= d);
                    prop_assert_eq!(sub.vertices.contains(&u), on_walk);
                }
                prop_assert!(diameter_of_edge_set(&g, &sub.edges).unwrap().at_most(d));
                for e in g.edges() {
                    let (a, b) = e.endpoints();
                    let inside = sub.vertices.contains(&a) && sub.vertices.contains(&b);
                    prop_assert_eq!(sub.edges.contains(e), inside);
                }
            }
        }
    }

    #[test]
    fn ball_is_walk_from_center_to_itself(g in arb_graph(12), v in 0usize..12, r in 0usize..4) {
        let v = v % g.vertex_count();
        prop_assert_eq!(ball_subgraph(&g, v, r).unwrap(), walk_subgraph(&g, v, v, 2 * r).unwrap());
    }

    #[test]
    fn peeled_subgraph_is_maximal(g in arb_graph(12), num in 0u64..12, den in 1u64..4) {
        let theta = Ratio::new(num, den);
        let sub = peel_min_degree(&g, theta);
        let in_sub = |v: usize| sub.vertices.contains(&v);
        for &v in &sub.vertices {
            let deg = g.neighbors(v).iter().filter(|&&w| in_sub(w)).count() as u64;
            prop_assert!(Ratio::from_integer(deg) > theta);
        }
        // brute force: every induced subgraph of min degree > theta lies inside the survivors
        let n = g.vertex_count();
        for mask in 1u32..(1 << n) {
            let inside = |v: usize| mask >> v & 1 == 1;
            let ok = (0..n).filter(|&v| inside(v)).all(|v| {
                Ratio::from_integer(g.neighbors(v).iter().filter(|&&w| inside(w)).count() as u64) > theta
            });
            if ok {
                prop_assert!((0..n).filter(|&v| inside(v)).all(in_sub));
            }
        }
    }

    #[test]
    fn bipartite_check_agrees_with_diameter(n in 3usize..10, split in 1usize..9, bits in any::<u64>()) {
        let split = 1 + split % (n - 1);
        let a: Vec<usize> = (0..split).collect();
        let b: Vec<usize> = (split..n).collect();
        let pairs: Vec<(usize, usize)> = a
            .iter()
            .flat_map(|&x| b.iter().map(move |&y| (x, y)))
            .enumerate()
            .filter(|(i, _)| bits >> (i % 64) & 1 == 1)
            .map(|(_, p)| p)
            .collect();
        let g = Graph::from_edges(n, pairs).unwrap();
        prop_assert_eq!(bipartite_diam3_check(&g, &a, &b).unwrap(), graph_diameter(&g).at_most(3));
    }

    #[test]
    fn best_pair_matches_brute_force(g in arb_graph(9)) {
        let n = g.vertex_count();
        let mut best: Option<(u64, usize, usize)> = None;
        for u in 0..n {
            for v in u + 1..n {
                let c = p3_count(&g, u, v);
                if c > 0 && best.is_none_or(|(b, _, _)| c > b) {
                    best = Some((c, u, v));
                }
            }
        }
        let got = best_pair_by_p3(&g).map(|s| (s.paths, s.u, s.v));
        prop_assert_eq!(got, best);
    }

    #[test]
    fn blow_up_structure(g in arb_graph(7), r in 1usize..4) {
        let big = blow_up(&g, r).unwrap();
        prop_assert_eq!(big.vertex_count(), g.vertex_count() * r);
        prop_assert_eq!(big.edge_count(), g.edge_count() * r * r);
        for x in 0..big.vertex_count() {
            for y in 0..big.vertex_count() {
                prop_assert_eq!(big.has_edge(x, y), g.has_edge(x / r, y / r));
            }
        }
    }
}

#[test]
fn empty_and_disconnected_edge_sets() {
    let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    assert_eq!(diameter_of_edge_set(&g, &Default::default()).unwrap(), Dist::Finite(0));
    assert_eq!(diameter_of_edge_set(&g, &g.all_edges()).unwrap(), Dist::Infinite);
}
