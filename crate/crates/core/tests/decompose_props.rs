mod common;

use common::{arb_dense_graph, arb_graph, complete, cycle, fw_diameter, pairs_of};
use ldd_core::decompose::{decompose_diam3, decompose_diam4, decompose_hyper_diam3, decompose_stars, prune_to_diam2};
use ldd_core::extremal::gen_random_hypergraph;
use ldd_core::harness::{bound_formula, verify_hyper_partition, verify_partition, BoundKind};
use ldd_core::{Edge, EdgePartition, Epsilon, Limits};
use proptest::prelude::*;

fn arb_eps() -> impl Strategy<Value = Epsilon> {
    (1u64..=8, 8u64..=64).prop_map(|(a, b)| Epsilon::new(a, b).unwrap())
}

/// Every edge in exactly one of `e0` and the parts.
fn check_exact_partition(g: &ldd_core::Graph, p: &EdgePartition) -> Result<(), TestCaseError> {
    let mut count = vec![0; g.edge_count()];
    for e in p.e0.iter().chain(p.parts.iter().flat_map(|s| s.iter())) {
        count[g.edge_index(e).expect("edge of g")] += 1;
    }
    prop_assert!(count.iter().all(|&c| c == 1));
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn diam3_partitions_verify(g in arb_dense_graph(4, 16, 50), eps in arb_eps()) {
        let p = decompose_diam3(&g, eps).unwrap();
        check_exact_partition(&g, &p)?;
        for s in &p.parts {
            prop_assert!(fw_diameter(&pairs_of(s)).at_most(3));
        }
        let r = verify_partition(&g, &p).unwrap();
        let bound = bound_formula(BoundKind::Diam3Upper, g.vertex_count(), eps).unwrap();
        prop_assert!(BoundKind::Diam3Upper.admits(r.part_count, bound));
        prop_assert!(eps.within_budget(p.e0.len(), g.vertex_count(), 2));
    }

    #[test]
    fn diam4_partitions_verify(g in arb_dense_graph(4, 16, 50), eps in arb_eps()) {
        let p = decompose_diam4(&g, eps).unwrap();
        check_exact_partition(&g, &p)?;
        for s in &p.parts {
            prop_assert!(fw_diameter(&pairs_of(s)).at_most(4));
        }
        let r = verify_partition(&g, &p).unwrap();
        let bound = bound_formula(BoundKind::Diam4Upper, g.vertex_count(), eps).unwrap();
        prop_assert!(BoundKind::Diam4Upper.admits(r.part_count, bound));
        prop_assert_eq!(p.fallback_parts, 0);
    }

    #[test]
    fn smaller_epsilon_extends_the_same_run(g in arb_graph(14), a in arb_eps(), b in arb_eps()) {
        let (lo, hi) = (a.min(b), a.max(b));
        for run in [decompose_diam3, decompose_diam4] {
            let fine = run(&g, lo).unwrap();
            let coarse = run(&g, hi).unwrap();
            prop_assert!(fine.e0.len() <= coarse.e0.len());
            prop_assert!(coarse.parts.len() <= fine.parts.len());
            prop_assert_eq!(&fine.parts[..coarse.parts.len()], &coarse.parts[..]);
        }
    }

    #[test]
    fn decompositions_are_deterministic(g in arb_graph(14), eps in arb_eps()) {
        prop_assert_eq!(decompose_diam3(&g, eps).unwrap(), decompose_diam3(&g, eps).unwrap());
        prop_assert_eq!(decompose_diam4(&g, eps).unwrap(), decompose_diam4(&g, eps).unwrap());
    }

    #[test]
    fn prune_core_has_diameter_two(g in arb_graph(14)) {
        let p = prune_to_diam2(&g);
        check_exact_partition(&g, &p)?;
        prop_assert!(p.parts.len() <= 1);
        if let Some(core) = p.parts.first() {
            prop_assert!(fw_diameter(&pairs_of(core)).at_most(2));
        }
        let n = g.vertex_count();
        prop_assert!(4 * p.e0.len() < n * n);
        verify_partition(&g, &p).unwrap();
    }

    #[test]
    fn stars_cover_every_edge_once(g in arb_graph(14)) {
        let p = decompose_stars(&g);
        check_exact_partition(&g, &p)?;
        prop_assert!(p.e0.is_empty());
        let r = verify_partition(&g, &p).unwrap();
        prop_assert!(r.within_bound);
    }

    #[test]
    fn hyper_partitions_verify(seed in any::<u64>(), n in 5usize..10, eps in (1u64..4).prop_map(|d| Epsilon::new(1, 256 * d).unwrap())) {
        let h = gen_random_hypergraph(3, n, 0.5, seed, &Limits::default()).unwrap();
        let p = decompose_hyper_diam3(&h, eps).unwrap();
        let r = verify_hyper_partition(&h, &p).unwrap();
        prop_assert!(eps.within_budget(r.e0_size, n, 3));
        prop_assert!(r.diameters.iter().all(|d| d.is_some_and(|d| d <= 3)));
        if !eps.within_budget(h.edge_count(), n, 3) {
            prop_assert!(r.part_count >= 1);
        }
    }
}

#[test]
fn hyper_partition_separates_components() {
    let edges = vec![
        vec![0, 1, 2],
        vec![1, 2, 3],
        vec![4, 5, 6],
        vec![5, 6, 7],
        vec![6, 7, 8],
    ];
    let h = ldd_core::Hypergraph::from_edges(3, 9, edges).unwrap();
    let eps = Epsilon::new(1, 1000).unwrap();
    let p = decompose_hyper_diam3(&h, eps).unwrap();
    assert_eq!(p.parts.iter().map(|s| s.len()).collect::<Vec<_>>(), vec![3, 2]);
    assert!(p.e0.is_empty());
    verify_hyper_partition(&h, &p).unwrap();
}

#[test]
fn small_examples() {
    let eps = Epsilon::new(1, 100).unwrap();
    let p = decompose_diam3(&cycle(6), eps).unwrap();
    assert_eq!(p.parts.len(), 1);
    assert!(p.e0.is_empty());
    let p = decompose_diam4(&complete(6), eps).unwrap();
    assert_eq!(p.parts, vec![complete(6).all_edges()]);
    let star = ldd_core::Graph::from_edges(6, (1..6).map(|i| (0, i))).unwrap();
    let pruned = prune_to_diam2(&star);
    assert_eq!(pruned.e0.len(), 3);
    assert_eq!(pruned.parts[0].as_slice(), &[Edge::new(0, 4), Edge::new(0, 5)]);
}
