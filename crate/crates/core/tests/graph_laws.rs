mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;
use travgraph_core::{Arc, MultiTraversalRelation, VertexId};

fn arc_multiset(g: &MultiTraversalRelation) -> BTreeMap<Arc, u32> {
    g.arcs().collect()
}

proptest! {
    #[test]
    fn unit_subgraphs_partition_the_relation(g in common::instance(9, 3)) {
        let mut rebuilt = BTreeMap::new();
        for s in g.unit_subgraphs() {
            prop_assert!(!s.leaves.is_empty());
            for (&leaf, &w) in &s.leaves {
                prop_assert!(rebuilt.insert(Arc::new(s.root, leaf), w).is_none());
            }
        }
        prop_assert_eq!(rebuilt, arc_multiset(&g));
    }

    #[test]
    fn visiting_sets_partition_the_relation(g in common::instance(9, 3)) {
        let mut rebuilt = BTreeMap::new();
        for s in g.visiting_sets() {
            prop_assert!(!s.sources.is_empty());
            for (&src, &w) in &s.sources {
                prop_assert!(rebuilt.insert(Arc::new(src, s.head), w).is_none());
            }
        }
        prop_assert_eq!(rebuilt, arc_multiset(&g));
    }

    #[test]
    fn unit_weights_stay_unit(g in common::simple_instance(2, 9, 6)) {
        prop_assert!(g.unit_subgraphs().iter().all(|s| s.leaves.values().all(|&w| w == 1)));
        prop_assert!(g.visiting_sets().iter().all(|s| s.sources.values().all(|&w| w == 1)));
    }

    #[test]
    fn classification_ignores_labels(
        (g, perm) in (2u32..9).prop_flat_map(|n| (
            (0usize..6, 1u32..=3, 0.0f64..=1.0, any::<u64>()).prop_map(move |(e, w, p, s)| {
                travgraph_core::generators::random_connected(n, e, w, p, s).unwrap()
            }),
            common::permutation(n),
        ))
    ) {
        let relabeled = g.relabel(|v| VertexId::of(perm[v.get() as usize - 1])).unwrap();
        prop_assert_eq!(relabeled.classify(), g.classify());
        prop_assert_eq!(relabeled.total_multiplicity(), g.total_multiplicity());
    }
}
