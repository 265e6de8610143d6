mod common;

use std::collections::{BTreeMap, VecDeque};

use proptest::prelude::*;
use travgraph_core::partition::partition;
use travgraph_core::traversal::obots_search;
use travgraph_core::{MultiTraversalRelation, VertexId};

fn bfs(g: &MultiTraversalRelation, from: VertexId) -> BTreeMap<VertexId, usize> {
    let mut dist = BTreeMap::from([(from, 0)]);
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        let d = dist[&u];
        for (w, _) in g.out_arcs(u) {
            if w != u && !dist.contains_key(&w) {
                dist.insert(w, d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn regions_match_bfs(g in common::simple_instance(2, 50, 40), pick in any::<prop::sample::Index>()) {
        let seed = pick.get(&g.vertices().collect::<Vec<_>>()).to_owned();
        let r = partition(&g, &[seed]).unwrap();
        let oracle = bfs(&g, seed);
        prop_assert!(r.stranded.is_empty());
        for v in g.vertices() {
            prop_assert_eq!(r.region_of(v), Some(oracle[&v]));
        }
    }

    #[test]
    fn arcs_never_skip_a_region(g in common::instance(30, 2)) {
        let seed = g.vertices().next().unwrap();
        let r = partition(&g, &[seed]).unwrap();
        for (a, _) in g.arcs() {
            if let (Some(i), Some(j)) = (r.region_of(a.tail), r.region_of(a.head)) {
                prop_assert!(j <= i + 1, "arc {} jumps from region {} to {}", a, i, j);
            }
        }
        for (k, region) in r.regions.iter().enumerate().skip(1) {
            for &v in region {
                let linked = g.visiting_set(v).sources.keys().any(|&u| r.region_of(u) == Some(k - 1));
                prop_assert!(linked);
            }
        }
    }

    #[test]
    fn distances_are_symmetric(g in common::simple_instance(2, 20, 10)) {
        let vs: Vec<_> = g.vertices().collect();
        let (u, v) = (vs[0], vs[vs.len() - 1]);
        prop_assert_eq!(bfs(&g, u)[&v], bfs(&g, v)[&u]);
    }

    #[test]
    fn traversal_paths_respect_region_gaps(g in common::simple_instance(2, 7, 5)) {
        let seed = g.vertices().next().unwrap();
        let r = partition(&g, &[seed]).unwrap();
        for p in obots_search(&g, seed).unwrap().paths {
            let vs = &p.vertices;
            for i in 0..vs.len() {
                for j in i..vs.len() {
                    let (a, b) = (r.distance(vs[i]).unwrap(), r.distance(vs[j]).unwrap());
                    if b >= a {
                        prop_assert!(j - i >= b - a);
                    }
                }
            }
        }
    }
}
