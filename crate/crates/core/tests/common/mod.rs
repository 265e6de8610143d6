#![allow(dead_code)]

use proptest::prelude::*;
use travgraph_core::generators;
use travgraph_core::MultiTraversalRelation;

/// Random weakly connected instance: up to `max_n` vertices, weights up to
/// `max_w`, mixed directions.
pub fn instance(max_n: u32, max_w: u32) -> impl Strategy<Value = MultiTraversalRelation> {
    (2..=max_n, 0usize..6, 1..=max_w, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, extra, w, p, seed)| {
        generators::random_connected(n, extra, w, p, seed).expect("valid parameters")
    })
}

/// Random connected symmetric instance with unit weights.
pub fn simple_instance(min_n: u32, max_n: u32, max_extra: usize) -> impl Strategy<Value = MultiTraversalRelation> {
    (min_n..=max_n, 0..=max_extra, any::<u64>())
        .prop_map(|(n, extra, seed)| generators::random_simple_connected(n, extra, seed).expect("valid parameters"))
}

/// A permutation of `1..=n`.
pub fn permutation(n: u32) -> impl Strategy<Value = Vec<u32>> {
    Just((1..=n).collect::<Vec<u32>>()).prop_shuffle()
}
