#![allow(dead_code)]

use domkit::Graph;
use proptest::prelude::*;

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * (n - 1) / 2;
    (0..1u64 << pairs).map(move |m| Graph::from_pair_mask(n, m).unwrap())
}

/// Random labeled graphs with `min..=max` vertices.
pub fn arb_graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max, any::<u64>()).prop_map(|(n, bits)| {
        let pairs = n * (n - 1) / 2;
        let mask = if pairs == 0 {
            0
        } else {
            bits & (u64::MAX >> (64 - pairs))
        };
        Graph::from_pair_mask(n, mask).unwrap()
    })
}

/// Random graphs without isolated vertices.
pub fn arb_graph_no_isolated(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    arb_graph(min.max(2), max).prop_filter("isolated vertex", |g| !g.has_isolated_vertex())
}
