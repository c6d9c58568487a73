#![allow(dead_code)]

use std::sync::OnceLock;

use pentagraph::corpus::{generate_corpus, CorpusSpec};
use pentagraph::{Graph, VertexSet};
use proptest::prelude::*;

/// Arbitrary graphs on at most `max_n` vertices, each pair present with
/// probability `density`.
pub fn arb_graph(max_n: usize, density: f64) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(proptest::bool::weighted(density), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
            },
        )
    })
}

/// Every pentagraph on at most nine vertices, up to isomorphism.
pub fn exhaustive9() -> &'static [Graph] {
    static CELL: OnceLock<Vec<Graph>> = OnceLock::new();
    CELL.get_or_init(|| generate_corpus(&CorpusSpec::exhaustive(9)).unwrap().0)
}

/// Every pentagraph on at most ten vertices, up to isomorphism.
pub fn exhaustive10() -> &'static [Graph] {
    static CELL: OnceLock<Vec<Graph>> = OnceLock::new();
    CELL.get_or_init(|| generate_corpus(&CorpusSpec::exhaustive(10)).unwrap().0)
}

/// Seeded random pentagraphs on 10 to 30 vertices.
pub fn random_corpus() -> &'static [Graph] {
    static CELL: OnceLock<Vec<Graph>> = OnceLock::new();
    CELL.get_or_init(|| generate_corpus(&CorpusSpec::random(10, 30, 150, 0x5eed)).unwrap().0)
}

/// Glued Petersen-family samples.
pub fn glued_corpus() -> &'static [Graph] {
    static CELL: OnceLock<Vec<Graph>> = OnceLock::new();
    CELL.get_or_init(|| (0..120).map(penta_oracle::samples::glued_blocks).collect())
}

pub fn mask(s: VertexSet) -> u64 {
    s.iter().fold(0, |m, v| m | 1 << v)
}

pub fn set(mask: u64) -> VertexSet {
    (0..64).filter(|v| mask >> v & 1 == 1).fold(VertexSet::EMPTY, |s, v| s.with(v))
}

/// Fixture vertex from its 1-based label.
pub fn l(k: usize) -> usize {
    pentagraph::fixtures::label(k)
}
