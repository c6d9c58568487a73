//! Certified colourings: four colours from distance layers, three colours
//! by recursive decomposition with Kempe-exchange recombination, and a
//! brute-force chromatic number for cross-checks.

mod four;
mod kempe;
mod three;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::decomposition::DecompositionError;
use crate::graph::Graph;
use crate::recognition::Witness;
use crate::structure::{Hole, InducedPath};

pub use four::{four_color, four_color_layers};
pub use kempe::{kempe_component, kempe_swap, KempeComponent};
pub use three::{
    combine_p3, normalize_on_star, three_color, three_color_unchecked, three_color_with, StarNormalization,
};

/// An assignment of colours `1..=k` to vertices; `0` marks an unassigned
/// vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    pub k: u8,
    pub colors: Vec<u8>,
}

impl Coloring {
    pub fn new(k: u8, colors: Vec<u8>) -> Self {
        Coloring { k, colors }
    }

    /// The colour class of `color`.
    pub fn class(&self, color: u8) -> VertexSet {
        self.colors.iter().enumerate().filter(|&(_, &c)| c == color).map(|(v, _)| v).collect()
    }

    /// Number of distinct colours used.
    pub fn used(&self) -> usize {
        (1..=self.k).filter(|&c| self.colors.contains(&c)).count()
    }

    /// Total, within the palette, and proper on `g`.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && self.colors.iter().all(|&c| (1..=self.k).contains(&c))
            && g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }

    /// Renames colours: `perm[c]` is the new name of colour `c`
    /// (`perm[0]` is ignored).
    pub fn permuted(&self, perm: &[u8]) -> Coloring {
        Coloring { k: self.k, colors: self.colors.iter().map(|&c| if c == 0 { 0 } else { perm[c as usize] }).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("not a pentagraph")]
    NotPentagraph(Witness),
    #[error("pentagraph recognition ran out of budget")]
    RecognitionIndeterminate,
    #[error("layer {layer} of the distance layering is not bipartite")]
    NonBipartiteLayer { layer: usize, cycle: Hole },
    #[error("recombination failed: {message}")]
    Invariant { message: String, witnesses: Vec<InducedPath> },
    #[error("decomposition found no outcome on a {n}-vertex subgraph")]
    NoneFound { n: usize },
    #[error(transparent)]
    Decomposition(#[from] DecompositionError),
    #[error("recursion deeper than the vertex count")]
    DepthExceeded,
}

/// Whether `c` is a proper colouring of `g`. Partial colourings (an
/// unassigned vertex, or the wrong length) are contract errors.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    if c.colors.len() != g.n() || c.colors.contains(&0) {
        return Err(ColoringError::Contract("colouring is not total".into()));
    }
    Ok(c.is_proper(g))
}

/// The least `k <= k_max` such that `g` is `k`-colourable, or `None` when
/// more than `k_max` colours are needed.
///
/// Backtracking over vertices in a BFS-from-max-degree order; a vertex may
/// open at most one new colour, which removes palette symmetry.
pub fn chromatic_number_bruteforce(g: &Graph, k_max: usize) -> Option<usize> {
    if g.n() == 0 {
        return Some(0);
    }
    let mut order = Vec::with_capacity(g.n());
    let mut placed = VertexSet::EMPTY;
    while placed.len() < g.n() {
        let root = g.vertices().difference(placed).iter().max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
        for layer in g.bfs_layers(root).layers {
            order.extend(layer.iter());
            placed = placed.union(layer);
        }
    }
    let start = if g.edge_count() == 0 { 1 } else { 2 };
    (start..=k_max).find(|&k| {
        let mut colors = vec![0u8; g.n()];
        colorable(g, &order, 0, k as u8, 0, &mut colors)
    })
}

fn colorable(g: &Graph, order: &[usize], i: usize, k: u8, max_used: u8, colors: &mut [u8]) -> bool {
    let Some(&v) = order.get(i) else { return true };
    let top = (max_used + 1).min(k);
    for c in 1..=top {
        if g.neighbors(v).iter().any(|u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if colorable(g, order, i + 1, k, max_used.max(c), colors) {
            return true;
        }
    }
    colors[v] = 0;
    false
}
