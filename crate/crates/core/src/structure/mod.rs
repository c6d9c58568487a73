//! Induced-substructure searches: induced paths, holes, linked pairs, jumps
//! over a pentagon, and induced subgraph embeddings.
//!
//! All searches are exact backtracking. Outputs are self-certifying: each
//! returned path, hole or embedding carries a `verify` method that re-checks
//! it against the host graph by direct adjacency tests.

mod holes;
mod iso;
mod jumps;
mod paths;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::limits::Exhausted;

pub use holes::{enumerate_holes, find_long_odd_hole, five_holes, shortest_odd_cycle, HoleQuery};
pub use iso::{contains_induced, is_isomorphic, Embedding};
pub(crate) use jumps::local_jump_exists;
pub use jumps::{find_jumps, local_jump_pairs, Jump, JumpKind, JumpSearch, LocalJumpPair, LocalJumpPairs};
pub use paths::{
    enumerate_induced_paths, find_induced_path, is_linked, is_odd_linked, Parity, PathEnumeration, PathQuery,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("contract violation: {0}")]
    Contract(String),
    #[error(transparent)]
    Exhausted(#[from] Exhausted),
}

/// An induced path `p0 - p1 - ... - pk`; its length is the edge count `k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct InducedPath(Vec<usize>);

impl InducedPath {
    /// Wraps a vertex sequence without checking it; see [`InducedPath::verify`].
    pub fn new_unchecked(vertices: Vec<usize>) -> Self {
        InducedPath(vertices)
    }

    /// Wraps `vertices` if they form an induced path of `g`.
    pub fn checked(g: &Graph, vertices: Vec<usize>) -> Option<Self> {
        let p = InducedPath(vertices);
        p.verify(g).then_some(p)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn start(&self) -> usize {
        self.0[0]
    }

    pub fn end(&self) -> usize {
        *self.0.last().expect("non-empty path")
    }

    /// The internal vertices `P*`.
    pub fn interior(&self) -> VertexSet {
        if self.0.len() <= 2 {
            VertexSet::EMPTY
        } else {
            self.0[1..self.0.len() - 1].iter().collect()
        }
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().collect()
    }

    /// Consecutive vertices adjacent, all others non-adjacent, no repeats.
    pub fn verify(&self, g: &Graph) -> bool {
        let p = &self.0;
        if p.is_empty() || p.iter().any(|&v| v >= g.n()) || self.vertex_set().len() != p.len() {
            return false;
        }
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if g.has_edge(p[i], p[j]) != (j == i + 1) {
                    return false;
                }
            }
        }
        true
    }
}

/// An induced cycle, stored as a vertex sequence in cyclic order.
///
/// Holes proper have length at least four; the type also carries triangles
/// so that [`shortest_odd_cycle`] can return one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Hole(Vec<usize>);

impl Hole {
    /// Wraps a cyclic sequence, rotating it to start at its minimum vertex
    /// and orienting it so the second vertex is smaller than the last.
    pub fn canonical(mut cycle: Vec<usize>) -> Self {
        if let Some(pos) = cycle.iter().enumerate().min_by_key(|(_, &v)| v).map(|(i, _)| i) {
            cycle.rotate_left(pos);
            if cycle.len() > 2 && cycle[1] > cycle[cycle.len() - 1] {
                cycle[1..].reverse();
            }
        }
        Hole(cycle)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().collect()
    }

    /// Vertex at cyclic position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i % self.0.len()]
    }

    /// Consecutive vertices adjacent (cyclically), all others non-adjacent.
    pub fn verify(&self, g: &Graph) -> bool {
        let c = &self.0;
        let k = c.len();
        if k < 3 || c.iter().any(|&v| v >= g.n()) || self.vertex_set().len() != k {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if g.has_edge(c[i], c[j]) != consecutive {
                    return false;
                }
            }
        }
        true
    }
}
