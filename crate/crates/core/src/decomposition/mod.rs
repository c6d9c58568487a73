//! Decomposition of pentagraphs: every pentagraph is bipartite, is the
//! Petersen graph, has a vertex of degree at most two, or admits a
//! P3-cutset or a strong parity star-cutset. [`decompose`] finds one of
//! these outcomes together with a certificate.

mod attachment;
mod cutsets;
mod pentagon;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fixtures;
use crate::graph::{Bipartition, Graph};
use crate::limits::{Exhausted, Limits};
use crate::structure::{contains_induced, five_holes, is_isomorphic, Embedding, StructureError};

pub use attachment::{analyze_attachment, Attachment};
pub use cutsets::{
    find_clique_cutset, find_low_degree, find_p3_cutset, find_strong_star_bruteforce, minimize_star,
    verify_parity_star_cutset, CliqueCutset, P3Cutset, ParityStarCutset,
};

use pentagon::{pentagon_cutset, PentagonCut};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("contract violation: {0}")]
    Contract(String),
    #[error(transparent)]
    Exhausted(#[from] Exhausted),
    #[error("star search skipped vertex {vertex} of degree {degree} (cap {cap})")]
    StarDegreeCap { vertex: usize, degree: usize, cap: usize },
}

impl DecompositionError {
    /// Budget or cap errors, as opposed to contract violations.
    pub fn is_indeterminate(&self) -> bool {
        !matches!(self, DecompositionError::Contract(_))
    }
}

impl From<StructureError> for DecompositionError {
    fn from(e: StructureError) -> Self {
        match e {
            StructureError::Contract(m) => DecompositionError::Contract(m),
            StructureError::Exhausted(x) => DecompositionError::Exhausted(x),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum DecompositionOutcome {
    /// Side of each vertex in a proper 2-colouring (0 or 1).
    Bipartite {
        sides: Vec<u8>,
    },
    /// Isomorphism from the Petersen fixture onto the graph.
    Petersen {
        embedding: Embedding,
    },
    LowDegree {
        vertex: usize,
    },
    CliqueCut(CliqueCutset),
    P3(P3Cutset),
    Star(ParityStarCutset),
    NoneFound,
}

impl DecompositionOutcome {
    pub fn name(&self) -> &'static str {
        match self {
            DecompositionOutcome::Bipartite { .. } => "bipartite",
            DecompositionOutcome::Petersen { .. } => "petersen",
            DecompositionOutcome::LowDegree { .. } => "low_degree",
            DecompositionOutcome::CliqueCut(_) => "clique_cut",
            DecompositionOutcome::P3(_) => "p3",
            DecompositionOutcome::Star(_) => "star",
            DecompositionOutcome::NoneFound => "none_found",
        }
    }

    /// Re-checks the embedded certificate against `g` from scratch.
    /// `NoneFound` carries no certificate and never verifies.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            DecompositionOutcome::Bipartite { sides } => {
                sides.len() == g.n()
                    && sides.iter().all(|&s| s <= 1)
                    && g.edges().iter().all(|&(u, v)| sides[u] != sides[v])
            }
            DecompositionOutcome::Petersen { embedding } => g.n() == 10 && embedding.verify(g, &fixtures::petersen()),
            DecompositionOutcome::LowDegree { vertex } => *vertex < g.n() && g.degree(*vertex) <= 2,
            DecompositionOutcome::CliqueCut(c) => c.verify(g),
            DecompositionOutcome::P3(c) => c.verify(g),
            DecompositionOutcome::Star(c) => c.strong && c.verify(g),
            DecompositionOutcome::NoneFound => false,
        }
    }
}

/// A strong parity star-cutset derived from the pentagon `hole`, falling
/// back to the exhaustive search when the pentagon construction yields
/// nothing (or only a P3-cutset).
pub fn find_strong_parity_star_cutset(
    g: &Graph,
    hole: &crate::structure::Hole,
    limits: &Limits,
) -> Result<Option<ParityStarCutset>, DecompositionError> {
    if hole.len() != 5 || !hole.verify(g) {
        return Err(DecompositionError::Contract(format!("{:?} is not a pentagon of the graph", hole.vertices())));
    }
    let constructed = match pentagon_cutset(g, hole, limits) {
        Ok(Some(PentagonCut::Star(s))) => return Ok(Some(s)),
        Ok(_) => None,
        Err(e) if e.is_indeterminate() => Some(e),
        Err(e) => return Err(e),
    };
    match find_strong_star_bruteforce(g, limits) {
        Ok(None) => constructed.map_or(Ok(None), Err),
        other => other,
    }
}

/// Order in which [`decompose_with`] tries the outcomes after the
/// bipartite check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Priority {
    /// Low degree, Petersen, clique cutset, P3-cutset, then stars.
    #[default]
    Cheap,
    /// Petersen, P3-cutset, stars, then clique cutset and low degree.
    CutsetsFirst,
}

/// Finds an outcome, trying in order: bipartite, a vertex of degree at most
/// two, the Petersen graph, a clique cutset, a P3-cutset, a strong parity
/// star-cutset built from some pentagon, and finally the exhaustive star
/// search. `NoneFound` is returned only when every search completed without
/// a hit, which cannot happen for a pentagraph.
///
/// The input is assumed to be a pentagraph; this is not rechecked.
pub fn decompose(g: &Graph, limits: &Limits) -> Result<DecompositionOutcome, DecompositionError> {
    decompose_with(g, limits, Priority::Cheap)
}

/// [`decompose`] with an explicit rule order.
pub fn decompose_with(
    g: &Graph,
    limits: &Limits,
    priority: Priority,
) -> Result<DecompositionOutcome, DecompositionError> {
    if let Bipartition::TwoColoring(sides) = g.bipartition() {
        return Ok(DecompositionOutcome::Bipartite { sides });
    }
    let petersen = || {
        (g.n() == 10 && g.edge_count() == 15)
            .then(|| is_isomorphic(&fixtures::petersen(), g))
            .flatten()
            .map(|embedding| DecompositionOutcome::Petersen { embedding })
    };
    let simple = || {
        find_low_degree(g)
            .map(|vertex| DecompositionOutcome::LowDegree { vertex })
            .or_else(petersen)
            .or_else(|| find_clique_cutset(g).map(DecompositionOutcome::CliqueCut))
    };
    match priority {
        Priority::Cheap => {
            if let Some(out) = simple() {
                return Ok(out);
            }
            cutset_outcome(g, limits).map(|o| o.unwrap_or(DecompositionOutcome::NoneFound))
        }
        Priority::CutsetsFirst => {
            if let Some(out) = petersen() {
                return Ok(out);
            }
            match cutset_outcome(g, limits) {
                Ok(Some(out)) => Ok(out),
                Ok(None) => Ok(simple().unwrap_or(DecompositionOutcome::NoneFound)),
                Err(e) if e.is_indeterminate() => simple().ok_or(e),
                Err(e) => Err(e),
            }
        }
    }
}

/// A P3-cutset, then a star from some pentagon, then the exhaustive star
/// search.
fn cutset_outcome(g: &Graph, limits: &Limits) -> Result<Option<DecompositionOutcome>, DecompositionError> {
    if let Some(c) = find_p3_cutset(g) {
        return Ok(Some(DecompositionOutcome::P3(c)));
    }
    let mut pending: Option<DecompositionError> = None;
    if contains_induced(g, &fixtures::p2()).is_none() {
        for hole in five_holes(g) {
            match pentagon_cutset(g, &hole, limits) {
                Ok(Some(PentagonCut::Star(s))) => return Ok(Some(DecompositionOutcome::Star(s))),
                Ok(Some(PentagonCut::P3(c))) => return Ok(Some(DecompositionOutcome::P3(c))),
                Ok(None) => {}
                Err(e) if e.is_indeterminate() => pending = Some(e),
                Err(e) => return Err(e),
            }
        }
    }
    match find_strong_star_bruteforce(g, limits)? {
        Some(s) => Ok(Some(DecompositionOutcome::Star(s))),
        None => pending.map_or(Ok(None), Err),
    }
}
