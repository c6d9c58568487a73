use serde::Serialize;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::limits::Limits;
use crate::structure::{is_linked, InducedPath};

use super::cutsets::find_clique_cutset;
use super::DecompositionError;

/// How the rest of a graph without clique cutsets attaches to an induced
/// subgraph `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum Attachment {
    /// A vertex outside `H` with at least three neighbours in `H`.
    ManyNeighbours { vertex: usize, neighbours: VertexSet },
    /// A vertex outside `H` whose neighbours in `H` are exactly the
    /// nonadjacent pair `s, t`.
    TwoNeighbours { vertex: usize, s: usize, t: usize },
    /// No outside vertex has two neighbours in `H`; `path` is an induced
    /// `s`-`t` path of length at least three with interior outside `H`, and
    /// every vertex of `H` with a neighbour in its interior is adjacent to
    /// both ends. `linked` records whether `s, t` are linked in `H`.
    Path { s: usize, t: usize, path: InducedPath, attached: VertexSet, linked: bool },
}

/// Classifies the attachment of `V(G) \ H` to `G[H]`.
///
/// The first two cases report the least qualifying outside vertex. In the
/// third, `path` is a shortest path between nonadjacent vertices of `H`
/// with interior outside `H` (least pair first on ties), which makes its
/// interior inclusion-minimal.
///
/// Requires `G[H]` connected, `3 <= |H| < |V(G)|` and no clique cutset in
/// `G`; violations are contract errors.
pub fn analyze_attachment(g: &Graph, h: VertexSet, limits: &Limits) -> Result<Attachment, DecompositionError> {
    if !h.is_subset(g.vertices()) || h.len() < 3 || h == g.vertices() {
        return Err(DecompositionError::Contract("H must have at least three vertices and miss at least one".into()));
    }
    if !g.is_connected_set(h) {
        return Err(DecompositionError::Contract("G[H] must be connected".into()));
    }
    if let Some(c) = find_clique_cutset(g) {
        return Err(DecompositionError::Contract(format!("G has the clique cutset {:?}", c.clique)));
    }
    let outside = g.vertices().difference(h);
    for v in outside {
        let nh = g.neighbors(v).intersection(h);
        if nh.len() >= 3 {
            return Ok(Attachment::ManyNeighbours { vertex: v, neighbours: nh });
        }
    }
    for v in outside {
        let nh = g.neighbors(v).intersection(h);
        if nh.len() == 2 {
            let (s, t) = (nh.first().unwrap(), nh.without(nh.first().unwrap()).first().unwrap());
            return Ok(Attachment::TwoNeighbours { vertex: v, s, t });
        }
    }
    let mut best: Option<Vec<usize>> = None;
    for s in h {
        for t in h {
            if t <= s || g.has_edge(s, t) {
                continue;
            }
            if let Some(p) = g.shortest_path_within(s, t, outside) {
                if best.as_ref().is_none_or(|b| p.len() < b.len()) {
                    best = Some(p);
                }
            }
        }
    }
    let Some(p) = best else {
        return Err(DecompositionError::Contract("no path leaves H and returns; G has a clique cutset".into()));
    };
    let path = InducedPath::new_unchecked(p);
    let (s, t) = (path.start(), path.end());
    let sub = g.induced(h);
    let linked = is_linked(&sub.graph, sub.local_vertex(s).unwrap(), sub.local_vertex(t).unwrap(), limits)?;
    let attached = g.neighborhood_of(path.interior()).intersection(h);
    Ok(Attachment::Path { s, t, path, attached, linked })
}
