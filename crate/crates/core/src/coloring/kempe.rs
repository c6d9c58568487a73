use serde::Serialize;

use crate::bitset::VertexSet;
use crate::graph::Graph;

use super::{Coloring, ColoringError};

/// A connected component of the subgraph induced by two colour classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KempeComponent {
    pub colors: (u8, u8),
    pub vertices: VertexSet,
}

/// The `{a, b}` Kempe component containing `v`.
pub fn kempe_component(g: &Graph, c: &Coloring, colors: (u8, u8), v: usize) -> Result<KempeComponent, ColoringError> {
    let (a, b) = colors;
    if v >= g.n() || c.colors.len() != g.n() {
        return Err(ColoringError::Contract(format!("vertex {v} or colouring does not fit the graph")));
    }
    if c.colors[v] != a && c.colors[v] != b {
        return Err(ColoringError::Contract(format!("vertex {v} has colour {}, not in {{{a}, {b}}}", c.colors[v])));
    }
    let class = c.class(a).union(c.class(b));
    Ok(KempeComponent { colors, vertices: g.reachable(v, class) })
}

/// Swaps colours `a` and `b` on the Kempe component containing `v`.
pub fn kempe_swap(g: &Graph, c: &Coloring, colors: (u8, u8), v: usize) -> Result<Coloring, ColoringError> {
    let comp = kempe_component(g, c, colors, v)?;
    Ok(swap_on(c, colors, comp.vertices))
}

pub(crate) fn swap_on(c: &Coloring, (a, b): (u8, u8), on: VertexSet) -> Coloring {
    let mut out = c.clone();
    for u in on {
        out.colors[u] = if c.colors[u] == a { b } else { a };
    }
    out
}
