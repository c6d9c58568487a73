use crate::graph::{Bipartition, Graph, Layering};
use crate::structure::Hole;

use super::{Coloring, ColoringError};

/// Distance layerings used by [`four_color`]: one per component, rooted at
/// its minimum vertex.
pub fn four_color_layers(g: &Graph) -> Vec<Layering> {
    g.components().into_iter().map(|c| g.bfs_layers(c.first().unwrap())).collect()
}

/// A proper colouring with at most four colours.
///
/// Each component is layered by distance from its minimum vertex. In a
/// pentagraph every layer induces a bipartite graph; even layers are
/// coloured from `{1, 2}` and odd layers from `{3, 4}`, and edges only join
/// equal or consecutive layers.
pub fn four_color(g: &Graph) -> Result<Coloring, ColoringError> {
    let mut colors = vec![0u8; g.n()];
    for layering in four_color_layers(g) {
        for (k, &layer) in layering.layers.iter().enumerate() {
            let sub = g.induced(layer);
            match sub.graph.bipartition() {
                Bipartition::TwoColoring(side) => {
                    let base = if k % 2 == 0 { 1 } else { 3 };
                    for (i, s) in side.into_iter().enumerate() {
                        colors[sub.host_vertex(i)] = base + s;
                    }
                }
                Bipartition::OddCycle(cycle) => {
                    let host = cycle.into_iter().map(|v| sub.host_vertex(v)).collect();
                    return Err(ColoringError::NonBipartiteLayer { layer: k, cycle: Hole::canonical(host) });
                }
            }
        }
    }
    let c = Coloring::new(4, colors);
    assert!(c.is_proper(g), "layer colouring must be proper");
    Ok(c)
}
