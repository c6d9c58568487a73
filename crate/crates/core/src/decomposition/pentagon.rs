//! Cutsets read off the jumps over a pentagon.
//!
//! For a pentagon `C` of a pentagraph with no induced P2 fixture, number
//! `C` as `c1 .. c5` so that no short jump crosses `c3, c4, c5`, no local
//! jump crosses `c4`, and every local jump across `c3` or `c5` meets the set
//! `X` of short-jump interiors. Then any component `D` of `G \ (C ∪ X)`
//! next to `c4` attaches only to `c3, c4, c5` (a P3-cutset) or to one side:
//! `X3 ∪ {c3, c4}` or `X5 ∪ {c5, c4}` is a strong parity star-cutset.
//! Every candidate is validated before it is returned.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::limits::Limits;
use crate::structure::{local_jump_exists, Hole};

use super::cutsets::{minimize_star, verify_parity_star_cutset, P3Cutset, ParityStarCutset};
use super::DecompositionError;

#[derive(Clone, Debug)]
pub(crate) enum PentagonCut {
    P3(P3Cutset),
    Star(ParityStarCutset),
}

/// Short jumps `c[i-1] - a - b - c[i+1]` across position `i` of the hole.
fn short_jumps(g: &Graph, hole: &Hole, i: usize) -> Vec<(usize, usize)> {
    let c = hole.vertex_set();
    let (s, t) = (hole.at(i + 4), hole.at(i + 1));
    let mut out = Vec::new();
    for a in g.neighbors(s).difference(c) {
        for b in g.neighbors(a).intersection(g.neighbors(t)).difference(c) {
            out.push((a, b));
        }
    }
    out
}

pub(crate) fn pentagon_cutset(
    g: &Graph,
    hole: &Hole,
    limits: &Limits,
) -> Result<Option<PentagonCut>, DecompositionError> {
    let c = hole.vertex_set();
    let shorts: Vec<Vec<(usize, usize)>> = (0..5).map(|i| short_jumps(g, hole, i)).collect();
    let x_all: VertexSet = shorts.iter().flatten().flat_map(|&(a, b)| [a, b]).collect();
    let mut exhausted = None;
    for r in 0..5 {
        for dir in [1, 4] {
            // pos[k] is the hole position of c_{k+1}
            let pos: [usize; 5] = std::array::from_fn(|k| (r + dir * k) % 5);
            let [p1, p2, p3, p4, p5] = pos;
            if [p3, p4, p5].iter().any(|&p| !shorts[p].is_empty()) {
                continue;
            }
            if local_jump_exists(g, hole, p4, VertexSet::EMPTY)
                || local_jump_exists(g, hole, p3, x_all)
                || local_jump_exists(g, hole, p5, x_all)
            {
                continue;
            }
            let (c3, c4, c5) = (hole.at(p3), hole.at(p4), hole.at(p5));
            if g.degree(c4) <= 2 {
                continue;
            }
            // X3: ends at c3 of short jumps across c2; X5: ends at c5 across c1
            let side = |p: usize, end: usize| -> VertexSet {
                shorts[p].iter().flat_map(|&(a, b)| [a, b]).filter(|&v| g.has_edge(v, end)).collect()
            };
            let x3 = side(p2, c3);
            let x5 = side(p1, c5);
            let rest = g.vertices().difference(c).difference(x_all);
            for d in g.components_of(rest) {
                if !g.neighbors(c4).intersects(d) {
                    continue;
                }
                let attach = g.neighborhood_of(d).intersection(c.union(x_all));
                let p3set = VertexSet::singleton(c3).with(c4).with(c5);
                if attach.is_subset(p3set) {
                    let sides = g.components_of(g.vertices().difference(p3set));
                    if sides.len() >= 2 {
                        let path = if c3 < c5 { [c3, c4, c5] } else { [c5, c4, c3] };
                        return Ok(Some(PentagonCut::P3(P3Cutset { path, sides })));
                    }
                    continue;
                }
                for (center, extra) in [(c3, x3), (c5, x5)] {
                    match verify_parity_star_cutset(g, center, extra.with(c4), limits) {
                        Ok(Some(cut)) if cut.strong => {
                            return minimize_star(g, cut, true, limits).map(|s| Some(PentagonCut::Star(s)));
                        }
                        Ok(_) => {}
                        Err(DecompositionError::Exhausted(e)) => exhausted = Some(e),
                        Err(e) => return Err(e),
                    }
                }
            }
        }
    }
    match exhausted {
        Some(e) => Err(e.into()),
        None => Ok(None),
    }
}
