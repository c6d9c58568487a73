use serde::Serialize;

use crate::bitset::VertexSet;
use crate::decomposition::{decompose_with, minimize_star, DecompositionOutcome, P3Cutset, Priority};
use crate::fixtures::PETERSEN_COLORING;
use crate::graph::{Graph, InducedSubgraph};
use crate::limits::Limits;
use crate::recognition::{recognize, Verdict};
use crate::structure::InducedPath;

use super::kempe::{kempe_component, swap_on};
use super::{Coloring, ColoringError};

/// Palette permutation sending the colour of `first` to 1 and the colour
/// of `second` (if given, and different) to 2; the remaining colours keep
/// their relative order.
fn normalizing_perm(c: &Coloring, first: usize, second: Option<usize>) -> Vec<u8> {
    let mut order = vec![c.colors[first]];
    if let Some(s) = second {
        if !order.contains(&c.colors[s]) {
            order.push(c.colors[s]);
        }
    }
    order.extend((1..=c.k).filter(|x| !order.contains(x)).collect::<Vec<_>>());
    let mut perm = vec![0u8; c.k as usize + 1];
    for (i, &old) in order.iter().enumerate() {
        perm[old as usize] = i as u8 + 1;
    }
    perm
}

fn require_proper3(g: &Graph, c: &Coloring, what: &str) -> Result<(), ColoringError> {
    if c.k != 3 || !c.is_proper(g) {
        return Err(ColoringError::Contract(format!("{what} is not a proper three-colouring")));
    }
    Ok(())
}

/// Shortest path inside `within` from `from` to the nearest vertex of
/// `targets`, as an induced path of `g`.
fn nearest_path(g: &Graph, from: usize, targets: VertexSet, within: VertexSet) -> Option<InducedPath> {
    targets
        .iter()
        .filter_map(|t| g.shortest_path_within(from, t, within))
        .min_by_key(|p| p.len())
        .map(InducedPath::new_unchecked)
}

/// Result of [`normalize_on_star`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarNormalization {
    pub coloring: Coloring,
    /// Number of Kempe exchanges performed; never more than `|X|`.
    pub passes: usize,
}

/// Recolours a proper three-colouring of `gi` so that `v` gets colour 1 and
/// every vertex of `x` gets colour 2.
///
/// After renaming colours so that `v` has colour 1, each pass takes the
/// `{2, 3}` Kempe component of the least vertex of `x` still coloured 3 and
/// swaps it. When the cutset is minimal this component never also holds a
/// vertex of `x` coloured 2; if it does, the error carries a shortest odd
/// path between the two inside the component.
pub fn normalize_on_star(gi: &Graph, c: &Coloring, v: usize, x: VertexSet) -> Result<StarNormalization, ColoringError> {
    require_proper3(gi, c, "side colouring")?;
    if v >= gi.n() || x.contains(v) || !x.is_subset(gi.neighbors(v)) {
        return Err(ColoringError::Contract(format!("{v} must be adjacent to every vertex of {x:?}")));
    }
    let mut cur = c.permuted(&normalizing_perm(c, v, None));
    let mut passes = 0;
    loop {
        let threes = x.intersection(cur.class(3));
        let Some(first) = threes.first() else {
            return Ok(StarNormalization { coloring: cur, passes });
        };
        if passes >= x.len() {
            return Err(ColoringError::Invariant {
                message: format!("no progress after {passes} passes"),
                witnesses: vec![],
            });
        }
        let comp = kempe_component(gi, &cur, (2, 3), first)?.vertices;
        let twos = x.intersection(cur.class(2)).intersection(comp);
        if !twos.is_empty() {
            let path = nearest_path(gi, first, twos, comp);
            return Err(ColoringError::Invariant {
                message: format!("leaf {first} shares a {{2,3}} component with a leaf coloured 2"),
                witnesses: path.into_iter().collect(),
            });
        }
        cur = swap_on(&cur, (2, 3), comp);
        passes += 1;
        debug_assert!(x.intersection(cur.class(3)).len() < threes.len());
    }
}

/// Merges proper three-colourings of the sides `G_i = G[A_i ∪ {v1, v2, v3}]`
/// of a P3-cutset into a colouring of `g`.
///
/// `sides[i]` colours `g.induced(cut.sides[i] ∪ path)` in that subgraph's
/// own vertex ids. Every side is renamed so `v1 -> 1` and `v2 -> 2`; sides
/// then disagree at most on whether `v3` is 1 or 3. One group of sides is
/// brought in line with the other by `{1, 3}` exchanges at `v3`, which
/// needs `v1, v3` in different `{1, 3}` components on each side of that
/// group. If neither group allows this, the error carries an even and an
/// odd induced `v1`-`v3` path whose union is a long odd hole.
pub fn combine_p3(g: &Graph, cut: &P3Cutset, sides: &[Coloring]) -> Result<Coloring, ColoringError> {
    if !cut.verify(g) {
        return Err(ColoringError::Contract("invalid P3-cutset".into()));
    }
    if sides.len() != cut.sides.len() {
        return Err(ColoringError::Contract(format!("{} side colourings for {} sides", sides.len(), cut.sides.len())));
    }
    let pset = cut.vertex_set();
    let mut parts: Vec<(InducedSubgraph, Coloring)> = Vec::with_capacity(sides.len());
    for (&a, c) in cut.sides.iter().zip(sides) {
        let sub = g.induced(a.union(pset));
        require_proper3(&sub.graph, c, "side colouring")?;
        let l1 = sub.local_vertex(cut.path[0]).unwrap();
        let l2 = sub.local_vertex(cut.path[1]).unwrap();
        let c = c.permuted(&normalizing_perm(c, l1, Some(l2)));
        parts.push((sub, c));
    }
    let v3_of = |(sub, c): &(InducedSubgraph, Coloring)| c.colors[sub.local_vertex(cut.path[2]).unwrap()];
    // For each target colour of v3, try to move the other group over.
    let mut witnesses = Vec::new();
    for target in [1u8, 3] {
        if parts.iter().all(|p| v3_of(p) == target) {
            return Ok(merge(g, &parts));
        }
        let mut blocked = None;
        for p in parts.iter().filter(|p| v3_of(p) != target) {
            let (sub, c) = p;
            let l1 = sub.local_vertex(cut.path[0]).unwrap();
            let l3 = sub.local_vertex(cut.path[2]).unwrap();
            let comp = kempe_component(&sub.graph, c, (1, 3), l3)?.vertices;
            if comp.contains(l1) {
                let local = sub.graph.shortest_path_within(l3, l1, comp).expect("same component");
                let host = local.into_iter().map(|v| sub.host_vertex(v)).collect();
                blocked = Some(InducedPath::new_unchecked(host));
                break;
            }
        }
        match blocked {
            None => {
                for p in parts.iter_mut() {
                    if v3_of(p) != target {
                        let l3 = p.0.local_vertex(cut.path[2]).unwrap();
                        let comp = kempe_component(&p.0.graph, &p.1, (1, 3), l3)?.vertices;
                        p.1 = swap_on(&p.1, (1, 3), comp);
                    }
                }
                return Ok(merge(g, &parts));
            }
            Some(w) => witnesses.push(w),
        }
    }
    Err(ColoringError::Invariant {
        message: "v1 and v3 share a {1,3} component on sides of both kinds".into(),
        witnesses,
    })
}

fn merge(g: &Graph, parts: &[(InducedSubgraph, Coloring)]) -> Coloring {
    let mut colors = vec![0u8; g.n()];
    for (sub, c) in parts {
        for (i, &col) in c.colors.iter().enumerate() {
            let h = sub.host_vertex(i);
            debug_assert!(colors[h] == 0 || colors[h] == col, "sides disagree at {h}");
            colors[h] = col;
        }
    }
    Coloring::new(3, colors)
}

/// A proper three-colouring of a pentagraph.
///
/// The input is recognized first; non-pentagraphs are refused with their
/// witness.
pub fn three_color(g: &Graph, limits: &Limits) -> Result<Coloring, ColoringError> {
    three_color_with(g, limits, Priority::Cheap)
}

/// [`three_color`] with decompositions chosen by `priority` at every level.
pub fn three_color_with(g: &Graph, limits: &Limits, priority: Priority) -> Result<Coloring, ColoringError> {
    let report = recognize(g, limits);
    match report.verdict {
        Verdict::Pentagraph => three_color_unchecked(g, limits, priority),
        Verdict::NotPentagraph => {
            Err(ColoringError::NotPentagraph(report.witness.expect("rejections carry a witness")))
        }
        Verdict::Indeterminate => Err(ColoringError::RecognitionIndeterminate),
    }
}

/// [`three_color`] without the recognition step. On a non-pentagraph this
/// either still succeeds or fails with a recombination or decomposition
/// error; it never returns an improper colouring.
pub fn three_color_unchecked(g: &Graph, limits: &Limits, priority: Priority) -> Result<Coloring, ColoringError> {
    let c = Recursion { limits, priority }.color(g, g.n() + 1)?;
    assert!(c.is_proper(g), "three_color produced an improper colouring");
    Ok(c)
}

struct Recursion<'a> {
    limits: &'a Limits,
    priority: Priority,
}

impl Recursion<'_> {
    fn side(&self, g: &Graph, keep: VertexSet, depth: usize) -> Result<(InducedSubgraph, Coloring), ColoringError> {
        let sub = g.induced(keep);
        let c = self.color(&sub.graph, depth)?;
        Ok((sub, c))
    }

    fn color(&self, g: &Graph, depth: usize) -> Result<Coloring, ColoringError> {
        let limits = self.limits;
        if depth == 0 {
            return Err(ColoringError::DepthExceeded);
        }
        let depth = depth - 1;
        let comps = g.components();
        if comps.len() > 1 {
            let parts = comps.into_iter().map(|a| self.side(g, a, depth)).collect::<Result<Vec<_>, _>>()?;
            return Ok(merge(g, &parts));
        }
        let out = match decompose_with(g, limits, self.priority)? {
            DecompositionOutcome::Bipartite { sides } => Coloring::new(3, sides.into_iter().map(|s| s + 1).collect()),
            DecompositionOutcome::LowDegree { vertex } => {
                let (sub, c) = self.side(g, g.vertices().without(vertex), depth)?;
                let mut colors = vec![0u8; g.n()];
                for (i, &col) in c.colors.iter().enumerate() {
                    colors[sub.host_vertex(i)] = col;
                }
                let free = (1..=3u8).find(|&k| g.neighbors(vertex).iter().all(|u| colors[u] != k));
                colors[vertex] = free.expect("a vertex of degree at most two has a free colour");
                Coloring::new(3, colors)
            }
            DecompositionOutcome::Petersen { embedding } => {
                let mut colors = vec![0u8; g.n()];
                for (i, &v) in embedding.map.iter().enumerate() {
                    colors[v] = PETERSEN_COLORING[i];
                }
                Coloring::new(3, colors)
            }
            DecompositionOutcome::CliqueCut(cut) => {
                let k = cut.vertex_set();
                let mut parts = Vec::with_capacity(cut.sides.len());
                for &a in &cut.sides {
                    let (sub, c) = self.side(g, a.union(k), depth)?;
                    let first = sub.local_vertex(cut.clique[0]).unwrap();
                    let second = cut.clique.get(1).map(|&v| sub.local_vertex(v).unwrap());
                    let c = c.permuted(&normalizing_perm(&c, first, second));
                    parts.push((sub, c));
                }
                merge(g, &parts)
            }
            DecompositionOutcome::P3(cut) => {
                let pset = cut.vertex_set();
                let mut colorings = Vec::with_capacity(cut.sides.len());
                for &a in &cut.sides {
                    colorings.push(self.side(g, a.union(pset), depth)?.1);
                }
                combine_p3(g, &cut, &colorings)?
            }
            DecompositionOutcome::Star(star) => {
                // recombination needs a cutset minimal as a parity star-cutset
                let star = minimize_star(g, star, false, limits)?;
                let x = star.cutset();
                let mut parts = Vec::with_capacity(star.components.len());
                for &a in &star.components {
                    let (sub, c) = self.side(g, a.union(x), depth)?;
                    let v = sub.local_vertex(star.center).unwrap();
                    let leaves = sub.local_set(star.leaves);
                    let norm = normalize_on_star(&sub.graph, &c, v, leaves)?;
                    parts.push((sub, norm.coloring));
                }
                merge(g, &parts)
            }
            DecompositionOutcome::NoneFound => return Err(ColoringError::NoneFound { n: g.n() }),
        };
        if !out.is_proper(g) {
            return Err(ColoringError::Invariant { message: "merged colouring is improper".into(), witnesses: vec![] });
        }
        Ok(out)
    }
}
