use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::limits::{Exhausted, Limits};
use crate::structure::{find_induced_path, InducedPath, Parity, PathQuery};

use super::DecompositionError;

/// A cut vertex or a cut edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCutset {
    pub clique: Vec<usize>,
    /// Components of `G \ clique`.
    pub sides: Vec<VertexSet>,
}

impl CliqueCutset {
    pub fn vertex_set(&self) -> VertexSet {
        self.clique.iter().collect()
    }

    pub fn verify(&self, g: &Graph) -> bool {
        let k = &self.clique;
        let ok = match k.len() {
            1 => k[0] < g.n(),
            2 => k[0] < g.n() && k[1] < g.n() && g.has_edge(k[0], k[1]),
            _ => false,
        };
        ok && self.sides.len() >= 2 && self.sides == g.components_of(g.vertices().difference(self.vertex_set()))
    }
}

/// An induced path `v1 - v2 - v3` whose removal disconnects the graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct P3Cutset {
    pub path: [usize; 3],
    /// Components of `G \ {v1, v2, v3}`.
    pub sides: Vec<VertexSet>,
}

impl P3Cutset {
    pub fn vertex_set(&self) -> VertexSet {
        self.path.iter().collect()
    }

    pub fn verify(&self, g: &Graph) -> bool {
        let [a, b, c] = self.path;
        a.max(b).max(c) < g.n()
            && InducedPath::checked(g, self.path.to_vec()).is_some()
            && self.sides.len() >= 2
            && self.sides == g.components_of(g.vertices().difference(self.vertex_set()))
    }
}

/// A parity star-cutset `X = {center} ∪ leaves`: the center is adjacent to
/// every leaf, `G \ X` is disconnected, and in the witness component `A`
/// every two leaves are joined by an induced path of even length with
/// interior in `A`. It is strong when the center has a neighbour in `A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityStarCutset {
    pub center: usize,
    pub leaves: VertexSet,
    pub witness_component: VertexSet,
    pub strong: bool,
    /// Components of `G \ X`.
    pub components: Vec<VertexSet>,
    /// One even path per leaf pair `(a, b)`, `a < b`, in lexicographic pair
    /// order.
    pub witness_paths: Vec<InducedPath>,
}

impl ParityStarCutset {
    pub fn cutset(&self) -> VertexSet {
        self.leaves.with(self.center)
    }

    /// Re-checks every condition, including each stored witness path.
    pub fn verify(&self, g: &Graph) -> bool {
        let x = self.center;
        if x >= g.n() || self.leaves.contains(x) || !self.leaves.is_subset(g.neighbors(x)) {
            return false;
        }
        if self.components.len() < 2 || self.components != g.components_of(g.vertices().difference(self.cutset())) {
            return false;
        }
        let a = self.witness_component;
        if !self.components.contains(&a) || self.strong != g.neighbors(x).intersects(a) {
            return false;
        }
        let pairs = leaf_pairs(self.leaves);
        pairs.len() == self.witness_paths.len()
            && pairs.iter().zip(&self.witness_paths).all(|(&(s, t), p)| {
                p.start() == s && p.end() == t && p.len() % 2 == 0 && p.interior().is_subset(a) && p.verify(g)
            })
    }
}

fn leaf_pairs(leaves: VertexSet) -> Vec<(usize, usize)> {
    let v = leaves.to_vec();
    let mut out = Vec::new();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            out.push((v[i], v[j]));
        }
    }
    out
}

/// The minimum vertex of degree at most two.
pub fn find_low_degree(g: &Graph) -> Option<usize> {
    (0..g.n()).find(|&v| g.degree(v) <= 2)
}

fn split(g: &Graph, cut: VertexSet) -> Option<Vec<VertexSet>> {
    let sides = g.components_of(g.vertices().difference(cut));
    (sides.len() >= 2).then_some(sides)
}

/// A cut vertex, or failing that a cut edge; each is the least one in
/// vertex (respectively edge) order.
pub fn find_clique_cutset(g: &Graph) -> Option<CliqueCutset> {
    for v in 0..g.n() {
        if let Some(sides) = split(g, VertexSet::singleton(v)) {
            return Some(CliqueCutset { clique: vec![v], sides });
        }
    }
    for (u, v) in g.edges() {
        if let Some(sides) = split(g, VertexSet::singleton(u).with(v)) {
            return Some(CliqueCutset { clique: vec![u, v], sides });
        }
    }
    None
}

/// The lexicographically least induced path `(v1, v2, v3)` with `v1 < v3`
/// whose removal disconnects `g`.
pub fn find_p3_cutset(g: &Graph) -> Option<P3Cutset> {
    for v1 in 0..g.n() {
        for v2 in g.neighbors(v1) {
            for v3 in g.neighbors(v2) {
                if v3 <= v1 || g.has_edge(v1, v3) {
                    continue;
                }
                let path = [v1, v2, v3];
                if let Some(sides) = split(g, path.iter().collect()) {
                    return Some(P3Cutset { path, sides });
                }
            }
        }
    }
    None
}

/// Validates `{center} ∪ leaves` as a parity star-cutset.
///
/// Components are tried strong ones first (those where the center has a
/// neighbour), each in ascending order. `Ok(None)` means the set does not
/// disconnect the graph or no component carries even paths between every
/// two leaves; `Err` with [`DecompositionError::Exhausted`] means some
/// path search ran out of budget and no component could be confirmed.
pub fn verify_parity_star_cutset(
    g: &Graph,
    center: usize,
    leaves: VertexSet,
    limits: &Limits,
) -> Result<Option<ParityStarCutset>, DecompositionError> {
    if center >= g.n() || !leaves.is_subset(g.vertices()) {
        return Err(DecompositionError::Contract("star vertices out of range".into()));
    }
    if leaves.contains(center) || !leaves.is_subset(g.neighbors(center)) {
        return Err(DecompositionError::Contract(format!(
            "center {center} must be adjacent to every leaf of {leaves:?}"
        )));
    }
    let x = leaves.with(center);
    let Some(components) = split(g, x) else {
        return Ok(None);
    };
    let nx = g.neighbors(center);
    let mut order: Vec<VertexSet> = components.iter().copied().filter(|a| nx.intersects(*a)).collect();
    order.extend(components.iter().copied().filter(|a| !nx.intersects(*a)));
    let pairs = leaf_pairs(leaves);
    let mut exhausted: Option<Exhausted> = None;
    'component: for a in order {
        if leaves.len() >= 2 && leaves.iter().any(|l| !g.neighbors(l).intersects(a)) {
            continue;
        }
        let mut paths = Vec::with_capacity(pairs.len());
        for &(s, t) in &pairs {
            let q = PathQuery::new(s, t, a).parity(Parity::Even).min_len(2);
            match find_induced_path(g, &q, &mut limits.meter()) {
                Ok(Some(p)) => paths.push(p),
                Ok(None) => continue 'component,
                Err(e) => {
                    exhausted = Some(e);
                    continue 'component;
                }
            }
        }
        return Ok(Some(ParityStarCutset {
            center,
            leaves,
            witness_component: a,
            strong: nx.intersects(a),
            components,
            witness_paths: paths,
        }));
    }
    match exhausted {
        Some(e) => Err(e.into()),
        None => Ok(None),
    }
}

/// Greedily drops leaves, in ascending order and restarting after each
/// success, while the remainder still validates (as a strong cutset when
/// `strong` is set). The result is minimal under single-leaf deletion.
pub fn minimize_star(
    g: &Graph,
    cut: ParityStarCutset,
    strong: bool,
    limits: &Limits,
) -> Result<ParityStarCutset, DecompositionError> {
    let mut cur = cut;
    'outer: loop {
        for leaf in cur.leaves {
            match verify_parity_star_cutset(g, cur.center, cur.leaves.without(leaf), limits) {
                Ok(Some(c)) if c.strong || !strong => {
                    cur = c;
                    continue 'outer;
                }
                Ok(_) | Err(DecompositionError::Exhausted(_)) => {}
                Err(e) => return Err(e),
            }
        }
        return Ok(cur);
    }
}

/// Exhaustive search for a strong parity star-cutset: centers in ascending
/// order, leaf sets drawn from the center's neighbourhood by increasing
/// size and then lexicographically. The first hit is minimized before it is
/// returned.
///
/// Centers with more than `limits.max_star_degree` neighbours are skipped;
/// if any was skipped, or a validation ran out of budget, a fruitless
/// search is reported as indeterminate rather than as absence.
pub fn find_strong_star_bruteforce(g: &Graph, limits: &Limits) -> Result<Option<ParityStarCutset>, DecompositionError> {
    let mut skipped: Option<(usize, usize)> = None;
    let mut exhausted: Option<Exhausted> = None;
    for x in 0..g.n() {
        let nbrs = g.neighbors(x).to_vec();
        if nbrs.len() > limits.max_star_degree {
            skipped.get_or_insert((x, nbrs.len()));
            continue;
        }
        for k in 0..=nbrs.len() {
            for pick in combinations(nbrs.len(), k) {
                let leaves: VertexSet = pick.iter().map(|&i| nbrs[i]).collect();
                if split(g, leaves.with(x)).is_none() {
                    continue;
                }
                match verify_parity_star_cutset(g, x, leaves, limits) {
                    Ok(Some(c)) if c.strong => return minimize_star(g, c, true, limits).map(Some),
                    Ok(_) => {}
                    Err(DecompositionError::Exhausted(e)) => exhausted = Some(e),
                    Err(e) => return Err(e),
                }
            }
        }
    }
    if let Some((vertex, degree)) = skipped {
        return Err(DecompositionError::StarDegreeCap { vertex, degree, cap: limits.max_star_degree });
    }
    match exhausted {
        Some(e) => Err(e.into()),
        None => Ok(None),
    }
}

/// All `k`-subsets of `0..n` as ascending index lists, in lexicographic
/// order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] != i + n - k) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn two_pentagons_at_a_vertex() -> Graph {
        // pentagons 0..4 and 0,5,6,7,8 share vertex 0
        Graph::new(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6), (6, 7), (7, 8), (8, 0)]).unwrap()
    }

    #[test]
    fn combinations_in_order() {
        assert_eq!(combinations(4, 2), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(3, 3).len(), 1);
    }

    #[test]
    fn low_degree() {
        assert_eq!(find_low_degree(&fixtures::c5()), Some(0));
        assert_eq!(find_low_degree(&fixtures::petersen()), None);
        let star = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(find_low_degree(&star), Some(1));
    }

    #[test]
    fn clique_cutsets() {
        let g = two_pentagons_at_a_vertex();
        let c = find_clique_cutset(&g).unwrap();
        assert_eq!(c.clique, vec![0]);
        assert!(c.verify(&g));
        assert!(find_clique_cutset(&fixtures::petersen()).is_none());
        let p3 = Graph::path(3).unwrap();
        assert_eq!(find_clique_cutset(&p3).unwrap().clique, vec![1]);
    }

    #[test]
    fn p3_cutsets() {
        assert!(find_p3_cutset(&fixtures::petersen()).is_none());
        assert!(find_p3_cutset(&fixtures::c5()).is_none());
        let book = Graph::new(7, [(0, 1), (1, 2), (0, 3), (3, 4), (4, 2), (0, 5), (5, 6), (6, 2)]).unwrap();
        let c = find_p3_cutset(&book).unwrap();
        assert_eq!(c.path, [0, 1, 2]);
        assert!(c.verify(&book));
    }

    #[test]
    fn star_validation() {
        let lim = Limits::default();
        let g = two_pentagons_at_a_vertex();
        let c = verify_parity_star_cutset(&g, 0, VertexSet::EMPTY, &lim).unwrap().unwrap();
        assert!(c.strong && c.verify(&g));
        let path = Graph::path(4).unwrap();
        let c = verify_parity_star_cutset(&path, 1, VertexSet::singleton(2), &lim).unwrap().unwrap();
        assert!(c.verify(&path));
        let p = fixtures::petersen();
        for x in 0..10 {
            assert_eq!(verify_parity_star_cutset(&p, x, p.neighbors(x), &lim).unwrap(), None);
        }
        assert!(matches!(
            verify_parity_star_cutset(&p, 0, VertexSet::singleton(2), &lim),
            Err(DecompositionError::Contract(_))
        ));
        assert_eq!(find_strong_star_bruteforce(&p, &lim).unwrap(), None);
    }

    #[test]
    fn tampered_certificates_fail() {
        let lim = Limits::default();
        let g = two_pentagons_at_a_vertex();
        let mut c = verify_parity_star_cutset(&g, 1, VertexSet::singleton(0), &lim).unwrap().unwrap();
        assert!(c.verify(&g));
        c.strong = !c.strong;
        assert!(!c.verify(&g));
    }
}
