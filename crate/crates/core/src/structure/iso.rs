use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// An injective map from pattern vertices to host vertices; `map[i]` is the
/// image of pattern vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn image(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn image_set(&self) -> VertexSet {
        self.map.iter().collect()
    }

    /// Injective, and preserves both adjacency and non-adjacency.
    pub fn verify(&self, host: &Graph, pattern: &Graph) -> bool {
        let m = &self.map;
        if m.len() != pattern.n() || m.iter().any(|&v| v >= host.n()) || self.image_set().len() != m.len() {
            return false;
        }
        (0..m.len()).all(|i| (i + 1..m.len()).all(|j| pattern.has_edge(i, j) == host.has_edge(m[i], m[j])))
    }
}

/// An induced embedding of `pattern` into `g`, lexicographically least by
/// the images taken in the search order.
pub fn contains_induced(g: &Graph, pattern: &Graph) -> Option<Embedding> {
    if pattern.n() > g.n() {
        return None;
    }
    Matcher::new(g, pattern, false).run()
}

/// An isomorphism from `a` onto `b`, if one exists.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> Option<Embedding> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return None;
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    Matcher::new(b, a, true).run()
}

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    exact_degree: bool,
    /// Pattern vertices in the order they are matched: BFS per component,
    /// starting from a maximum-degree vertex.
    order: Vec<usize>,
    map: Vec<usize>,
}

impl<'a> Matcher<'a> {
    fn new(host: &'a Graph, pattern: &'a Graph, exact_degree: bool) -> Self {
        let mut order = Vec::with_capacity(pattern.n());
        let mut placed = VertexSet::EMPTY;
        while placed.len() < pattern.n() {
            let root = pattern
                .vertices()
                .difference(placed)
                .iter()
                .max_by_key(|&v| (pattern.degree(v), std::cmp::Reverse(v)))
                .unwrap();
            for layer in pattern.bfs_layers(root).layers {
                order.extend(layer.iter());
                placed = placed.union(layer);
            }
        }
        Matcher { host, pattern, exact_degree, order, map: vec![usize::MAX; pattern.n()] }
    }

    fn run(mut self) -> Option<Embedding> {
        self.extend(0, VertexSet::EMPTY).then_some(Embedding { map: self.map })
    }

    fn extend(&mut self, depth: usize, used: VertexSet) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let mut cand = self.host.vertices().difference(used);
        for &q in &self.order[..depth] {
            let img = self.map[q];
            if self.pattern.has_edge(p, q) {
                cand = cand.intersection(self.host.neighbors(img));
            } else {
                cand = cand.difference(self.host.neighbors(img));
            }
        }
        let need = self.pattern.degree(p);
        for v in cand {
            let d = self.host.degree(v);
            if (self.exact_degree && d != need) || d < need {
                continue;
            }
            self.map[p] = v;
            if self.extend(depth + 1, used.with(v)) {
                return true;
            }
        }
        self.map[p] = usize::MAX;
        false
    }
}
