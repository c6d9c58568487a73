//! Immutable simple graphs and the elementary algorithms everything else
//! builds on.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::bitset::{VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {n} vertices, more than the cap of {cap}")]
    TooManyVertices { n: usize, cap: usize },
    #[error("edge ({u}, {v}) names a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as one [`VertexSet`] per vertex; it is symmetric and
/// irreflexive by construction. Graphs are never mutated after construction:
/// deleting vertices produces an [`InducedSubgraph`] carrying the relabeling.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n, cap: MAX_VERTICES });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        Graph::new(n, std::iter::empty())
    }

    /// The cycle `0-1-...-(n-1)-0`.
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        Graph::new(n, (1..n).map(|i| (i - 1, i)))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// Vertices outside `set` with a neighbour in `set`.
    pub fn neighborhood_of(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v])).difference(set)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// `G[keep]`, relabeled to `0..|keep|` in ascending order.
    pub fn induced(&self, keep: VertexSet) -> InducedSubgraph {
        let to_host = keep.intersection(self.vertices()).to_vec();
        let mut from_host = vec![None; self.n()];
        for (i, &v) in to_host.iter().enumerate() {
            from_host[v] = Some(i);
        }
        let adj = to_host
            .iter()
            .map(|&v| self.adj[v].intersection(keep).iter().map(|w| from_host[w].unwrap()).collect())
            .collect();
        InducedSubgraph { graph: Graph { adj }, to_host, from_host }
    }

    /// `G \ remove`.
    pub fn without(&self, remove: VertexSet) -> InducedSubgraph {
        self.induced(self.vertices().difference(remove))
    }

    /// Copy of the graph with one extra edge. Used by the generators.
    pub(crate) fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj[u].insert(v);
        adj[v].insert(u);
        Graph { adj }
    }

    /// Vertices reachable from `from` using only vertices of `within`.
    /// `from` itself is included even when it lies outside `within`.
    pub fn reachable(&self, from: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(from);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            next = next.intersection(within).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// Connected components of `G[set]`, ordered by minimum vertex.
    pub fn components_of(&self, set: VertexSet) -> Vec<VertexSet> {
        let mut rest = set;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.reachable(v, set);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Connected components of `G`, ordered by minimum vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_of(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether `G[set]` is connected (the empty set counts as connected).
    pub fn is_connected_set(&self, set: VertexSet) -> bool {
        match set.first() {
            None => true,
            Some(v) => self.reachable(v, set) == set,
        }
    }

    /// Distance layers around `source`; unreachable vertices are left out.
    pub fn bfs_layers(&self, source: usize) -> Layering {
        let mut seen = VertexSet::singleton(source);
        let mut layers = vec![seen];
        loop {
            let last = *layers.last().unwrap();
            let next = self.neighborhood_of(last).difference(seen);
            if next.is_empty() {
                break;
            }
            seen = seen.union(next);
            layers.push(next);
        }
        Layering { source, layers }
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        for (k, layer) in self.bfs_layers(source).layers.iter().enumerate() {
            for v in layer.iter() {
                dist[v] = Some(k);
            }
        }
        dist
    }

    /// Length of a shortest `u`-`v` path, `None` when disconnected.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.distances_from(u)[v]
    }

    /// Shortest path between `u` and `v` whose interior lies in `within`.
    pub fn shortest_path_within(&self, u: usize, v: usize, within: VertexSet) -> Option<Vec<usize>> {
        if u == v {
            return Some(vec![u]);
        }
        let mut parent = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::from([u]);
        parent[u] = u;
        while let Some(x) = queue.pop_front() {
            for y in self.adj[x] {
                if parent[y] != usize::MAX {
                    continue;
                }
                if y == v {
                    parent[y] = x;
                    let mut path = vec![v];
                    let mut cur = x;
                    while cur != u {
                        path.push(cur);
                        cur = parent[cur];
                    }
                    path.push(u);
                    path.reverse();
                    return Some(path);
                }
                if within.contains(y) {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Proper 2-colouring, or an odd cycle proving none exists.
    pub fn bipartition(&self) -> Bipartition {
        let n = self.n();
        let mut side = vec![u8::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        for root in 0..n {
            if side[root] != u8::MAX {
                continue;
            }
            side[root] = 0;
            parent[root] = root;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for v in self.adj[u] {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    } else if side[v] == side[u] {
                        return Bipartition::OddCycle(tree_cycle(u, v, &parent, &depth));
                    }
                }
            }
        }
        Bipartition::TwoColoring(side)
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartition::TwoColoring(_))
    }

    /// A shortest cycle, `None` for forests.
    pub fn shortest_cycle(&self) -> Option<Vec<usize>> {
        let n = self.n();
        // (length, u, v, BFS parents, BFS depths) of the best closing edge uv
        #[allow(clippy::type_complexity)]
        let mut best: Option<(usize, usize, usize, Vec<usize>, Vec<usize>)> = None;
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        for root in 0..n {
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            parent[root] = root;
            depth[root] = 0;
            let mut queue = VecDeque::from([root]);
            'bfs: while let Some(u) = queue.pop_front() {
                if let Some((len, ..)) = best {
                    // every cycle closed from here has length >= 2*depth+1
                    if 2 * depth[u] + 1 >= len {
                        break 'bfs;
                    }
                }
                for v in self.adj[u] {
                    if parent[v] == usize::MAX {
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = depth[u] + depth[v] + 1;
                        if best.as_ref().is_none_or(|b| len < b.0) {
                            best = Some((len, u, v, parent.clone(), depth.clone()));
                        }
                    }
                }
            }
        }
        best.map(|(_, u, v, parent, depth)| tree_cycle(u, v, &parent, &depth))
    }

    /// Minimum cycle length, `None` (infinite) for forests.
    pub fn girth(&self) -> Option<usize> {
        self.shortest_cycle().map(|c| c.len())
    }
}

/// Closes the BFS-tree paths from `u` and `v` (joined by an edge) into a cycle
/// through their lowest common ancestor.
fn tree_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// An induced subgraph together with the maps back to its host.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `to_host[i]` is the host vertex behind subgraph vertex `i`.
    pub to_host: Vec<usize>,
    from_host: Vec<Option<usize>>,
}

impl InducedSubgraph {
    pub fn host_vertex(&self, v: usize) -> usize {
        self.to_host[v]
    }

    pub fn local_vertex(&self, host: usize) -> Option<usize> {
        self.from_host.get(host).copied().flatten()
    }

    /// Host set translated into subgraph ids; members not kept are dropped.
    pub fn local_set(&self, host: VertexSet) -> VertexSet {
        host.iter().filter_map(|v| self.local_vertex(v)).collect()
    }

    pub fn host_set(&self, local: VertexSet) -> VertexSet {
        local.iter().map(|v| self.to_host[v]).collect()
    }
}

/// BFS distance layers `L_0 = {source}, L_1, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Layering {
    pub source: usize,
    pub layers: Vec<VertexSet>,
}

impl Layering {
    pub fn sizes(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.len()).collect()
    }

    /// Index of the layer holding `v`, if `v` was reached.
    pub fn layer_of(&self, v: usize) -> Option<usize> {
        self.layers.iter().position(|l| l.contains(v))
    }

    pub fn covered(&self) -> VertexSet {
        self.layers.iter().fold(VertexSet::EMPTY, |a, &l| a.union(l))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartition {
    /// Side (0 or 1) of every vertex.
    TwoColoring(Vec<u8>),
    /// An odd cycle, as a vertex sequence.
    OddCycle(Vec<usize>),
}
