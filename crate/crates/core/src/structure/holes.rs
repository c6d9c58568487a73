use std::collections::VecDeque;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::limits::{Exhausted, Limits, Meter};

use super::{Hole, Parity};

/// Which induced cycles [`enumerate_holes`] reports.
#[derive(Clone, Copy, Debug)]
pub struct HoleQuery {
    pub min_len: usize,
    pub max_len: Option<usize>,
    pub parity: Parity,
    pub limit: usize,
}

impl HoleQuery {
    pub fn new() -> Self {
        HoleQuery { min_len: 3, max_len: None, parity: Parity::Any, limit: usize::MAX }
    }
}

impl Default for HoleQuery {
    fn default() -> Self {
        Self::new()
    }
}

/// Induced cycles of `g` matching `query`, each in canonical form
/// ([`Hole::canonical`]) and sorted lexicographically. With a `limit`, the
/// holes kept are the first found in search order, which is lexicographic
/// among holes of one length.
///
/// A cycle is grown from its minimum vertex `s` through its smaller
/// neighbour `a`; interior vertices avoid `N(s)` and the cycle closes at a
/// neighbour `b > a` of `s`.
pub fn enumerate_holes(g: &Graph, query: &HoleQuery, meter: &mut Meter) -> Result<Vec<Hole>, Exhausted> {
    let mut out = Vec::new();
    for s in 0..g.n() {
        let above = g.vertices().difference(VertexSet::full(s + 1));
        for a in g.neighbors(s).intersection(above) {
            let mut search = CycleSearch {
                g,
                q: query,
                closers: g.neighbors(s).intersection(above).difference(VertexSet::full(a + 1)),
                interior: above.difference(g.neighbors(s)),
                path: vec![s, a],
                out: &mut out,
                meter,
            };
            if search.grow(VertexSet::singleton(s))? {
                out.sort();
                return Ok(out);
            }
        }
    }
    out.sort();
    Ok(out)
}

struct CycleSearch<'a> {
    g: &'a Graph,
    q: &'a HoleQuery,
    /// Neighbours of `s` that may close the cycle.
    closers: VertexSet,
    /// Vertices allowed strictly inside the `a .. b` arc.
    interior: VertexSet,
    path: Vec<usize>,
    out: &'a mut Vec<Hole>,
    meter: &'a mut Meter,
}

impl CycleSearch<'_> {
    /// `blocked` is the union of closed neighbourhoods of path vertices other
    /// than `s` and the last one, plus `s` itself. Returns `true` once the
    /// limit is reached.
    fn grow(&mut self, blocked: VertexSet) -> Result<bool, Exhausted> {
        let g = self.g;
        let last = *self.path.last().unwrap();
        let len = self.path.len(); // cycle length if closed back to s now
        let cand = g.neighbors(last).difference(blocked);
        // closing vertex b: cycle s, a, ..., last, b
        for b in cand.intersection(self.closers) {
            self.meter.tick()?;
            let total = len + 1;
            if total >= self.q.min_len && self.q.max_len.is_none_or(|m| total <= m) && self.q.parity.admits(total) {
                let mut c = self.path.clone();
                c.push(b);
                self.out.push(Hole(c));
                if self.out.len() >= self.q.limit {
                    return Ok(true);
                }
            }
        }
        let next_blocked = blocked.union(g.closed_neighbors(last));
        if self.closers.is_subset(next_blocked) {
            return Ok(false);
        }
        let open = self.interior.difference(next_blocked);
        let closers = self.closers.difference(next_blocked);
        for w in cand.intersection(self.interior) {
            self.meter.tick()?;
            // need w -> ... -> b with b in closers, total length <= max_len
            let budget = self.q.max_len.map(|m| m.saturating_sub(len + 1));
            if !self.can_close(w, open, closers, budget) {
                continue;
            }
            self.path.push(w);
            let stop = self.grow(next_blocked)?;
            self.path.pop();
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn can_close(&self, from: usize, within: VertexSet, closers: VertexSet, budget: Option<usize>) -> bool {
        let g = self.g;
        let mut seen = VertexSet::singleton(from);
        let mut frontier = seen;
        let mut k = 0;
        loop {
            // one more step reaches a closer
            let reach = frontier.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(g.neighbors(v)));
            if reach.intersects(closers) {
                return budget.is_none_or(|b| k < b);
            }
            if budget.is_some_and(|b| k + 1 >= b) {
                return false;
            }
            let next = reach.intersection(within).difference(seen);
            if next.is_empty() {
                return false;
            }
            seen = seen.union(next);
            frontier = next;
            k += 1;
        }
    }
}

/// All induced 5-cycles, canonical and in lexicographic order.
pub fn five_holes(g: &Graph) -> Vec<Hole> {
    let q = HoleQuery { min_len: 5, max_len: Some(5), ..HoleQuery::new() };
    enumerate_holes(g, &q, &mut Meter::new(u64::MAX)).expect("unbounded meter")
}

/// An induced odd cycle of length at least seven, if one exists.
///
/// `Err` means the step budget ran out before the search was complete.
pub fn find_long_odd_hole(g: &Graph, limits: &Limits) -> Result<Option<Hole>, Exhausted> {
    let q = HoleQuery { min_len: 7, max_len: None, parity: Parity::Odd, limit: 1 };
    Ok(enumerate_holes(g, &q, &mut limits.meter())?.into_iter().next())
}

/// A shortest odd cycle; `None` iff `g` is bipartite.
///
/// A shortest odd cycle has no chords, so the result is an induced cycle.
/// Among all shortest odd cycles the lexicographically least canonical one
/// is returned.
pub fn shortest_odd_cycle(g: &Graph) -> Option<Hole> {
    let len = shortest_odd_cycle_len(g)?;
    let q = HoleQuery { min_len: len, max_len: Some(len), parity: Parity::Odd, limit: 1 };
    let found = enumerate_holes(g, &q, &mut Meter::new(u64::MAX)).expect("unbounded meter");
    found.into_iter().next()
}

/// Length of a shortest odd closed walk, which equals the odd girth.
fn shortest_odd_cycle_len(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                } else if dist[v] == dist[u] {
                    let len = 2 * dist[u] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}
