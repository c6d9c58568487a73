use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::limits::{Exhausted, Limits, Meter};

use super::{InducedPath, StructureError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    #[default]
    Any,
    Even,
    Odd,
}

impl Parity {
    pub fn admits(self, len: usize) -> bool {
        match self {
            Parity::Any => true,
            Parity::Even => len.is_multiple_of(2),
            Parity::Odd => len % 2 == 1,
        }
    }
}

/// Which induced `s`-`t` paths to look for.
#[derive(Clone, Copy, Debug)]
pub struct PathQuery {
    pub s: usize,
    pub t: usize,
    /// Vertices the interior may use. `s` and `t` must not be members.
    pub interior: VertexSet,
    pub parity: Parity,
    /// Minimum number of edges.
    pub min_len: usize,
    /// Maximum number of edges.
    pub max_len: Option<usize>,
    /// Stop after this many paths.
    pub limit: usize,
}

impl PathQuery {
    pub fn new(s: usize, t: usize, interior: VertexSet) -> Self {
        PathQuery { s, t, interior, parity: Parity::Any, min_len: 0, max_len: None, limit: usize::MAX }
    }

    pub fn parity(self, parity: Parity) -> Self {
        PathQuery { parity, ..self }
    }

    pub fn min_len(self, min_len: usize) -> Self {
        PathQuery { min_len, ..self }
    }

    pub fn max_len(self, max_len: usize) -> Self {
        PathQuery { max_len: Some(max_len), ..self }
    }

    pub fn limit(self, limit: usize) -> Self {
        PathQuery { limit, ..self }
    }
}

/// Result of [`enumerate_induced_paths`]. `paths` is complete unless
/// `exhausted` is set or `limit` paths were collected.
#[derive(Clone, Debug, Default)]
pub struct PathEnumeration {
    pub paths: Vec<InducedPath>,
    pub exhausted: bool,
}

/// Induced `s`-`t` paths with interior inside `query.interior`, in
/// lexicographic order of their vertex sequences.
///
/// Depth-first from `s`. A partial path is abandoned as soon as its last
/// vertex could not be followed by an induced completion: `t` adjacent to an
/// earlier vertex, or `t` unreachable through still-admissible vertices.
pub fn enumerate_induced_paths(g: &Graph, query: &PathQuery, meter: &mut Meter) -> PathEnumeration {
    let mut out = PathEnumeration::default();
    if query.s == query.t || query.limit == 0 {
        return out;
    }
    let interior = query.interior.without(query.s).without(query.t).intersection(g.vertices());
    let mut dfs = Dfs { g, q: query, interior, path: vec![query.s], found: &mut out.paths, meter };
    if dfs.extend(VertexSet::EMPTY).is_err() {
        out.exhausted = true;
    }
    out
}

/// First path [`enumerate_induced_paths`] would report.
pub fn find_induced_path(g: &Graph, query: &PathQuery, meter: &mut Meter) -> Result<Option<InducedPath>, Exhausted> {
    let res = enumerate_induced_paths(g, &query.limit(1), meter);
    match res.paths.into_iter().next() {
        Some(p) => Ok(Some(p)),
        None if res.exhausted => Err(Exhausted(meter.used())),
        None => Ok(None),
    }
}

struct Dfs<'a> {
    g: &'a Graph,
    q: &'a PathQuery,
    interior: VertexSet,
    path: Vec<usize>,
    found: &'a mut Vec<InducedPath>,
    meter: &'a mut Meter,
}

/// `Err(None)` stops early because the limit was hit.
type Step = Result<(), Option<Exhausted>>;

impl Dfs<'_> {
    /// `blocked` is the union of closed neighbourhoods of every path vertex
    /// except the last.
    fn extend(&mut self, blocked: VertexSet) -> Result<(), Exhausted> {
        match self.step(blocked) {
            Ok(()) | Err(None) => Ok(()),
            Err(Some(e)) => Err(e),
        }
    }

    fn step(&mut self, blocked: VertexSet) -> Step {
        let g = self.g;
        let t = self.q.t;
        let last = *self.path.last().unwrap();
        let len = self.path.len() - 1;
        if blocked.contains(t) {
            return Ok(());
        }
        if g.has_edge(last, t) {
            // t is forced next; nothing can continue past last
            let total = len + 1;
            if total >= self.q.min_len && self.q.max_len.is_none_or(|m| total <= m) && self.q.parity.admits(total) {
                let mut p = self.path.clone();
                p.push(t);
                self.found.push(InducedPath(p));
                if self.found.len() >= self.q.limit {
                    return Err(None);
                }
            }
            return Ok(());
        }
        let next_blocked = blocked.union(g.closed_neighbors(last));
        let open = self.interior.difference(next_blocked);
        let targets = g.neighbors(t);
        for w in g.neighbors(last).difference(blocked).intersection(self.interior) {
            self.meter.tick().map_err(Some)?;
            // t must stay reachable from w through admissible vertices
            let remaining = match self.q.max_len {
                Some(m) => m.checked_sub(len + 2),
                None => Some(usize::MAX),
            };
            let Some(remaining) = remaining else { continue };
            if !reaches_within(g, w, open, targets, remaining) {
                continue;
            }
            self.path.push(w);
            let r = self.step(next_blocked);
            self.path.pop();
            r?;
        }
        Ok(())
    }
}

/// Whether some vertex of `targets` is within `steps` moves of `from` using
/// only vertices of `within`.
fn reaches_within(g: &Graph, from: usize, within: VertexSet, targets: VertexSet, steps: usize) -> bool {
    let mut seen = VertexSet::singleton(from);
    let mut frontier = seen;
    let mut k = 0;
    loop {
        if frontier.intersects(targets) {
            return true;
        }
        if k == steps {
            return false;
        }
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next = next.union(g.neighbors(v));
        }
        next = next.intersection(within).difference(seen);
        if next.is_empty() {
            return false;
        }
        seen = seen.union(next);
        frontier = next;
        k += 1;
    }
}

fn require_nonadjacent(h: &Graph, s: usize, t: usize) -> Result<(), StructureError> {
    if s >= h.n() || t >= h.n() {
        return Err(StructureError::Contract(format!("vertex out of range ({s}, {t})")));
    }
    if s == t || h.has_edge(s, t) {
        return Err(StructureError::Contract(format!("{s} and {t} must be distinct and nonadjacent")));
    }
    Ok(())
}

/// `s, t` are linked in `h`: induced `s`-`t` paths of length at least three
/// exist with both parities.
pub fn is_linked(h: &Graph, s: usize, t: usize, limits: &Limits) -> Result<bool, StructureError> {
    require_nonadjacent(h, s, t)?;
    let rest = h.vertices().without(s).without(t);
    let odd = PathQuery::new(s, t, rest).parity(Parity::Odd).min_len(3);
    if find_induced_path(h, &odd, &mut limits.meter())?.is_none() {
        return Ok(false);
    }
    let even = PathQuery::new(s, t, rest).parity(Parity::Even).min_len(4);
    Ok(find_induced_path(h, &even, &mut limits.meter())?.is_some())
}

/// `s, t` are odd-linked in `h`: some induced `s`-`t` path has odd length at
/// least five.
pub fn is_odd_linked(h: &Graph, s: usize, t: usize, limits: &Limits) -> Result<bool, StructureError> {
    require_nonadjacent(h, s, t)?;
    let rest = h.vertices().without(s).without(t);
    let q = PathQuery::new(s, t, rest).parity(Parity::Odd).min_len(5);
    Ok(find_induced_path(h, &q, &mut limits.meter())?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, label};

    fn all_paths(g: &Graph, s: usize, t: usize) -> Vec<InducedPath> {
        let q = PathQuery::new(s, t, g.vertices());
        let res = enumerate_induced_paths(g, &q, &mut Meter::new(u64::MAX));
        assert!(!res.exhausted);
        res.paths
    }

    #[test]
    fn pentagon_has_two_paths_between_nonadjacent_vertices() {
        let c5 = fixtures::c5();
        let paths = all_paths(&c5, 0, 2);
        let lens: Vec<usize> = paths.iter().map(|p| p.len()).collect();
        assert_eq!(lens, vec![2, 3]);
        assert!(paths.iter().all(|p| p.verify(&c5)));
    }

    #[test]
    fn adjacent_ends_give_only_the_edge() {
        let c5 = fixtures::c5();
        let paths = all_paths(&c5, 0, 1);
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].vertices(), &[0, 1]);
    }

    #[test]
    fn filters_and_limit() {
        let p = fixtures::petersen();
        let rest = p.vertices().without(0).without(2);
        let q = PathQuery::new(0, 2, rest).parity(Parity::Even).min_len(4);
        let res = enumerate_induced_paths(&p, &q, &mut Meter::new(u64::MAX));
        assert!(!res.paths.is_empty());
        assert!(res.paths.iter().all(|x| x.len() % 2 == 0 && x.len() >= 4 && x.verify(&p)));
        let mut sorted = res.paths.clone();
        sorted.sort();
        assert_eq!(sorted, res.paths);
        let one = enumerate_induced_paths(&p, &q.limit(1), &mut Meter::new(u64::MAX));
        assert_eq!(one.paths, res.paths[..1].to_vec());
        let short = enumerate_induced_paths(&p, &q.max_len(4), &mut Meter::new(u64::MAX));
        assert!(short.paths.iter().all(|x| x.len() == 4));
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let p = fixtures::petersen();
        let q = PathQuery::new(0, 2, p.vertices());
        let res = enumerate_induced_paths(&p, &q, &mut Meter::new(3));
        assert!(res.exhausted);
        assert!(find_induced_path(&p, &q.parity(Parity::Even).min_len(20), &mut Meter::new(3)).is_err());
    }

    #[test]
    fn p2_pair_1_3_has_no_long_even_path() {
        let p2 = fixtures::p2();
        let (s, t) = (label(1), label(3));
        let q = PathQuery::new(s, t, p2.vertices().without(s).without(t)).parity(Parity::Even).min_len(4);
        assert!(enumerate_induced_paths(&p2, &q, &mut Meter::new(u64::MAX)).paths.is_empty());
    }

    #[test]
    fn linked_pairs() {
        let lim = Limits::default();
        let p = fixtures::petersen();
        for s in 0..10 {
            for t in s + 1..10 {
                if !p.has_edge(s, t) {
                    assert!(is_linked(&p, s, t, &lim).unwrap(), "{s} {t}");
                }
            }
        }
        let c5 = fixtures::c5();
        assert!(!is_linked(&c5, 0, 2, &lim).unwrap());
        assert!(!is_odd_linked(&c5, 0, 2, &lim).unwrap());
        assert!(matches!(is_linked(&c5, 0, 1, &lim), Err(StructureError::Contract(_))));
    }

    #[test]
    fn odd_linked_pairs() {
        let lim = Limits::default();
        let p0 = fixtures::p0();
        assert!(is_odd_linked(&p0, label(9), label(10), &lim).unwrap());
        // C7 pair at distance 3: the two arcs have lengths 3 and 4
        let c7 = fixtures::c7();
        assert!(!is_odd_linked(&c7, 0, 3, &lim).unwrap());
    }
}
