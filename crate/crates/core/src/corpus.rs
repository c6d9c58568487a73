//! Pentagraph corpora: exhaustive enumeration for small vertex counts and
//! seeded random generation for larger ones.

use std::collections::HashMap;
use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::recognition::recognize;
use crate::structure::{find_induced_path, is_isomorphic, Parity, PathQuery};

/// Largest vertex count the exhaustive mode accepts.
pub const EXHAUSTIVE_MAX_N: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Random,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CorpusSpec {
    pub mode: Mode,
    pub n_min: usize,
    pub n_max: usize,
    pub seed: u64,
    /// Stop after this many graphs (random mode: exactly this many).
    pub target_count: Option<usize>,
    /// Random mode: each graph draws `p` uniformly from this range and
    /// accepts each admissible pair with probability `p`.
    pub edge_probability: (f64, f64),
    /// Exhaustive mode: every labeled graph instead of one per isomorphism
    /// class.
    pub labeled: bool,
    pub limits: Limits,
}

impl CorpusSpec {
    pub fn exhaustive(n_max: usize) -> Self {
        CorpusSpec {
            mode: Mode::Exhaustive,
            n_min: 1,
            n_max,
            seed: 0,
            target_count: None,
            edge_probability: (0.5, 1.0),
            labeled: false,
            limits: Limits::default(),
        }
    }

    pub fn random(n_min: usize, n_max: usize, count: usize, seed: u64) -> Self {
        CorpusSpec { mode: Mode::Random, n_min, n_max, seed, target_count: Some(count), ..Self::exhaustive(n_max) }
    }

    pub fn validate(&self) -> Result<(), CorpusError> {
        if self.n_min > self.n_max {
            return Err(CorpusError::InvalidSpec(format!("n_min {} exceeds n_max {}", self.n_min, self.n_max)));
        }
        if self.n_max > MAX_VERTICES {
            return Err(CorpusError::InvalidSpec(format!(
                "n_max {} exceeds the vertex cap {MAX_VERTICES}",
                self.n_max
            )));
        }
        if self.mode == Mode::Exhaustive && self.n_max > EXHAUSTIVE_MAX_N {
            return Err(CorpusError::InvalidSpec(format!("exhaustive mode needs n_max <= {EXHAUSTIVE_MAX_N}")));
        }
        let (lo, hi) = self.edge_probability;
        if !(0.0..=1.0).contains(&lo) || !(0.0..=1.0).contains(&hi) || lo > hi {
            return Err(CorpusError::InvalidSpec(format!("bad edge probability range ({lo}, {hi})")));
        }
        if self.mode == Mode::Random && self.target_count.is_none() {
            return Err(CorpusError::InvalidSpec("random mode needs a target count".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("invalid corpus spec: {0}")]
    InvalidSpec(String),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CorpusSummary {
    pub emitted: usize,
    /// Generation stopped early (target count reached or the consumer
    /// broke off).
    pub truncated: bool,
    /// Candidates dropped because recognition ran out of budget.
    pub indeterminate: usize,
}

/// Streams the corpus described by `spec` into `visit`.
pub fn visit_corpus<F>(spec: &CorpusSpec, mut visit: F) -> Result<CorpusSummary, CorpusError>
where
    F: FnMut(Graph) -> ControlFlow<()>,
{
    spec.validate()?;
    let mut summary = CorpusSummary::default();
    let limit = spec.target_count.unwrap_or(usize::MAX);
    let mut emit = |g: Graph, summary: &mut CorpusSummary| -> ControlFlow<()> {
        if summary.emitted >= limit {
            summary.truncated = true;
            return ControlFlow::Break(());
        }
        let report = recognize(&g, &spec.limits);
        if report.is_pentagraph() {
            summary.emitted += 1;
            if visit(g).is_break() {
                summary.truncated = true;
                return ControlFlow::Break(());
            }
        } else if report.verdict == crate::recognition::Verdict::Indeterminate {
            summary.indeterminate += 1;
        }
        ControlFlow::Continue(())
    };
    match spec.mode {
        Mode::Exhaustive if spec.labeled => {
            for n in spec.n_min..=spec.n_max {
                if for_each_labeled_girth5(n, |g| emit(g, &mut summary)).is_break() {
                    break;
                }
            }
        }
        Mode::Exhaustive => {
            let _ = for_each_girth5_unlabeled(spec.n_min, spec.n_max, |g| emit(g, &mut summary));
        }
        Mode::Random => {
            let mut master = ChaCha8Rng::seed_from_u64(spec.seed);
            while summary.emitted < limit {
                let seed: u64 = master.gen();
                let n = master.gen_range(spec.n_min..=spec.n_max);
                let (lo, hi) = spec.edge_probability;
                let p = if lo == hi { lo } else { master.gen_range(lo..=hi) };
                let g = random_pentagraph(n, p, seed, &spec.limits);
                if emit(g, &mut summary).is_break() {
                    break;
                }
            }
        }
    }
    Ok(summary)
}

/// Collects [`visit_corpus`] into a vector.
pub fn generate_corpus(spec: &CorpusSpec) -> Result<(Vec<Graph>, CorpusSummary), CorpusError> {
    let mut out = Vec::new();
    let summary = visit_corpus(spec, |g| {
        out.push(g);
        ControlFlow::Continue(())
    })?;
    Ok((out, summary))
}

/// Every labeled graph on `0..n` with girth at least five, each exactly
/// once.
///
/// Pairs are decided in lexicographic order; a pair is included only when
/// its ends are at distance at least four (or disconnected) in the graph
/// built so far, so every cycle is checked when its last edge is added.
pub fn for_each_labeled_girth5<F>(n: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(Graph) -> ControlFlow<()>,
{
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let g = Graph::empty(n).expect("n within the cap");
    labeled_rec(&g, &pairs, 0, &mut visit)
}

fn labeled_rec<F>(g: &Graph, pairs: &[(usize, usize)], i: usize, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(Graph) -> ControlFlow<()>,
{
    let Some(&(u, v)) = pairs.get(i) else {
        return visit(g.clone());
    };
    labeled_rec(g, pairs, i + 1, visit)?;
    if far_apart(g, u, v) {
        labeled_rec(&g.with_edge(u, v), pairs, i + 1, visit)?;
    }
    ControlFlow::Continue(())
}

/// `u, v` at distance at least four, or disconnected.
fn far_apart(g: &Graph, u: usize, v: usize) -> bool {
    let mut seen = VertexSet::singleton(u);
    let mut frontier = seen;
    for _ in 0..3 {
        frontier = g.neighborhood_of(frontier).difference(seen);
        if frontier.contains(v) {
            return false;
        }
        seen = seen.union(frontier);
    }
    true
}

/// One graph per isomorphism class of girth-at-least-five graphs with
/// `n_min..=n_max` vertices, by vertex count and then generation order.
///
/// Classes on `k + 1` vertices are grown from classes on `k` vertices by
/// adding a vertex adjacent to a set of vertices pairwise at distance at
/// least three; since girth at least five is hereditary, every class is
/// reached. Duplicates are removed by an invariant bucket followed by an
/// exact isomorphism test.
pub fn for_each_girth5_unlabeled<F>(n_min: usize, n_max: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(Graph) -> ControlFlow<()>,
{
    let mut level = vec![Graph::empty(0).expect("valid")];
    for n in 0..=n_max {
        if n >= n_min {
            for g in &level {
                visit(g.clone())?;
            }
        }
        if n == n_max {
            break;
        }
        let mut buckets: HashMap<Vec<(usize, Vec<usize>)>, Vec<usize>> = HashMap::new();
        let mut next: Vec<Graph> = Vec::new();
        for g in &level {
            for s in independent_far_sets(g) {
                let edges = g.edges().into_iter().chain(s.iter().map(|u| (u, n)));
                let h = Graph::new(n + 1, edges).expect("valid");
                let key = invariant(&h);
                let bucket = buckets.entry(key).or_default();
                if bucket.iter().any(|&i| is_isomorphic(&next[i], &h).is_some()) {
                    continue;
                }
                bucket.push(next.len());
                next.push(h);
            }
        }
        level = next;
    }
    ControlFlow::Continue(())
}

/// Vertex sets of `g` whose members are pairwise at distance at least
/// three, in lexicographic order of their sorted members.
fn independent_far_sets(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let ball2: Vec<VertexSet> =
        (0..n).map(|v| g.neighborhood_of(g.closed_neighbors(v)).union(g.closed_neighbors(v))).collect();
    let mut out = Vec::new();
    fn rec(start: usize, n: usize, cur: VertexSet, banned: VertexSet, ball2: &[VertexSet], out: &mut Vec<VertexSet>) {
        out.push(cur);
        for v in start..n {
            if !banned.contains(v) {
                rec(v + 1, n, cur.with(v), banned.union(ball2[v]), ball2, out);
            }
        }
    }
    rec(0, n, VertexSet::EMPTY, VertexSet::EMPTY, &ball2, &mut out);
    out
}

fn invariant(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let mut key: Vec<(usize, Vec<usize>)> = (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|u| g.degree(u)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    key.sort_unstable();
    key
}

/// A random pentagraph on `n` vertices.
///
/// Vertex pairs are visited in a random order and each is added with
/// probability `p` when the result stays a pentagraph: the ends must be at
/// distance at least four (no cycle shorter than five) and joined by no
/// induced path of even length at least six (no induced odd cycle of
/// length at least seven through the new edge). A pair whose path search
/// runs out of budget is skipped.
pub fn random_pentagraph(n: usize, p: f64, seed: u64, limits: &Limits) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut rng);
    let mut g = Graph::empty(n).expect("n within the cap");
    for (u, v) in pairs {
        if !rng.gen_bool(p) || !far_apart(&g, u, v) {
            continue;
        }
        let rest = g.vertices().without(u).without(v);
        let q = PathQuery::new(u, v, rest).parity(Parity::Even).min_len(6);
        if let Ok(None) = find_induced_path(&g, &q, &mut limits.meter()) {
            g = g.with_edge(u, v);
        }
    }
    g
}
