//! Seeded sample graphs for property tests that need more structure than
//! the plain corpora provide.

use pentagraph::{fixtures, recognize, Graph, Limits};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Disjoint copies of Petersen-family blocks and pentagons, joined by
/// random edges that keep the graph a pentagraph. Vertices of degree at
/// most two are preferred as edge ends, so many samples have minimum
/// degree three.
pub fn glued_blocks(seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let blocks = [fixtures::petersen(), fixtures::p0(), fixtures::p1(), fixtures::p2(), fixtures::c5()];
    let mut n = 0;
    let mut edges = Vec::new();
    for _ in 0..rng.gen_range(2..=3) {
        let b = &blocks[rng.gen_range(0..blocks.len())];
        edges.extend(b.edges().into_iter().map(|(u, v)| (u + n, v + n)));
        n += b.n();
    }
    let mut g = Graph::new(n, edges).unwrap();
    let limits = Limits::default();
    for _ in 0..20 * n {
        let low: Vec<usize> = (0..n).filter(|&v| g.degree(v) <= 2 || rng.gen_bool(0.1)).collect();
        if low.is_empty() {
            break;
        }
        let u = low[rng.gen_range(0..low.len())];
        let v = rng.gen_range(0..n);
        if u == v || g.has_edge(u, v) {
            continue;
        }
        let mut e = g.edges();
        e.push((u, v));
        let h = Graph::new(n, e).unwrap();
        if recognize(&h, &limits).is_pentagraph() {
            g = h;
        }
    }
    g
}

/// A random proper colouring from greedy colouring in a random
/// vertex order with random colour choices among `1..=k`, or `None` when
/// the greedy pass gets stuck.
pub fn random_coloring(g: &Graph, k: u8, rng: &mut impl Rng) -> Option<Vec<u8>> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    rand::seq::SliceRandom::shuffle(&mut order[..], rng);
    let mut colors = vec![0u8; g.n()];
    for v in order {
        let free: Vec<u8> = (1..=k).filter(|&c| g.neighbors(v).iter().all(|u| colors[u] != c)).collect();
        if free.is_empty() {
            return None;
        }
        colors[v] = free[rng.gen_range(0..free.len())];
    }
    Some(colors)
}
