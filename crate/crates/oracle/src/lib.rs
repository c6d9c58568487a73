//! Brute-force reference implementations for cross-checking `pentagraph`.
//!
//! Everything here works from adjacency queries alone, over raw `u64`
//! subset masks, and is exponential by design. Intended for n ≤ 12 or so.

#![allow(clippy::needless_range_loop)]

use pentagraph::Graph;

pub mod samples;

/// Adjacency rows as plain masks.
pub fn adjacency(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 64, "oracles use single-word masks");
    (0..g.n()).map(|u| (0..g.n()).filter(|&v| g.has_edge(u, v)).fold(0u64, |m, v| m | 1 << v)).collect()
}

fn members(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&v| mask >> v & 1 == 1)
}

fn connected(adj: &[u64], set: u64) -> bool {
    if set == 0 {
        return true;
    }
    let mut seen = set & set.wrapping_neg();
    loop {
        let next = members(seen).fold(seen, |acc, v| acc | (adj[v] & set));
        if next == seen {
            return seen == set;
        }
        seen = next;
    }
}

/// Vertex sets of all induced cycles (of any length ≥ 3), as masks.
pub fn induced_cycle_sets(g: &Graph) -> Vec<u64> {
    let adj = adjacency(g);
    let n = g.n();
    (0u64..1 << n)
        .filter(|&s| s.count_ones() >= 3)
        .filter(|&s| members(s).all(|v| (adj[v] & s).count_ones() == 2) && connected(&adj, s))
        .collect()
}

/// Pentagraph membership straight from the definition: no induced cycle of
/// length 3 or 4 and no induced odd cycle longer than 5.
pub fn is_pentagraph(g: &Graph) -> bool {
    induced_cycle_sets(g).iter().all(|s| {
        let k = s.count_ones();
        k >= 5 && (k % 2 == 0 || k == 5)
    })
}

/// Girth from edge deletion: the shortest cycle through `uv` is one more
/// than the `u`-`v` distance once `uv` is removed.
pub fn girth(g: &Graph) -> Option<usize> {
    let adj = adjacency(g);
    let mut best: Option<usize> = None;
    for u in 0..g.n() {
        for v in members(adj[u]).filter(|&v| v > u) {
            let mut dist = vec![usize::MAX; g.n()];
            dist[u] = 0;
            let mut queue = std::collections::VecDeque::from([u]);
            while let Some(x) = queue.pop_front() {
                for y in members(adj[x]) {
                    if (x, y) == (u, v) || dist[y] != usize::MAX {
                        continue;
                    }
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
            if dist[v] != usize::MAX {
                best = Some(best.map_or(dist[v] + 1, |b| b.min(dist[v] + 1)));
            }
        }
    }
    best
}

/// All-pairs distances by Floyd-Warshall; `None` when disconnected.
pub fn distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.n();
    let mut d: Vec<Vec<Option<usize>>> = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| {
                    if u == v {
                        Some(0)
                    } else if g.has_edge(u, v) {
                        Some(1)
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Bipartiteness by trying every 2-colouring with vertex 0 fixed.
pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let edges = g.edges();
    (0u64..1 << (n - 1)).any(|m| {
        let side = |v: usize| if v == 0 { 0 } else { m >> (v - 1) & 1 };
        edges.iter().all(|&(u, v)| side(u) != side(v))
    })
}

/// Whether some cycle, not necessarily induced, has odd length. An odd
/// closed walk contains an odd cycle, so an odd induced cycle exists iff one
/// exists at all.
pub fn has_odd_cycle(g: &Graph) -> bool {
    induced_cycle_sets(g).iter().any(|s| s.count_ones() % 2 == 1)
}

/// Connected components as masks, ordered by minimum vertex.
pub fn components(g: &Graph) -> Vec<u64> {
    let adj = adjacency(g);
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for u in 0..g.n() {
        for v in members(adj[u]) {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut out: Vec<u64> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    for v in 0..g.n() {
        let r = find(&mut parent, v);
        match roots.iter().position(|&x| x == r) {
            Some(i) => out[i] |= 1 << v,
            None => {
                roots.push(r);
                out.push(1 << v);
            }
        }
    }
    out
}

/// Induced `s`-`t` paths with interior inside `interior`, found by testing
/// every subset of `interior` as a candidate interior. Returned as vertex
/// sequences from `s` to `t`.
pub fn induced_paths(g: &Graph, s: usize, t: usize, interior: u64) -> Vec<Vec<usize>> {
    let adj = adjacency(g);
    let interior = interior & !(1 << s) & !(1 << t);
    let pool: Vec<usize> = members(interior).collect();
    let mut out = Vec::new();
    for m in 0u64..1 << pool.len() {
        let set = members(m).fold((1u64 << s) | (1 << t), |acc, i| acc | 1 << pool[i]);
        let ends_ok = (adj[s] & set).count_ones() == 1 && (adj[t] & set).count_ones() == 1;
        let inner_ok = members(set & !(1 << s) & !(1 << t)).all(|v| (adj[v] & set).count_ones() == 2);
        if !(ends_ok && inner_ok && connected(&adj, set)) {
            continue;
        }
        let mut path = vec![s];
        let mut prev = 1u64 << s;
        while *path.last().unwrap() != t {
            let next = (adj[*path.last().unwrap()] & set & !prev).trailing_zeros() as usize;
            prev |= 1 << next;
            path.push(next);
        }
        out.push(path);
    }
    out.sort();
    out
}

fn everything_else(g: &Graph, s: usize, t: usize) -> u64 {
    let full = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    full & !(1 << s) & !(1 << t)
}

/// Induced paths of length ≥ 3 of both parities.
pub fn is_linked(g: &Graph, s: usize, t: usize) -> bool {
    let lens: Vec<usize> = induced_paths(g, s, t, everything_else(g, s, t)).iter().map(|p| p.len() - 1).collect();
    lens.iter().any(|&l| l >= 3 && l % 2 == 0) && lens.iter().any(|&l| l >= 3 && l % 2 == 1)
}

/// An induced path of odd length ≥ 5.
pub fn is_odd_linked(g: &Graph, s: usize, t: usize) -> bool {
    induced_paths(g, s, t, everything_else(g, s, t)).iter().any(|p| p.len() > 5 && p.len() % 2 == 0)
}

/// An induced embedding of `pattern` into `host`, by trying every injection.
pub fn embedding(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    fn extend(host: &Graph, pattern: &Graph, map: &mut Vec<usize>, used: &mut u64) -> bool {
        let i = map.len();
        if i == pattern.n() {
            return true;
        }
        for v in 0..host.n() {
            if *used >> v & 1 == 1 {
                continue;
            }
            if (0..i).all(|j| pattern.has_edge(i, j) == host.has_edge(v, map[j])) {
                map.push(v);
                *used |= 1 << v;
                if extend(host, pattern, map, used) {
                    return true;
                }
                *used &= !(1 << v);
                map.pop();
            }
        }
        false
    }
    let mut map = Vec::new();
    extend(host, pattern, &mut map, &mut 0).then_some(map)
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && embedding(b, a).is_some()
}

/// Every proper colouring with colours `1..=k`.
pub fn proper_colorings(g: &Graph, k: u8) -> Vec<Vec<u8>> {
    fn extend(g: &Graph, k: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        let v = cur.len();
        if v == g.n() {
            out.push(cur.clone());
            return;
        }
        for c in 1..=k {
            if (0..v).all(|u| !g.has_edge(u, v) || cur[u] != c) {
                cur.push(c);
                extend(g, k, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(g, k, &mut Vec::new(), &mut out);
    out
}

/// Least k admitting a proper colouring, by plain backtracking per k.
pub fn chromatic_number(g: &Graph) -> usize {
    fn colorable(g: &Graph, k: u8, cur: &mut Vec<u8>) -> bool {
        let v = cur.len();
        if v == g.n() {
            return true;
        }
        for c in 1..=k {
            if (0..v).all(|u| !g.has_edge(u, v) || cur[u] != c) {
                cur.push(c);
                if colorable(g, k, cur) {
                    return true;
                }
                cur.pop();
            }
        }
        false
    }
    (0..=g.n()).find(|&k| colorable(g, k as u8, &mut Vec::new())).unwrap()
}

/// The parity star-cutset conditions checked from scratch for the cutset
/// `{center} ∪ leaves`. Returns, for each component of `G ∖ X` that
/// witnesses the even-path condition, whether the center has a neighbour
/// in it.
pub fn star_witnesses(g: &Graph, center: usize, leaves: u64) -> Vec<(u64, bool)> {
    let adj = adjacency(g);
    if leaves >> center & 1 == 1 || members(leaves).any(|l| adj[center] >> l & 1 == 0) {
        return Vec::new();
    }
    let x = leaves | 1 << center;
    let rest = components(g).iter().fold(0u64, |a, c| a | c) & !x;
    let parts: Vec<u64> = component_masks(&adj, rest);
    if parts.len() < 2 {
        return Vec::new();
    }
    let leaf_list: Vec<usize> = members(leaves).collect();
    parts
        .into_iter()
        .filter(|&a| {
            leaf_list.iter().enumerate().all(|(i, &s)| {
                leaf_list[i + 1..].iter().all(|&t| induced_paths(g, s, t, a).iter().any(|p| p.len() % 2 == 1))
            })
        })
        .map(|a| (a, adj[center] & a != 0))
        .collect()
}

fn component_masks(adj: &[u64], set: u64) -> Vec<u64> {
    let mut left = set;
    let mut out = Vec::new();
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        loop {
            let next = members(comp).fold(comp, |acc, v| acc | (adj[v] & set));
            if next == comp {
                break;
            }
            comp = next;
        }
        out.push(comp);
        left &= !comp;
    }
    out
}

pub fn is_parity_star_cutset(g: &Graph, center: usize, leaves: u64) -> bool {
    !star_witnesses(g, center, leaves).is_empty()
}

pub fn is_strong_parity_star_cutset(g: &Graph, center: usize, leaves: u64) -> bool {
    star_witnesses(g, center, leaves).iter().any(|&(_, strong)| strong)
}

/// Whether any strong parity star-cutset exists, over all centers and all
/// subsets of their neighbourhoods.
pub fn has_strong_parity_star_cutset(g: &Graph) -> bool {
    let adj = adjacency(g);
    (0..g.n()).any(|x| {
        let nbrs: Vec<usize> = members(adj[x]).collect();
        (0u64..1 << nbrs.len()).any(|m| is_strong_parity_star_cutset(g, x, members(m).fold(0, |a, i| a | 1 << nbrs[i])))
    })
}

/// Induced three-vertex paths whose removal disconnects the graph.
pub fn p3_cutsets(g: &Graph) -> Vec<[usize; 3]> {
    let adj = adjacency(g);
    let n = g.n();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut out = Vec::new();
    for b in 0..n {
        for a in members(adj[b]) {
            for c in members(adj[b]).filter(|&c| c > a && adj[a] >> c & 1 == 0) {
                let rest = all & !(1 << a | 1 << b | 1 << c);
                if component_masks(&adj, rest).len() >= 2 {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Cut vertices and cut edges.
pub fn clique_cutsets(g: &Graph) -> Vec<u64> {
    let adj = adjacency(g);
    let n = g.n();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut cliques: Vec<u64> = (0..n).map(|v| 1u64 << v).collect();
    cliques.extend(g.edges().into_iter().map(|(u, v)| 1u64 << u | 1 << v));
    cliques.into_iter().filter(|&k| component_masks(&adj, all & !k).len() >= 2).collect()
}
