//! The Petersen family and a few small cycles, with their conventional
//! 1-based vertex labels.
//!
//! Vertex ids are `label - 1`. [`label`] does the conversion so callers can
//! write the usual numbers directly.

use crate::graph::Graph;

/// Vertex id of the label `k` (1-based).
pub const fn label(k: usize) -> usize {
    k - 1
}

fn from_labels(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges.iter().map(|&(a, b)| (label(a), label(b)))).expect("fixture edges are valid")
}

/// Petersen graph: outer pentagon 1..5, inner pentagram on 6..10, spokes
/// `i -- i+5`.
pub fn petersen() -> Graph {
    from_labels(
        10,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 1),
            (6, 8),
            (7, 9),
            (8, 10),
            (9, 6),
            (10, 7),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 10),
        ],
    )
}

/// Petersen minus an edge: 8-cycle 1..8, chords 2-6 and 4-8, vertex 9 on
/// {1,5} and vertex 10 on {3,7}.
pub fn p0() -> Graph {
    from_labels(
        10,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 1),
            (2, 6),
            (4, 8),
            (1, 9),
            (9, 5),
            (3, 10),
            (10, 7),
        ],
    )
}

/// Petersen minus a vertex: hexagon 1..6 with 7 on {1,4}, 8 on {2,5}, 9 on
/// {3,6}.
pub fn p1() -> Graph {
    from_labels(9, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (7, 1), (7, 4), (8, 2), (8, 5), (9, 3), (9, 6)])
}

/// Petersen minus two adjacent vertices: 8-cycle 1..8 with chords 2-6 and
/// 4-8.
pub fn p2() -> Graph {
    from_labels(8, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 1), (2, 6), (4, 8)])
}

pub fn c5() -> Graph {
    Graph::cycle(5).expect("valid")
}

pub fn c7() -> Graph {
    Graph::cycle(7).expect("valid")
}

/// Names accepted by [`fixture`].
pub const FIXTURE_NAMES: [&str; 6] = ["petersen", "p0", "p1", "p2", "c5", "c7"];

/// Looks a fixture up by name.
pub fn fixture(name: &str) -> Option<Graph> {
    match name.to_ascii_lowercase().as_str() {
        "petersen" | "p" => Some(petersen()),
        "p0" => Some(p0()),
        "p1" => Some(p1()),
        "p2" => Some(p2()),
        "c5" => Some(c5()),
        "c7" => Some(c7()),
        _ => None,
    }
}

/// A fixed proper 3-colouring of [`petersen`] (colours 1..=3), used as the
/// base case of three-colouring.
pub const PETERSEN_COLORING: [u8; 10] = [1, 2, 1, 2, 3, 2, 3, 3, 1, 1];
