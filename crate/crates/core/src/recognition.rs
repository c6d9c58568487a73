//! Pentagraph membership with certificates.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::limits::Limits;
use crate::structure::{find_long_odd_hole, Hole};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pentagraph,
    NotPentagraph,
    /// The odd-hole search ran out of budget.
    Indeterminate,
}

/// Why a graph is not a pentagraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "cycle", rename_all = "snake_case")]
pub enum Witness {
    /// A cycle of length at most four (a shortest cycle, hence induced).
    ShortCycle(Hole),
    /// An induced odd cycle of length at least seven.
    LongOddHole(Hole),
}

impl Witness {
    pub fn cycle(&self) -> &Hole {
        match self {
            Witness::ShortCycle(h) | Witness::LongOddHole(h) => h,
        }
    }

    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            Witness::ShortCycle(h) => h.len() <= 4 && h.verify(g),
            Witness::LongOddHole(h) => h.len() >= 7 && h.len() % 2 == 1 && h.verify(g),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecognitionReport {
    pub verdict: Verdict,
    /// `None` for forests.
    pub girth: Option<usize>,
    pub witness: Option<Witness>,
    pub bipartite: bool,
}

impl RecognitionReport {
    pub fn is_pentagraph(&self) -> bool {
        self.verdict == Verdict::Pentagraph
    }
}

/// Decides whether `g` is a pentagraph.
///
/// Girth is checked first, so a graph with a short cycle is always rejected
/// with a short-cycle witness. Bipartite graphs have no odd cycles at all
/// and skip the hole search.
pub fn recognize(g: &Graph, limits: &Limits) -> RecognitionReport {
    let girth = g.girth();
    let bipartite = g.is_bipartite();
    let mut report = RecognitionReport { verdict: Verdict::Pentagraph, girth, witness: None, bipartite };
    if girth.is_some_and(|k| k < 5) {
        let cycle = Hole::canonical(g.shortest_cycle().expect("girth is finite"));
        report.verdict = Verdict::NotPentagraph;
        report.witness = Some(Witness::ShortCycle(cycle));
        return report;
    }
    if bipartite {
        return report;
    }
    match find_long_odd_hole(g, limits) {
        Ok(None) => {}
        Ok(Some(h)) => {
            report.verdict = Verdict::NotPentagraph;
            report.witness = Some(Witness::LongOddHole(h));
        }
        Err(_) => report.verdict = Verdict::Indeterminate,
    }
    report
}

/// Shorthand for `recognize(g, &Limits::default()).is_pentagraph()`.
pub fn is_pentagraph(g: &Graph) -> bool {
    recognize(g, &Limits::default()).is_pentagraph()
}
