//! Search budgets.
//!
//! Every exponential search in the crate counts its extension steps against
//! a [`Meter`]. Running out is reported as an explicit indeterminate result
//! (`Exhausted`), never as absence.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default number of extension steps a single query may take.
pub const DEFAULT_MAX_STEPS: u64 = 10_000_000;

/// Tunable caps shared by the structure, recognition and decomposition
/// searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Extension steps allowed per query.
    pub max_steps: u64,
    /// Largest jump interior [`crate::structure::find_jumps`] explores.
    pub max_jump_interior: usize,
    /// Star-cutset centers with more neighbours than this are skipped by the
    /// brute-force star search.
    pub max_star_degree: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_steps: DEFAULT_MAX_STEPS, max_jump_interior: 16, max_star_degree: 12 }
    }
}

impl Limits {
    pub fn with_max_steps(self, max_steps: u64) -> Self {
        Limits { max_steps, ..self }
    }

    pub fn meter(&self) -> Meter {
        Meter::new(self.max_steps)
    }
}

/// The step budget of one query ran out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("search budget of {0} steps exhausted")]
pub struct Exhausted(pub u64);

/// Per-query step counter.
#[derive(Debug)]
pub struct Meter {
    limit: u64,
    used: u64,
}

impl Meter {
    pub fn new(limit: u64) -> Self {
        Meter { limit, used: 0 }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<(), Exhausted> {
        self.used += 1;
        if self.used > self.limit {
            Err(Exhausted(self.limit))
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}
