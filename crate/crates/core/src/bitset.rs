//! Fixed-width vertex sets.
//!
//! A [`VertexSet`] is a single machine word, so every set operation is a
//! handful of instructions. The default word is `u64`, which caps graphs at
//! 64 vertices; the `wide` feature switches to `u128` for a cap of 128.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[cfg(not(feature = "wide"))]
type Word = u64;
#[cfg(feature = "wide")]
type Word = u128;

/// Largest vertex count a [`VertexSet`] (and therefore a graph) can hold.
pub const MAX_VERTICES: usize = Word::BITS as usize;

/// A set of vertex ids in `0..MAX_VERTICES`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Word);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(Word::MAX)
        } else {
            VertexSet((1 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        let mut s = self;
        s.insert(v);
        s
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        let mut s = self;
        s.remove(v);
        s
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

#[derive(Clone)]
pub struct Iter(Word);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = items.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} exceeds the cap {MAX_VERTICES}")));
        }
        Ok(items.into_iter().collect())
    }
}
