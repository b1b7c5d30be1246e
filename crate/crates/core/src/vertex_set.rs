use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ground set; a [`VertexSet`] is a single `u64`.
pub const MAX_VERTICES: usize = 64;

/// A subset of `[n]`, vertex `i` (1-based) stored at bit `i - 1`.
///
/// Ordered by cardinality first, then by bit pattern. This is the facet
/// order used everywhere in the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `[n] = {1, ..., n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(vertex: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&vertex));
        VertexSet(1u64 << (vertex - 1))
    }

    /// Builds a set from 1-based vertex labels, checking each against `[n]`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Result<Self> {
        let mut bits = 0u64;
        for v in vertices {
            if v == 0 || v > n || v > MAX_VERTICES {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            bits |= 1u64 << (v - 1);
        }
        Ok(VertexSet(bits))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, vertex: usize) -> bool {
        (1..=MAX_VERTICES).contains(&vertex) && self.0 >> (vertex - 1) & 1 == 1
    }

    pub fn insert(&mut self, vertex: usize) {
        self.0 |= 1u64 << (vertex - 1);
    }

    pub fn remove(&mut self, vertex: usize) {
        self.0 &= !(1u64 << (vertex - 1));
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Self) -> bool {
        self.is_subset(other) && self.0 != other.0
    }

    /// `[n] \ self`.
    pub fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & Self::full(n).0)
    }

    /// True if every vertex lies in `[n]`.
    pub fn within(self, n: usize) -> bool {
        self.is_subset(Self::full(n))
    }

    /// 1-based vertices in increasing order.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Largest vertex, if any.
    pub fn max_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros() as usize)
        }
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .count_ones()
            .cmp(&other.0.count_ones())
            .then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let bit = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(bit + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}
