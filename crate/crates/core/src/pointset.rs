//! Subsets of `{0..n-1}` packed into a single machine word.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest point count a [`PointSet`] can address.
pub const MAX_POINTS: usize = 64;

/// A set of point indices below [`MAX_POINTS`], stored as a bit mask.
///
/// The ambient point count is not stored; operations that need it (such as
/// [`PointSet::complement`]) take it as an argument.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PointSet(u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        PointSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The full set `{0..n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    pub const fn singleton(a: usize) -> Self {
        PointSet(1u64 << a)
    }

    /// Builds a set from point indices. Panics on an index ≥ 64; use
    /// [`PointSet::try_from_points`] for untrusted input.
    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Self {
        points
            .into_iter()
            .fold(PointSet::EMPTY, |acc, p| acc.with(p))
    }

    /// Builds a set from point indices, rejecting any index `>= n`.
    pub fn try_from_points<I: IntoIterator<Item = usize>>(points: I, n: usize) -> Result<Self, usize> {
        let mut set = PointSet::EMPTY;
        for p in points {
            if p >= n || p >= MAX_POINTS {
                return Err(p);
            }
            set = set.with(p);
        }
        Ok(set)
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn contains(self, a: usize) -> bool {
        a < 64 && self.0 & (1u64 << a) != 0
    }

    #[must_use]
    pub const fn with(self, a: usize) -> Self {
        PointSet(self.0 | (1u64 << a))
    }

    #[must_use]
    pub const fn without(self, a: usize) -> Self {
        PointSet(self.0 & !(1u64 << a))
    }

    pub const fn union(self, other: Self) -> Self {
        PointSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: Self) -> Self {
        PointSet(self.0 & other.0)
    }

    pub const fn difference(self, other: Self) -> Self {
        PointSet(self.0 & !other.0)
    }

    pub const fn complement(self, n: usize) -> Self {
        PointSet(!self.0 & PointSet::full(n).0)
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// True if every member is below `n`.
    pub const fn within(self, n: usize) -> bool {
        self.is_subset(PointSet::full(n))
    }

    /// Smallest member, if any.
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> Points {
        Points(self.0)
    }

    /// All subsets of `self`, from the empty set upward in numeric order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Canonical storage order: cardinality first, then numeric encoding.
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.len(), self.0).cmp(&(other.len(), other.0))
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        PointSet::from_points(iter)
    }
}

impl IntoIterator for PointSet {
    type Item = usize;
    type IntoIter = Points;

    fn into_iter(self) -> Points {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`PointSet`].
#[derive(Clone, Debug)]
pub struct Points(u64);

impl Iterator for Points {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let p = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(p)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Points {}

/// Iterator over all submasks of a mask, in increasing numeric order.
#[derive(Clone, Debug)]
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = PointSet;

    fn next(&mut self) -> Option<PointSet> {
        let cur = self.next?;
        // next submask in increasing order
        self.next = if cur == self.mask {
            None
        } else {
            Some(cur.wrapping_sub(self.mask) & self.mask)
        };
        Some(PointSet(cur))
    }
}
