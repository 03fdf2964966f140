use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A subset of a ground set `{0, …, n-1}` stored as a bit mask.
///
/// The ground size is not stored; callers pair a `PointSet` with the space it
/// belongs to. Canonical order of subsets is the order of their masks.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PointSet(u32);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub const fn from_bits(bits: u32) -> Self {
        PointSet(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// The whole ground set of size `n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 32);
        if n >= 32 {
            PointSet(u32::MAX)
        } else {
            PointSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(x: usize) -> Self {
        PointSet(1 << x)
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Self {
        points
            .into_iter()
            .fold(PointSet::EMPTY, |acc, x| acc | PointSet::singleton(x))
    }

    pub fn contains(self, x: usize) -> bool {
        x < 32 && self.0 & (1 << x) != 0
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1 << x;
    }

    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1 << x);
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: PointSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn intersects(self, other: PointSet) -> bool {
        !self.is_disjoint(other)
    }

    /// Complement relative to a ground set of size `n`.
    pub fn complement(self, n: usize) -> Self {
        PointSet(!self.0 & PointSet::full(n).0)
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Points in ascending order.
    pub fn iter(self) -> Points {
        Points(self.0)
    }

    /// All subsets of `self`, in ascending mask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Every subset of a ground set of size `n`, in canonical order.
    pub fn all(n: usize) -> impl Iterator<Item = PointSet> + Clone {
        (0..(1u64 << n)).map(|b| PointSet(b as u32))
    }

    /// Packs the members of `self` that lie in `carrier` into consecutive
    /// indices, preserving point order.
    pub fn compress(self, carrier: PointSet) -> PointSet {
        let mut out = 0u32;
        for (i, x) in carrier.iter().enumerate() {
            if self.contains(x) {
                out |= 1 << i;
            }
        }
        PointSet(out)
    }

    /// Inverse of [`PointSet::compress`].
    pub fn expand(self, carrier: PointSet) -> PointSet {
        let mut out = PointSet::EMPTY;
        for (i, x) in carrier.iter().enumerate() {
            if self.contains(i) {
                out.insert(x);
            }
        }
        out
    }

    /// Image under a point map `x ↦ map[x]`.
    pub fn map(self, map: &[usize]) -> PointSet {
        self.iter().fold(PointSet::EMPTY, |acc, x| {
            acc | PointSet::singleton(map[x])
        })
    }
}

impl BitOr for PointSet {
    type Output = PointSet;
    fn bitor(self, rhs: PointSet) -> PointSet {
        PointSet(self.0 | rhs.0)
    }
}

impl BitAnd for PointSet {
    type Output = PointSet;
    fn bitand(self, rhs: PointSet) -> PointSet {
        PointSet(self.0 & rhs.0)
    }
}

impl Sub for PointSet {
    type Output = PointSet;
    fn sub(self, rhs: PointSet) -> PointSet {
        PointSet(self.0 & !rhs.0)
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
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        PointSet::from_points(iter)
    }
}

impl Serialize for PointSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for PointSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let points = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = points.iter().find(|&&x| x >= 32) {
            return Err(serde::de::Error::custom(format!("point {bad} out of range")));
        }
        Ok(PointSet::from_points(points))
    }
}

#[derive(Clone)]
pub struct Points(u32);

impl Iterator for Points {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(x as usize)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Points {}

#[derive(Clone)]
pub struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = PointSet;

    fn next(&mut self) -> Option<PointSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some(cur.wrapping_sub(self.mask) & self.mask)
        };
        Some(PointSet(cur))
    }
}
