use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest vertex index a [`Simplex`] can hold.
pub const MAX_VERTEX: u32 = 64;

/// A set of vertex indices in `1..=64`, identified with the simplex spanned by
/// the corresponding points of the moment curve.
///
/// Stored as a bitmask (bit `i - 1` for vertex `i`). Ordering is lexicographic
/// on the increasing vertex lists, so `{1,2,3} < {1,3} < {2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Simplex(u64);

impl Simplex {
    pub const EMPTY: Simplex = Simplex(0);

    pub fn new(vertices: &[u32]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptySimplex);
        }
        let mut mask = 0u64;
        let mut prev = 0u32;
        for &v in vertices {
            if v == 0 || v > MAX_VERTEX {
                return Err(Error::InvalidSimplex(format!(
                    "vertex {v} outside 1..={MAX_VERTEX}"
                )));
            }
            if v <= prev {
                return Err(Error::InvalidSimplex(format!(
                    "vertices {vertices:?} are not strictly increasing"
                )));
            }
            prev = v;
            mask |= 1 << (v - 1);
        }
        Ok(Simplex(mask))
    }

    /// Builds a vertex set from an arbitrary iterator; duplicates collapse.
    ///
    /// Panics if a vertex lies outside `1..=64`.
    pub fn from_iter_unchecked<I: IntoIterator<Item = u32>>(it: I) -> Self {
        let mut mask = 0u64;
        for v in it {
            assert!((1..=MAX_VERTEX).contains(&v), "vertex {v} out of range");
            mask |= 1 << (v - 1);
        }
        Simplex(mask)
    }

    pub const fn from_mask(mask: u64) -> Self {
        Simplex(mask)
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    /// The interval `{a, a+1, ..., b}`; empty when `a > b`.
    pub fn range(a: u32, b: u32) -> Self {
        if a > b {
            return Simplex::EMPTY;
        }
        assert!(a >= 1 && b <= MAX_VERTEX);
        let hi = if b == 64 { u64::MAX } else { (1u64 << b) - 1 };
        let lo = (1u64 << (a - 1)) - 1;
        Simplex(hi & !lo)
    }

    /// `[n] = {1, ..., n}`.
    pub fn ground(n: u32) -> Self {
        Simplex::range(1, n)
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: u32) -> bool {
        (1..=MAX_VERTEX).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn min(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros() + 1)
    }

    pub fn max(self) -> Option<u32> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.vertices().collect()
    }

    pub fn union(self, other: Simplex) -> Simplex {
        Simplex(self.0 | other.0)
    }

    pub fn intersection(self, other: Simplex) -> Simplex {
        Simplex(self.0 & other.0)
    }

    pub fn difference(self, other: Simplex) -> Simplex {
        Simplex(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Simplex) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn with(self, v: u32) -> Simplex {
        Simplex(self.0 | (1 << (v - 1)))
    }

    pub fn without(self, v: u32) -> Simplex {
        Simplex(self.0 & !(1 << (v - 1)))
    }

    /// Position of `v` among the vertices (0-based), if present.
    pub fn rank(self, v: u32) -> Option<usize> {
        self.contains(v)
            .then(|| (self.0 & ((1u64 << (v - 1)) - 1)).count_ones() as usize)
    }

    /// The `i`-th smallest vertex (0-based).
    pub fn nth(self, i: usize) -> Option<u32> {
        self.vertices().nth(i)
    }

    /// All subsets with exactly `k` vertices, in lexicographic order.
    pub fn subsets(self, k: usize) -> Vec<Simplex> {
        self.vertices()
            .combinations(k)
            .map(Simplex::from_iter_unchecked)
            .collect()
    }

    /// Codimension-one faces, i.e. the simplex with one vertex removed.
    pub fn facets(self) -> impl Iterator<Item = Simplex> {
        self.vertices().map(move |v| self.without(v))
    }

    /// Applies an order-preserving relabelling `v -> map(v)`.
    pub fn map(self, mut f: impl FnMut(u32) -> u32) -> Simplex {
        Simplex::from_iter_unchecked(self.vertices().map(&mut f))
    }

    /// Relabels `self` (a subset of `ground`) by the ranks of its vertices in
    /// `ground`, giving a subset of `[|ground|]`.
    pub fn relabel_into(self, ground: Simplex) -> Simplex {
        debug_assert!(self.is_subset(ground));
        self.map(|v| ground.rank(v).expect("vertex outside ground set") as u32 + 1)
    }

    /// Inverse of [`Simplex::relabel_into`].
    pub fn relabel_from(self, ground: Simplex) -> Simplex {
        let g = ground.to_vec();
        self.map(|r| g[r as usize - 1])
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // Below the lowest differing vertex both lists agree. Whoever holds that
        // vertex is smaller unless the other list has already ended.
        let bit = diff & diff.wrapping_neg();
        let above = !(bit | (bit - 1));
        if self.0 & bit != 0 {
            if other.0 & above != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.0 & above != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Simplex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.vertices())
    }
}

impl<'de> Deserialize<'de> for Simplex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<u32>::deserialize(d)?;
        Simplex::new(&v).map_err(serde::de::Error::custom)
    }
}

/// Shorthand used throughout tests: `simplex![1, 3, 5]`.
#[macro_export]
macro_rules! simplex {
    ($($v:expr),+ $(,)?) => {
        $crate::moment::Simplex::new(&[$($v),+]).expect("valid simplex literal")
    };
}
