use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// Largest supported carrier. Subsets are stored as a single `u64`.
pub const MAX_ORDER: usize = 64;

/// A subset of the carrier `{0, .., n-1}`.
///
/// Equality compares the universe size as well as the members. The `Ord`
/// impl is the canonical report order: cardinality first, then
/// lexicographic on the ascending element list.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    bits: u64,
    n: usize,
}

fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        Self { bits: 0, n }
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        Self { bits: mask(n), n }
    }

    pub fn singleton(n: usize, x: usize) -> Self {
        assert!(x < n, "element {x} outside carrier of size {n}");
        Self { bits: 1 << x, n }
    }

    /// Bits above `n` are discarded.
    pub fn from_bits(n: usize, bits: u64) -> Self {
        Self {
            bits: bits & mask(n),
            n,
        }
    }

    /// Builds a subset from elements, rejecting out-of-range and repeated ones.
    pub fn from_elements<I: IntoIterator<Item = usize>>(n: usize, elements: I) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::InvalidOrder { n, max: MAX_ORDER });
        }
        let mut s = Self::empty(n);
        for x in elements {
            if x >= n {
                return Err(Error::ElementOutOfRange { element: x, n });
            }
            if s.contains(x) {
                return Err(Error::DuplicateElement(x));
            }
            s.insert(x);
        }
        Ok(s)
    }

    /// Size of the carrier this subset lives in.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.n && self.bits & (1 << x) != 0
    }

    pub fn insert(&mut self, x: usize) {
        assert!(x < self.n, "element {x} outside carrier of size {}", self.n);
        self.bits |= 1 << x;
    }

    pub fn remove(&mut self, x: usize) {
        if x < self.n {
            self.bits &= !(1 << x);
        }
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == mask(self.n)
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Elements {
        Elements { bits: self.bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &Self) -> Self {
        self.same_universe(other);
        Self {
            bits: self.bits | other.bits,
            n: self.n,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.same_universe(other);
        Self {
            bits: self.bits & other.bits,
            n: self.n,
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.same_universe(other);
        Self {
            bits: self.bits & !other.bits,
            n: self.n,
        }
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        self.same_universe(other);
        Self {
            bits: self.bits ^ other.bits,
            n: self.n,
        }
    }

    pub fn complement(&self) -> Self {
        Self {
            bits: !self.bits & mask(self.n),
            n: self.n,
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.bits & other.bits != 0
    }

    /// All subsets of an `n`-element carrier in canonical order
    /// (cardinality, then lexicographic).
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        (0..=n).flat_map(move |k| {
            (0..n)
                .combinations(k)
                .map(move |c| c.into_iter().fold(Subset::empty(n), |s, x| s | x))
        })
    }

    fn same_universe(&self, other: &Self) {
        debug_assert_eq!(self.n, other.n, "subsets over different carriers");
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
            .then_with(|| self.n.cmp(&other.n))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Self) -> Self {
        self.union(&rhs)
    }
}

impl BitOr<usize> for Subset {
    type Output = Subset;
    fn bitor(mut self, x: usize) -> Self {
        self.insert(x);
        self
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(&rhs)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Self) -> Self {
        self.difference(&rhs)
    }
}

impl Not for Subset {
    type Output = Subset;
    fn not(self) -> Self {
        self.complement()
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.n)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.iter().join(","))
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl IntoIterator for &Subset {
    type Item = usize;
    type IntoIter = Elements;
    fn into_iter(self) -> Elements {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`Subset`].
#[derive(Clone)]
pub struct Elements {
    bits: u64,
}

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let x = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.bits.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Elements {}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, xs: &[usize]) -> Subset {
        Subset::from_elements(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn canonical_order_is_cardinality_then_lex() {
        let all: Vec<Vec<usize>> = Subset::all(4).map(|s| s.to_vec()).collect();
        assert_eq!(all.len(), 16);
        assert_eq!(all[0], Vec::<usize>::new());
        assert_eq!(all[1..5], [vec![0], vec![1], vec![2], vec![3]]);
        // {0,3} precedes {1,2} lexicographically even though its bitmask is larger
        let i03 = all.iter().position(|v| v == &[0, 3]).unwrap();
        let i12 = all.iter().position(|v| v == &[1, 2]).unwrap();
        assert!(i03 < i12);
        let mut sorted: Vec<Subset> = Subset::all(4).collect();
        let orig = sorted.clone();
        sorted.sort();
        assert_eq!(sorted, orig);
    }

    #[test]
    fn rejects_bad_elements() {
        assert_eq!(
            Subset::from_elements(3, [0, 3]),
            Err(Error::ElementOutOfRange { element: 3, n: 3 })
        );
        assert_eq!(
            Subset::from_elements(3, [1, 1]),
            Err(Error::DuplicateElement(1))
        );
    }

    #[test]
    fn set_algebra() {
        let a = s(5, &[0, 1]);
        let b = s(5, &[1, 2]);
        assert_eq!(a | b, s(5, &[0, 1, 2]));
        assert_eq!(a & b, s(5, &[1]));
        assert_eq!(a - b, s(5, &[0]));
        assert_eq!(!a, s(5, &[2, 3, 4]));
        assert!(s(5, &[1]).is_subset(&a));
        assert_eq!(a.to_string(), "{0,1}");
        assert_eq!(Subset::full(64).len(), 64);
        assert!(Subset::full(64).complement().is_empty());
    }
}
