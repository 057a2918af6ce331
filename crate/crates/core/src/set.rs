use std::cmp::Ordering;
use std::fmt;

use crate::MAX_VERTICES;

/// A subset of `{0, …, 127}` stored as a 128-bit mask.
///
/// Ordering is lexicographic on the ascending member lists, so
/// `{0,2} < {0,3} < {1,2}` and a prefix sorts first (`{0} < {0,1}`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    /// `{0, …, n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        assert!(v < MAX_VERTICES);
        VertexSet(1u128 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < MAX_VERTICES);
        self.0 |= 1u128 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < MAX_VERTICES {
            self.0 &= !(1u128 << v);
        }
    }

    pub fn with(self, v: usize) -> Self {
        let mut s = self;
        s.insert(v);
        s
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
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

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
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

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

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

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // Both member lists agree below the lowest differing vertex `i`.
        // Whoever holds `i` is smaller, unless the other list ends there.
        let i = diff.trailing_zeros();
        let (holder_is_self, other_rest) = if self.0 >> i & 1 == 1 {
            (true, other.0 >> i)
        } else {
            (false, self.0 >> i)
        };
        let holder_smaller = other_rest != 0;
        match (holder_is_self, holder_smaller) {
            (true, true) | (false, false) => Ordering::Less,
            _ => Ordering::Greater,
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn basic_ops() {
        let s = set(&[0, 5, 127]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(127));
        assert!(!s.contains(1));
        assert!(!s.contains(200));
        assert_eq!(s.first(), Some(0));
        assert_eq!(s.to_vec(), vec![0, 5, 127]);
        assert_eq!(VertexSet::full(128).len(), 128);
        assert_eq!(VertexSet::full(0), VertexSet::EMPTY);
        assert!(set(&[5]).is_subset(s));
        assert_eq!(s.difference(set(&[5])), set(&[0, 127]));
    }

    #[test]
    fn lex_order_matches_member_lists() {
        let mut v = vec![set(&[1, 3]), set(&[0, 3]), set(&[1, 2]), set(&[0, 2])];
        v.sort();
        assert_eq!(v, vec![set(&[0, 2]), set(&[0, 3]), set(&[1, 2]), set(&[1, 3])]);
        assert!(set(&[0]) < set(&[0, 1]));
        assert!(set(&[0, 1]) < set(&[1]));
        assert!(VertexSet::EMPTY < set(&[0]));
    }

    proptest! {
        #[test]
        fn order_agrees_with_vec_order(a in any::<u128>(), b in any::<u128>()) {
            let (x, y) = (VertexSet::from_bits(a), VertexSet::from_bits(b));
            prop_assert_eq!(x.cmp(&y), x.to_vec().cmp(&y.to_vec()));
        }
    }
}
