//! Sets of ring elements with constant-time membership.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::ring::Elem;

/// A subset of the elements `0..universe` of a finite ring.
///
/// Iteration is in ascending index order.
#[derive(Clone, PartialEq, Eq)]
pub struct ElementSet {
    bits: FixedBitSet,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        ElementSet { bits }
    }

    pub fn from_predicate(universe: usize, mut keep: impl FnMut(Elem) -> bool) -> Self {
        let mut set = Self::empty(universe);
        for i in 0..universe {
            if keep(i) {
                set.bits.insert(i);
            }
        }
        set
    }

    pub fn from_members(universe: usize, members: impl IntoIterator<Item = Elem>) -> Self {
        let mut set = Self::empty(universe);
        for m in members {
            set.insert(m);
        }
        set
    }

    /// Size of the ambient ring.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, e: Elem) {
        assert!(
            e < self.bits.len(),
            "element {e} outside ring of order {}",
            self.bits.len()
        );
        self.bits.insert(e);
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        self.bits.contains(e)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        ElementSet { bits }
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        ElementSet { bits }
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        ElementSet { bits }
    }

    pub fn complement(&self) -> ElementSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        ElementSet { bits }
    }

    /// First member of `self` that is also in `other`.
    pub fn first_common(&self, other: &ElementSet) -> Option<Elem> {
        self.bits.intersection(&other.bits).next()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iteration_is_ascending() {
        let s = ElementSet::from_members(10, [7, 2, 9, 2, 0]);
        assert_eq!(s.to_vec(), vec![0, 2, 7, 9]);
        assert_eq!(s.len(), 4);
    }

    #[test]
    fn set_algebra() {
        let a = ElementSet::from_members(8, [1, 2, 3]);
        let b = ElementSet::from_members(8, [3, 4]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 2]);
        assert!(!a.is_disjoint(&b));
        assert_eq!(a.first_common(&b), Some(3));
        assert!(ElementSet::from_members(8, [2]).is_subset(&a));
        assert_eq!(ElementSet::full(5).len(), 5);
    }

    #[test]
    #[should_panic]
    fn out_of_range_insert_panics() {
        ElementSet::empty(3).insert(3);
    }
}
