//! Fixed-universe vertex sets.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A subset of the vertex ids `0..universe` of some host graph.
///
/// Iteration is always in ascending id order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        VertexSet { bits }
    }

    /// Builds a set from ids; ids outside the universe are a caller bug and panic.
    pub fn from_ids<I: IntoIterator<Item = usize>>(universe: usize, ids: I) -> Self {
        let mut set = VertexSet::empty(universe);
        for v in ids {
            set.insert(v);
        }
        set
    }

    /// Like [`VertexSet::from_ids`] but reports the first out-of-range id.
    pub fn try_from_ids<I: IntoIterator<Item = usize>>(
        universe: usize,
        ids: I,
    ) -> Result<Self, usize> {
        let mut set = VertexSet::empty(universe);
        for v in ids {
            if v >= universe {
                return Err(v);
            }
            set.insert(v);
        }
        Ok(set)
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    /// Returns true if `v` was newly inserted.
    pub fn insert(&mut self, v: usize) -> bool {
        !self.bits.put(v)
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let was = self.bits.contains(v);
        self.bits.set(v, false);
        was
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.minimum()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.bits.difference_with(&other.bits);
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn complement(&self) -> VertexSet {
        let mut out = self.clone();
        out.bits.toggle_range(..);
        out
    }

    pub fn with(&self, v: usize) -> VertexSet {
        let mut out = self.clone();
        out.insert(v);
        out
    }

    pub fn without(&self, v: usize) -> VertexSet {
        let mut out = self.clone();
        out.remove(v);
        out
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Serialized as the ascending list of member ids; the universe is implied by context.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Deserialization sizes the universe to `max id + 1`; callers re-home the set
/// with [`VertexSet::try_from_ids`] when the host graph is known.
impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let ids = Vec::<usize>::deserialize(deserializer)?;
        let universe = ids.iter().max().map_or(0, |m| m + 1);
        Ok(VertexSet::from_ids(universe, ids))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = VertexSet::from_ids(6, [0, 2, 4]);
        let b = VertexSet::from_ids(6, [2, 3]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 2, 3, 4]);
        assert_eq!(a.intersection(&b).to_vec(), vec![2]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 4]);
        assert_eq!(a.complement().to_vec(), vec![1, 3, 5]);
        assert!(VertexSet::from_ids(6, [2]).is_subset(&a));
        assert_eq!(a.first(), Some(0));
        assert_eq!(format!("{a}"), "{0,2,4}");
    }

    #[test]
    fn full_and_empty() {
        assert!(VertexSet::full(5).is_full());
        assert!(VertexSet::empty(5).is_empty());
        assert!(VertexSet::full(0).is_full());
        assert_eq!(VertexSet::try_from_ids(3, [0, 3]), Err(3));
    }

    #[test]
    fn insert_reports_novelty() {
        let mut s = VertexSet::empty(3);
        assert!(s.insert(1));
        assert!(!s.insert(1));
        assert!(s.remove(1));
        assert!(!s.remove(1));
    }
}
