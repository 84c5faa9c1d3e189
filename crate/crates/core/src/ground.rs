//! Labelled ground sets and bitset subsets of them.

use std::collections::HashMap;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use crate::error::{Error, Result};

/// Hard ceiling imposed by the `u64` bitset representation.
pub const MAX_ELEMENTS: usize = 64;

/// Default bound for operations that enumerate every subset of the ground set.
pub const DEFAULT_MAX_GROUND: usize = 16;

/// A subset of ground-set positions, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The first `n` positions.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_ELEMENTS);
        ElementSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(ElementSet::EMPTY, |acc, i| acc.with(i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_ELEMENTS && self.0 & (1u64 << i) != 0
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        self | ElementSet::singleton(i)
    }

    #[must_use]
    pub fn without(self, i: usize) -> Self {
        if i >= MAX_ELEMENTS {
            return self;
        }
        ElementSet(self.0 & !(1u64 << i))
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    /// Complement relative to a ground set of size `n`.
    pub fn complement(self, n: usize) -> Self {
        ElementSet::full(n).difference(self)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Self) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn iter(self) -> Ones {
        Ones(self.0)
    }

    /// Every subset of `self`, in increasing bitmask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Every superset of `self` inside `universe`, in increasing bitmask order.
    pub fn supersets_within(self, universe: Self) -> impl Iterator<Item = ElementSet> {
        let base = self;
        universe.difference(self).subsets().map(move |s| s | base)
    }
}

impl BitOr for ElementSet {
    type Output = ElementSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl BitAnd for ElementSet {
    type Output = ElementSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl Sub for ElementSet {
    type Output = ElementSet;
    fn sub(self, rhs: Self) -> Self {
        self.difference(rhs)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        ElementSet::from_indices(iter)
    }
}

/// Iterator over set positions in ascending order.
pub struct Ones(u64);

impl Iterator for Ones {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Ones {}

/// Submask enumeration (`s = (s - mask) & mask`), starting from the empty set.
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        let cur = self.next?;
        let succ = cur.wrapping_sub(self.mask) & self.mask;
        self.next = if succ == 0 { None } else { Some(succ) };
        Some(ElementSet(cur))
    }
}

/// An ordered list of distinct, nonempty element labels.
#[derive(Clone, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::GroundTooLarge {
                size: labels.len(),
                max: MAX_ELEMENTS,
            });
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(GroundSet { labels, index })
    }

    pub fn empty() -> Self {
        GroundSet {
            labels: Vec::new(),
            index: HashMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn require(&self, label: &str) -> Result<usize> {
        self.position(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn full(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn contains_set(&self, set: ElementSet) -> bool {
        set.is_subset(self.full())
    }

    pub fn check(&self, set: ElementSet) -> Result<()> {
        if self.contains_set(set) {
            Ok(())
        } else {
            Err(Error::OutOfGround {
                bits: set.bits(),
                size: self.len(),
            })
        }
    }

    pub fn check_bound(&self, max: usize) -> Result<()> {
        if self.len() > max {
            Err(Error::GroundTooLarge {
                size: self.len(),
                max,
            })
        } else {
            Ok(())
        }
    }

    pub fn subset<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElementSet> {
        labels
            .iter()
            .map(|l| self.require(l.as_ref()))
            .collect::<Result<ElementSet>>()
    }

    /// Labels of `set` in declaration order.
    pub fn names(&self, set: ElementSet) -> Vec<String> {
        set.iter().map(|i| self.labels[i].clone()).collect()
    }

    pub fn format_set(&self, set: ElementSet) -> String {
        format!("{{{}}}", self.names(set).join(","))
    }

    /// The ground set restricted to `keep`, together with the old position of each new element.
    pub fn restrict(&self, keep: ElementSet) -> (GroundSet, Vec<usize>) {
        let positions: Vec<usize> = keep.iter().collect();
        let ground = GroundSet::new(positions.iter().map(|&i| self.labels[i].clone()))
            .expect("labels of a valid ground set stay valid");
        (ground, positions)
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.labels).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_labels_rejected() {
        assert_eq!(
            GroundSet::new(["a", "b", "a"]).unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
        assert_eq!(GroundSet::new(["a", ""]).unwrap_err(), Error::EmptyLabel);
    }

    #[test]
    fn subsets_enumerates_all_submasks() {
        let s = ElementSet::from_indices([0, 2, 5]);
        let all: Vec<_> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], ElementSet::EMPTY);
        assert!(all.iter().all(|x| x.is_subset(s)));
        assert_eq!(ElementSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn supersets_within_universe() {
        let u = ElementSet::full(4);
        let x = ElementSet::from_indices([1]);
        let sup: Vec<_> = x.supersets_within(u).collect();
        assert_eq!(sup.len(), 8);
        assert!(sup.iter().all(|s| x.is_subset(*s) && s.is_subset(u)));
    }

    #[test]
    fn set_algebra() {
        let a = ElementSet::from_indices([0, 1, 2]);
        let b = ElementSet::from_indices([2, 3]);
        assert_eq!(a | b, ElementSet::from_indices([0, 1, 2, 3]));
        assert_eq!(a & b, ElementSet::singleton(2));
        assert_eq!(a - b, ElementSet::from_indices([0, 1]));
        assert_eq!(a.complement(5), ElementSet::from_indices([3, 4]));
        assert!(ElementSet::singleton(2).is_proper_subset(b));
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(ElementSet::full(64).len(), 64);
    }

    #[test]
    fn label_lookup() {
        let g = GroundSet::new(["e", "u", "v"]).unwrap();
        assert_eq!(g.subset(&["v", "e"]).unwrap(), ElementSet::from_indices([0, 2]));
        assert_eq!(g.subset(&["q"]).unwrap_err(), Error::UnknownLabel("q".into()));
        assert_eq!(g.format_set(ElementSet::from_indices([1, 2])), "{u,v}");
        let (r, pos) = g.restrict(ElementSet::from_indices([0, 2]));
        assert_eq!(r.labels(), ["e", "v"]);
        assert_eq!(pos, vec![0, 2]);
    }
}
