//! Tagged bit-vector sets indexed by a context's object or attribute order.
//!
//! The tag parameter keeps object sets and attribute sets from being mixed up
//! at compile time; both share the same block representation so derivations
//! are word-wise intersections.

use std::fmt;
use std::marker::PhantomData;

/// Marker for sets of objects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjTag;

/// Marker for sets of attributes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AttrTag;

pub type ObjectSet = IdxSet<ObjTag>;
pub type AttributeSet = IdxSet<AttrTag>;

const BLOCK: usize = 64;

/// A subset of a fixed-size index domain, stored as 64-bit blocks.
#[derive(PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IdxSet<T> {
    blocks: Vec<u64>,
    domain: usize,
    _tag: PhantomData<T>,
}

// manual impl: the derive would demand T: Clone, but the tag is phantom
impl<T> Clone for IdxSet<T> {
    fn clone(&self) -> Self {
        IdxSet {
            blocks: self.blocks.clone(),
            domain: self.domain,
            _tag: PhantomData,
        }
    }
}

impl<T> IdxSet<T> {
    pub fn empty(domain: usize) -> Self {
        IdxSet {
            blocks: vec![0; domain.div_ceil(BLOCK)],
            domain,
            _tag: PhantomData,
        }
    }

    pub fn full(domain: usize) -> Self {
        let mut s = Self::empty(domain);
        for i in 0..domain {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(domain: usize, indices: impl IntoIterator<Item = usize>) -> Option<Self> {
        let mut s = Self::empty(domain);
        for i in indices {
            if i >= domain {
                return None;
            }
            s.insert(i);
        }
        Some(s)
    }

    pub fn domain(&self) -> usize {
        self.domain
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.domain);
        self.blocks[i / BLOCK] |= 1 << (i % BLOCK);
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.domain);
        self.blocks[i / BLOCK] &= !(1 << (i % BLOCK));
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.domain && self.blocks[i / BLOCK] & (1 << (i % BLOCK)) != 0
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.domain).filter(move |&i| self.contains(i))
    }

    pub fn intersect_with(&mut self, other: &Self) {
        debug_assert_eq!(self.domain, other.domain);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &Self) {
        debug_assert_eq!(self.domain, other.domain);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    /// Complement within the domain.
    pub fn complement(&self) -> Self {
        let mut s = Self::full(self.domain);
        for (a, b) in s.blocks.iter_mut().zip(&self.blocks) {
            *a &= !b;
        }
        s
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        debug_assert_eq!(self.domain, other.domain);
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        debug_assert_eq!(self.domain, other.domain);
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & b == 0)
    }

    /// Smallest member, if any.
    pub fn min_index(&self) -> Option<usize> {
        for (bi, &b) in self.blocks.iter().enumerate() {
            if b != 0 {
                return Some(bi * BLOCK + b.trailing_zeros() as usize);
            }
        }
        None
    }
}

impl<T> fmt::Debug for IdxSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut a: ObjectSet = IdxSet::empty(70);
        a.insert(0);
        a.insert(65);
        assert!(a.contains(65));
        assert_eq!(a.len(), 2);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 65]);
        let b = IdxSet::from_indices(70, [65, 66]).unwrap();
        assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), vec![65]);
        assert!(!a.is_subset(&b));
        assert!(a.intersection(&b).is_subset(&b));
        assert_eq!(a.complement().len(), 68);
        assert_eq!(a.min_index(), Some(0));
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(IdxSet::<ObjTag>::from_indices(3, [3]).is_none());
    }
}
