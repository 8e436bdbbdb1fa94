use std::cmp::Ordering;
use std::fmt;

const BITS: usize = 64;

/// A set of vertex identifiers backed by a growable bitset.
///
/// Membership is constant time and iteration is always ascending. Trailing
/// zero words are trimmed after every mutation, so two sets with the same
/// members compare and hash equal regardless of how they were built.
///
/// `Ord` is lexicographic on the ascending member lists, which is the
/// order used for every deterministic tie-break in this crate.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, v: usize) -> bool {
        let (w, b) = (v / BITS, v % BITS);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let (w, b) = (v / BITS, v % BITS);
        if w >= self.words.len() {
            return false;
        }
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        self.trim();
        present
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / BITS)
            .is_some_and(|w| w & (1 << (v % BITS)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, o) in words.iter_mut().zip(&short.words) {
            *w |= o;
        }
        VertexSet { words }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = VertexSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        };
        out.trim();
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut words = self.words.clone();
        for (w, o) in words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
        let mut out = VertexSet { words };
        out.trim();
        out
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
        self.trim();
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.len() <= other.words.len()
            && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Strict subset.
    pub fn is_proper_subset(&self, other: &VertexSet) -> bool {
        self != other && self.is_subset(other)
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * BITS + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        s.extend(iter);
        s
    }
}

impl Extend<usize> for VertexSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(arr: [usize; N]) -> Self {
        arr.into_iter().collect()
    }
}

impl From<&[usize]> for VertexSet {
    fn from(s: &[usize]) -> Self {
        s.iter().copied().collect()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trailing_words_do_not_affect_equality() {
        let mut a = VertexSet::from([3, 200]);
        a.remove(200);
        assert_eq!(a, VertexSet::from([3]));
        assert_eq!(a.difference(&VertexSet::from([3])), VertexSet::new());
        assert!(VertexSet::from([3, 130]).difference(&VertexSet::from([130])).words.len() == 1);
    }

    #[test]
    fn lexicographic_order() {
        assert!(VertexSet::from([1]) < VertexSet::from([2]));
        assert!(VertexSet::from([1, 3]) < VertexSet::from([2]));
        assert!(VertexSet::from([1]) < VertexSet::from([1, 2]));
        assert!(VertexSet::new() < VertexSet::from([0]));
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from([0, 1, 65, 128]);
        let b = VertexSet::from([1, 2, 128]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 1, 2, 65, 128]);
        assert_eq!(a.intersection(&b).to_vec(), vec![1, 128]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 65]);
        assert!(VertexSet::from([1, 128]).is_subset(&a));
        assert!(!b.is_subset(&a));
        assert!(VertexSet::from([2, 3]).is_disjoint(&a));
        assert_eq!(a.len(), 4);
        assert_eq!(a.first(), Some(0));
        assert!(a.is_proper_subset(&a.union(&b)));
        assert!(!a.is_proper_subset(&a));
    }
}
