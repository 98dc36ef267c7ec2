//! Fixed-width bit-vector sets over vertex indices.
//!
//! A `VertexSet` always knows the size of its universe (the vertex count of
//! the graph it belongs to), so complements are well defined and sets from
//! different graphs cannot be mixed up silently.

const WORD_BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Box<[u64]>,
}

fn word_count(universe: usize) -> usize {
    universe.div_ceil(WORD_BITS)
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; word_count(universe)].into_boxed_slice(),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    pub fn singleton(universe: usize, v: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(v);
        s
    }

    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for v in indices {
            s.insert(v);
        }
        s
    }

    /// Clears any bits above the universe size.
    fn trim(&mut self) {
        let rem = self.universe % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.universe);
        self.words[v / WORD_BITS] & (1u64 << (v % WORD_BITS)) != 0
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.universe);
        self.words[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.universe);
        self.words[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.subtract(other);
        s
    }

    pub fn complement(&self) -> VertexSet {
        let mut s = VertexSet::full(self.universe);
        s.subtract(self);
        s
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    /// Smallest member, if any.
    pub fn min(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let base = i * WORD_BITS;
            std::iter::successors(
                if w == 0 { None } else { Some(w) },
                |&w| {
                    let w = w & (w - 1);
                    if w == 0 {
                        None
                    } else {
                        Some(w)
                    }
                },
            )
            .map(move |w| base + w.trailing_zeros() as usize)
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_membership() {
        let mut s = VertexSet::empty(70);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(65);
        assert!(s.contains(0) && s.contains(65) && !s.contains(64));
        assert_eq!(s.count(), 2);
        assert_eq!(s.to_vec(), vec![0, 65]);
        s.remove(0);
        assert_eq!(s.to_vec(), vec![65]);
    }

    #[test]
    fn full_respects_universe() {
        let s = VertexSet::full(67);
        assert_eq!(s.count(), 67);
        assert_eq!(s.complement().count(), 0);
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_indices(10, [1, 3, 5]);
        let b = VertexSet::from_indices(10, [3, 4]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 3, 4, 5]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 5]);
        assert!(a.intersection(&b).is_subset_of(&a));
        assert!(a.union(&a).to_vec() == a.to_vec(), "union is idempotent");
    }

    #[test]
    fn min_and_iter_ascend() {
        let s = VertexSet::from_indices(130, [127, 3, 128, 64]);
        assert_eq!(s.min(), Some(3));
        assert_eq!(s.to_vec(), vec![3, 64, 127, 128]);
    }
}
