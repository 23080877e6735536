use std::fmt;

use crate::error::Result;
use crate::model::ModelParams;
use crate::polygon::{ArcUniverse, PairedArc};

/// Fixed-width bit vector over arc indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::new(len);
        for k in 0..len {
            s.insert(k);
        }
        s
    }

    /// Low `len` bits of `mask`.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        let mut s = Self::new(len);
        if let Some(w) = s.words.first_mut() {
            *w = if len >= 64 { mask } else { mask & ((1u64 << len) - 1) };
        }
        s
    }

    pub fn insert(&mut self, k: usize) -> bool {
        let (w, b) = (k / 64, 1u64 << (k % 64));
        let fresh = self.words[w] & b == 0;
        self.words[w] |= b;
        fresh
    }

    pub fn remove(&mut self, k: usize) {
        self.words[k / 64] &= !(1u64 << (k % 64));
    }

    pub fn contains(&self, k: usize) -> bool {
        self.words
            .get(k / 64)
            .is_some_and(|w| w & (1u64 << (k % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + b)
            })
        })
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A set of m-arcs of one model. Members are paired arcs, so the set is
/// automatically invariant under the 180° rotation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ArcSet {
    params: ModelParams,
    bits: BitSet,
    universe_len: usize,
}

impl ArcSet {
    pub fn empty(universe: &ArcUniverse) -> Self {
        ArcSet {
            params: *universe.params(),
            bits: BitSet::new(universe.len()),
            universe_len: universe.len(),
        }
    }

    pub fn full(universe: &ArcUniverse) -> Self {
        ArcSet {
            params: *universe.params(),
            bits: BitSet::full(universe.len()),
            universe_len: universe.len(),
        }
    }

    pub fn from_bits(universe: &ArcUniverse, bits: BitSet) -> Self {
        debug_assert!(bits.iter().all(|k| k < universe.len()));
        ArcSet {
            params: *universe.params(),
            bits,
            universe_len: universe.len(),
        }
    }

    pub fn from_mask(universe: &ArcUniverse, mask: u64) -> Self {
        Self::from_bits(universe, BitSet::from_mask(universe.len(), mask))
    }

    pub fn from_arcs<'a>(
        universe: &ArcUniverse,
        arcs: impl IntoIterator<Item = &'a PairedArc>,
    ) -> Result<Self> {
        let mut s = Self::empty(universe);
        for a in arcs {
            s.bits.insert(universe.require_index(a)?);
        }
        Ok(s)
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn into_bits(self) -> BitSet {
        self.bits
    }

    pub fn universe_len(&self) -> usize {
        self.universe_len
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn contains_index(&self, k: usize) -> bool {
        self.bits.contains(k)
    }

    pub fn contains(&self, universe: &ArcUniverse, arc: &PairedArc) -> bool {
        universe.index_of(arc).is_some_and(|k| self.bits.contains(k))
    }

    pub fn insert_index(&mut self, k: usize) -> bool {
        assert!(k < self.universe_len, "arc index {k} out of range");
        self.bits.insert(k)
    }

    pub fn insert(&mut self, universe: &ArcUniverse, arc: &PairedArc) -> Result<bool> {
        Ok(self.bits.insert(universe.require_index(arc)?))
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter()
    }

    pub fn arcs<'a>(&'a self, universe: &'a ArcUniverse) -> impl Iterator<Item = PairedArc> + 'a {
        self.bits.iter().map(|k| universe.arc(k))
    }

    pub fn is_subset(&self, other: &ArcSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn union(&self, other: &ArcSet) -> ArcSet {
        let mut out = self.clone();
        out.bits.union_with(&other.bits);
        out
    }
}

impl fmt::Debug for ArcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ArcSet{:?}", self.bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitset_basics() {
        let mut s = BitSet::new(130);
        assert!(s.insert(0));
        assert!(s.insert(64));
        assert!(s.insert(129));
        assert!(!s.insert(64));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(s.len(), 3);
        s.remove(64);
        assert!(!s.contains(64));
        assert!(!s.contains(1000));
        let full = BitSet::full(130);
        assert_eq!(full.len(), 130);
        assert!(s.is_subset(&full));
        assert!(!full.is_subset(&s));
        assert_eq!(BitSet::from_mask(3, 0xff).len(), 3);
    }
}
