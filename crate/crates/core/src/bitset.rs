//! Fixed-capacity vertex sets backed by `u64` words.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: Vec<u64>,
}

#[inline]
fn word_count(capacity: usize) -> usize {
    capacity.div_ceil(64)
}

impl VertexSet {
    /// Empty set able to hold vertices `0..capacity`.
    pub fn new(capacity: usize) -> Self {
        VertexSet {
            words: vec![0; word_count(capacity)],
        }
    }

    /// The set `{0, .., capacity-1}`.
    pub fn full(capacity: usize) -> Self {
        let mut s = Self::new(capacity);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            let hi = (lo + 64).min(capacity);
            *w = if hi - lo == 64 {
                u64::MAX
            } else {
                (1u64 << (hi - lo)) - 1
            };
        }
        s
    }

    pub fn from_iter_with_capacity(capacity: usize, it: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::new(capacity);
        for v in it {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / 64)
            .is_some_and(|w| (w >> (v % 64)) & 1 == 1)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Ascending iteration over members.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let tz = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + tz);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
