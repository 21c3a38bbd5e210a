//! Small fixed and dynamic bitsets.

/// Maximum number of positive roots a [`RootSet`] can address.
pub const ROOTSET_CAPACITY: usize = 256;

/// Fixed-width set of root IDs (at most 256).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RootSet([u64; 4]);

impl RootSet {
    pub const fn empty() -> Self {
        RootSet([0; 4])
    }

    /// All IDs below `n`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty();
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(ids: I) -> Self {
        let mut s = Self::empty();
        for i in ids {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0[i >> 6] &= !(1 << (i & 63));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.0[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0 == [0; 4]
    }

    #[inline]
    pub fn and(&self, o: &Self) -> Self {
        RootSet([
            self.0[0] & o.0[0],
            self.0[1] & o.0[1],
            self.0[2] & o.0[2],
            self.0[3] & o.0[3],
        ])
    }

    #[inline]
    pub fn or(&self, o: &Self) -> Self {
        RootSet([
            self.0[0] | o.0[0],
            self.0[1] | o.0[1],
            self.0[2] | o.0[2],
            self.0[3] | o.0[3],
        ])
    }

    #[inline]
    pub fn and_not(&self, o: &Self) -> Self {
        RootSet([
            self.0[0] & !o.0[0],
            self.0[1] & !o.0[1],
            self.0[2] & !o.0[2],
            self.0[3] & !o.0[3],
        ])
    }

    /// IDs in `self` strictly greater than `i`.
    pub fn above(&self, i: usize) -> Self {
        let mut w = self.0;
        let (k, b) = ((i + 1) >> 6, (i + 1) & 63);
        for x in w.iter_mut().take(k.min(4)) {
            *x = 0;
        }
        if k < 4 {
            w[k] &= !0u64 << b;
        }
        RootSet(w)
    }

    pub fn first(&self) -> Option<usize> {
        for (k, w) in self.0.iter().enumerate() {
            if *w != 0 {
                return Some(k * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> RootSetIter {
        RootSetIter { words: self.0, k: 0 }
    }
}

impl std::fmt::Debug for RootSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct RootSetIter {
    words: [u64; 4],
    k: usize,
}

impl Iterator for RootSetIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        while self.k < 4 {
            let w = self.words[self.k];
            if w != 0 {
                self.words[self.k] = w & (w - 1);
                return Some(self.k * 64 + w.trailing_zeros() as usize);
            }
            self.k += 1;
        }
        None
    }
}

/// Growable bitset used for reachability rows.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn new(len: usize) -> Self {
        BitVec { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(len: usize, ids: I) -> Self {
        let mut b = Self::new(len);
        for i in ids {
            b.set(i);
        }
        b
    }

    pub fn capacity(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        self.words[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    pub fn union_with(&mut self, o: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&o.words) {
            *a |= *b;
        }
    }

    pub fn and(&self, o: &BitVec) -> BitVec {
        BitVec {
            words: self.words.iter().zip(&o.words).map(|(a, b)| a & b).collect(),
            len: self.len,
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Popcount of `self & o` without allocating.
    pub fn count_and(&self, o: &BitVec) -> usize {
        self.words
            .iter()
            .zip(&o.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Popcount of `self & o & p` without allocating.
    pub fn count_and3(&self, o: &BitVec, p: &BitVec) -> usize {
        self.words
            .iter()
            .zip(&o.words)
            .zip(&p.words)
            .map(|((a, b), c)| (a & b & c).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * 64 + t)
                }
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rootset_basics() {
        let mut s = RootSet::empty();
        for i in [0, 63, 64, 200, 255] {
            s.insert(i);
        }
        assert_eq!(s.len(), 5);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 63, 64, 200, 255]);
        assert_eq!(s.above(63).iter().collect::<Vec<_>>(), vec![64, 200, 255]);
        assert_eq!(s.first(), Some(0));
        s.remove(0);
        assert_eq!(s.first(), Some(63));
    }

    #[test]
    fn bitvec_iter_and_counts() {
        let a = BitVec::from_ids(130, [1, 65, 129]);
        let b = BitVec::from_ids(130, [65, 129, 3]);
        assert_eq!(a.count_and(&b), 2);
        assert_eq!(a.and(&b).iter().collect::<Vec<_>>(), vec![65, 129]);
    }
}
