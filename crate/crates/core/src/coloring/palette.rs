use super::Color;

/// Per-vertex sets of missing colors, one fixed-width bitset per vertex in a
/// flat buffer. Bit `c - 1` of vertex `u` is set iff color `c` is missing at `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct MissingSets {
    words: usize,
    bits: Vec<u64>,
    count: Vec<u32>,
}

impl MissingSets {
    /// Every vertex starts with the full palette `1..=palette`.
    pub fn full(n: usize, palette: u32) -> Self {
        let words = (palette as usize).div_ceil(64).max(1);
        let mut row = vec![0u64; words];
        for c in 0..palette as usize {
            row[c / 64] |= 1 << (c % 64);
        }
        let mut bits = Vec::with_capacity(n * words);
        for _ in 0..n {
            bits.extend_from_slice(&row);
        }
        MissingSets { words, bits, count: vec![palette; n] }
    }

    #[inline]
    fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    pub fn contains(&self, u: usize, c: Color) -> bool {
        let i = (c - 1) as usize;
        self.bits[u * self.words + i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, u: usize, c: Color) {
        let i = (c - 1) as usize;
        let w = &mut self.bits[u * self.words + i / 64];
        debug_assert!(*w >> (i % 64) & 1 == 0);
        *w |= 1 << (i % 64);
        self.count[u] += 1;
    }

    #[inline]
    pub fn remove(&mut self, u: usize, c: Color) {
        let i = (c - 1) as usize;
        let w = &mut self.bits[u * self.words + i / 64];
        debug_assert!(*w >> (i % 64) & 1 == 1);
        *w &= !(1 << (i % 64));
        self.count[u] -= 1;
    }

    #[inline]
    pub fn len(&self, u: usize) -> usize {
        self.count[u] as usize
    }

    /// Lowest missing color at `u` not in `blocked`.
    pub fn first_excluding(&self, u: usize, blocked: &[Color]) -> Option<Color> {
        for (wi, &word) in self.row(u).iter().enumerate() {
            let mut w = word;
            while w != 0 {
                let c = (wi * 64 + w.trailing_zeros() as usize + 1) as Color;
                if !blocked.contains(&c) {
                    return Some(c);
                }
                w &= w - 1;
            }
        }
        None
    }

    /// The `k`-th (0-based) missing color at `u` in ascending order.
    pub fn nth(&self, u: usize, mut k: usize) -> Option<Color> {
        for (wi, &word) in self.row(u).iter().enumerate() {
            let ones = word.count_ones() as usize;
            if k >= ones {
                k -= ones;
                continue;
            }
            let mut w = word;
            for _ in 0..k {
                w &= w - 1;
            }
            return Some((wi * 64 + w.trailing_zeros() as usize + 1) as Color);
        }
        None
    }

    pub fn iter(&self, u: usize) -> impl Iterator<Item = Color> + '_ {
        self.row(u).iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some((wi * 64 + b + 1) as Color)
            })
        })
    }
}
