use std::fmt;

/// Largest ground set a [`crate::matroid::Matroid`] can carry.
pub const MAX_ELEMENTS: usize = 64;

/// A subset of a ground set `{0, .., n-1}` with `n <= 64`, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        ElementSet(1u64 << e)
    }

    pub fn contains(self, e: usize) -> bool {
        e < 64 && self.0 >> e & 1 == 1
    }

    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | 1u64 << e)
    }

    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !(1u64 << e))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: Self) -> Self {
        ElementSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        ElementSet(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        ElementSet(self.0 & !o.0)
    }

    pub fn symmetric_difference(self, o: Self) -> Self {
        ElementSet(self.0 ^ o.0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    /// Image of the set under `map` (element `e` goes to `map[e]`).
    pub fn map_through(self, map: &[usize]) -> Self {
        self.iter().fold(ElementSet::EMPTY, |acc, e| acc.with(map[e]))
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(ElementSet::EMPTY, ElementSet::with)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// All `k`-subsets of `{0, .., n-1}` in increasing bitmask order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = ElementSet> {
    let limit: u128 = 1u128 << n;
    let mut cur: u128 = if k > n {
        limit
    } else if k == 0 {
        0
    } else {
        (1u128 << k) - 1
    };
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = ElementSet(cur as u64);
        if k == 0 {
            done = true;
            return Some(out);
        }
        let c = cur & cur.wrapping_neg();
        let r = cur + c;
        cur = (((r ^ cur) >> 2) / c) | r;
        if cur >= limit {
            done = true;
        }
        Some(out)
    })
}
