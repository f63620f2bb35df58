//! Bitsets over the indexed positive roots of a fixed root system.
//!
//! A [`RootSubset`] is a plain `u128`, so set algebra compiles down to single
//! instructions. Positive-root counts up to 128 are supported, which covers
//! every system this crate builds (E8 has 120 positive roots).

use serde::{Deserialize, Serialize};

/// A subset of the positive roots, by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootSubset(pub u128);

impl RootSubset {
    pub const EMPTY: RootSubset = RootSubset(0);

    pub fn full(n: usize) -> Self {
        assert!(n <= 128, "positive-root count {n} exceeds bitset capacity");
        if n == 128 {
            RootSubset(!0)
        } else {
            RootSubset((1u128 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        RootSubset(1u128 << i)
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn union(&self, other: RootSubset) -> RootSubset {
        RootSubset(self.0 | other.0)
    }

    pub fn intersect(&self, other: RootSubset) -> RootSubset {
        RootSubset(self.0 & other.0)
    }

    pub fn minus(&self, other: RootSubset) -> RootSubset {
        RootSubset(self.0 & !other.0)
    }

    pub fn complement(&self, n: usize) -> RootSubset {
        RootSubset(Self::full(n).0 & !self.0)
    }

    pub fn is_subset(&self, other: RootSubset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(&self, other: RootSubset) -> bool {
        self.0 & other.0 == 0
    }

    /// Indices of the members, ascending.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for RootSubset {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = RootSubset::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl std::fmt::Display for RootSubset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}
