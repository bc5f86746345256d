use std::fmt;

/// A subset of the ground set `{0, 1, ..., n-1}` stored as a bitmask.
///
/// Bit `i` set means element `i` is in the subset. Elements are 0-based in
/// the API; `Display` renders them 1-based, which is the conventional way to
/// write ground-set elements.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    /// The full ground set of size `n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 32);
        SubsetMask(((1u64 << n) - 1) as u32)
    }

    /// The singleton `{i}`.
    pub fn singleton(i: usize) -> Self {
        SubsetMask(1 << i)
    }

    /// All elements strictly below `i`, i.e. `{0, ..., i-1}`.
    pub fn below(i: usize) -> Self {
        SubsetMask(((1u64 << i) - 1) as u32)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(self, i: usize) -> Self {
        SubsetMask(self.0 | 1 << i)
    }

    pub fn remove(self, i: usize) -> Self {
        SubsetMask(self.0 & !(1 << i))
    }

    pub fn union(self, other: Self) -> Self {
        SubsetMask(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        SubsetMask(self.0 & other.0)
    }

    pub fn complement(self, n: usize) -> Self {
        SubsetMask(!self.0).intersection(Self::full(n))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest element, if any.
    pub fn min_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }

    /// All `2^n` subsets of the ground set of size `n`, in mask order.
    pub fn all(n: usize) -> impl Iterator<Item = SubsetMask> {
        (0..1u64 << n).map(|m| SubsetMask(m as u32))
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (pos, i) in self.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
