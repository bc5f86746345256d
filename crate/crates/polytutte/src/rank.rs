use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::point::{IntVector, Permutation};

/// Largest supported ground-set size. Every validation and membership check
/// walks the full `2^n` subset table, so this is a hard cap.
pub const MAX_GROUND_SET: usize = 16;

/// An integer submodular set function on the subsets of the ground set,
/// zero on the empty set, stored as a dense table indexed by [`SubsetMask`].
#[derive(Clone, PartialEq, Eq)]
pub struct RankFunction {
    n: usize,
    values: Vec<i64>,
}

impl RankFunction {
    /// Validates and wraps a rank table.
    ///
    /// Checks the table size, `f(empty) = 0`, and submodularity
    /// `f(I) + f(J) >= f(I union J) + f(I intersect J)` over all pairs of
    /// subsets. The pair scan is `O(4^n)`; with the size cap this stays
    /// affordable, and test instances keep `n` small.
    pub fn new(n: usize, values: Vec<i64>) -> Result<Self> {
        if n == 0 || n > MAX_GROUND_SET {
            return Err(Error::UnsupportedGroundSet { n });
        }
        if values.len() != 1 << n {
            return Err(Error::WrongTableSize {
                expected: 1 << n,
                got: values.len(),
            });
        }
        if values[0] != 0 {
            return Err(Error::NonZeroEmpty { got: values[0] });
        }
        let size = 1usize << n;
        for i in 0..size {
            for j in 0..size {
                if values[i] + values[j] < values[i | j] + values[i & j] {
                    return Err(Error::NotSubmodular {
                        i: SubsetMask(i as u32),
                        j: SubsetMask(j as u32),
                    });
                }
            }
        }
        Ok(RankFunction { n, values })
    }

    /// Wraps a table that is submodular by construction.
    pub(crate) fn new_unchecked(n: usize, values: Vec<i64>) -> Self {
        debug_assert!(RankFunction::new(n, values.clone()).is_ok());
        RankFunction { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, mask: SubsetMask) -> i64 {
        self.values[mask.0 as usize]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Rank of the full ground set: the common coordinate total of all bases.
    pub fn full_rank(&self) -> i64 {
        self.values[(1usize << self.n) - 1]
    }

    /// Per-coordinate search bounds `L_i <= a_i <= U_i` satisfied by every
    /// basis: `L_i = f([n]) - f([n] minus i)` and `U_i = f({i})`.
    pub fn coordinate_bounds(&self) -> (IntVector, IntVector) {
        let full = SubsetMask::full(self.n);
        let lo: Vec<i64> = (0..self.n)
            .map(|i| self.full_rank() - self.value(full.remove(i)))
            .collect();
        let hi: Vec<i64> = (0..self.n)
            .map(|i| self.value(SubsetMask::singleton(i)))
            .collect();
        (IntVector::new(lo), IntVector::new(hi))
    }

    /// Membership in the polymatroid defined by this rank function:
    /// `sum_{i in I} a_i <= f(I)` for every subset and equality on the full
    /// ground set. Works straight off the rank table.
    pub fn contains(&self, a: &IntVector) -> Result<bool> {
        if a.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: a.dim(),
            });
        }
        Ok(self.member(a.coords()))
    }

    /// `contains` without the dimension check, for internal hot paths.
    pub(crate) fn member(&self, coords: &[i64]) -> bool {
        debug_assert_eq!(coords.len(), self.n);
        let size = 1usize << self.n;
        let mut sums = vec![0i64; size];
        for m in 1..size {
            let low = m.trailing_zeros() as usize;
            sums[m] = sums[m & (m - 1)] + coords[low];
            if sums[m] > self.values[m] {
                return false;
            }
        }
        sums[size - 1] == self.full_rank()
    }

    /// The rank function `I -> f(w(I))` of the coordinate-permuted
    /// polymatroid `w(P)`.
    pub fn permuted(&self, w: &Permutation) -> Result<RankFunction> {
        if w.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: w.dim(),
            });
        }
        let values = SubsetMask::all(self.n)
            .map(|m| self.value(w.apply_mask(m)))
            .collect();
        Ok(RankFunction { n: self.n, values })
    }

    /// First witness that this is not a matroid rank function, i.e. a pair
    /// `(I, i)` with `f(I + i) - f(I)` outside `{0, 1}`. Returns `None` for
    /// matroid ranks.
    pub fn matroid_rank_witness(&self) -> Option<(SubsetMask, usize)> {
        for mask in SubsetMask::all(self.n) {
            for i in 0..self.n {
                if mask.contains(i) {
                    continue;
                }
                let step = self.value(mask.insert(i)) - self.value(mask);
                if step != 0 && step != 1 {
                    return Some((mask, i));
                }
            }
        }
        None
    }

    pub fn is_matroid_rank(&self) -> bool {
        self.matroid_rank_witness().is_none()
    }
}

impl std::fmt::Debug for RankFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RankFunction(n={}, values={:?})", self.n, self.values)
    }
}
