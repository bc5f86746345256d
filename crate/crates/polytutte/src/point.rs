use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::mask::SubsetMask;

/// An integer lattice point: a candidate basis, an ambient point, or a
/// displacement, depending on context.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntVector(Vec<i64>);

impl IntVector {
    pub fn new(coords: Vec<i64>) -> Self {
        IntVector(coords)
    }

    pub fn zeros(n: usize) -> Self {
        IntVector(vec![0; n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coord(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Sum of the coordinates indexed by `mask`.
    pub fn sum_over(&self, mask: SubsetMask) -> i64 {
        mask.iter().map(|i| self.0[i]).sum()
    }

    /// The vector `self + e_up - e_down`.
    pub fn exchanged(&self, up: usize, down: usize) -> Self {
        let mut coords = self.0.clone();
        coords[up] += 1;
        coords[down] -= 1;
        IntVector(coords)
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(coords: Vec<i64>) -> Self {
        IntVector(coords)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(", "))
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A permutation of the ground set, acting on coordinates.
///
/// `images[i] = j` means position `i` of the permuted vector reads
/// coordinate `j` of the original: `w(a) = (a_{w(0)}, ..., a_{w(n-1)})`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &j in &images {
            if j >= n || seen[j] {
                return Err(Error::NotABijection { n });
            }
            seen[j] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The transposition swapping positions `h` and `h + 1` (0-based).
    pub fn adjacent_transposition(h: usize, n: usize) -> Result<Self> {
        if h + 1 >= n {
            return Err(Error::PivotOutOfRange { pivot: h, n });
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(h, h + 1);
        Ok(Permutation { images })
    }

    /// All `n!` permutations, in lexicographic order of their image lists.
    pub fn all(n: usize) -> Vec<Permutation> {
        (0..n)
            .permutations(n)
            .map(|images| Permutation { images })
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// `w(a) = (a_{w(0)}, ..., a_{w(n-1)})`.
    pub fn apply_vector(&self, a: &IntVector) -> IntVector {
        IntVector(self.images.iter().map(|&j| a.coord(j)).collect())
    }

    /// The image set `{w(i) | i in mask}`.
    pub fn apply_mask(&self, mask: SubsetMask) -> SubsetMask {
        let mut out = SubsetMask::EMPTY;
        for i in mask.iter() {
            out = out.insert(self.images[i]);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().map(|&j| j + 1).join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
