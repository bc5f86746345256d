use crate::error::Result;
use crate::mask::SubsetMask;
use crate::point::{IntVector, Permutation};
use crate::rank::RankFunction;

/// A polymatroid given by its rank function together with the full list of
/// its bases: the integer vectors `a` with `sum_{i in I} a_i <= f(I)` for
/// every subset `I` and `sum_i a_i = f([n])`. Bases are kept in
/// lexicographic order.
#[derive(Clone, PartialEq, Eq)]
pub struct Polymatroid {
    rank: RankFunction,
    bases: Vec<IntVector>,
}

impl Polymatroid {
    /// Enumerates all bases of the rank function by depth-first search over
    /// coordinates, maintaining partial subset sums and pruning with the
    /// per-coordinate bounds. An empty base set is representable (operations
    /// that require nonemptiness report that themselves), though validated
    /// rank tables always admit at least one basis.
    pub fn from_rank(rank: RankFunction) -> Self {
        let n = rank.n();
        let (lo, hi) = rank.coordinate_bounds();
        // Suffix sums of the bounds let us prune branches that can no longer
        // reach the required total.
        let mut lo_suffix = vec![0i64; n + 1];
        let mut hi_suffix = vec![0i64; n + 1];
        for i in (0..n).rev() {
            lo_suffix[i] = lo_suffix[i + 1] + lo.coord(i);
            hi_suffix[i] = hi_suffix[i + 1] + hi.coord(i);
        }

        let size = 1usize << n;
        let mut sums = vec![0i64; size];
        let mut coords = vec![0i64; n];
        let mut bases = Vec::new();
        search(
            &rank,
            &lo,
            &hi,
            &lo_suffix,
            &hi_suffix,
            0,
            0,
            &mut sums,
            &mut coords,
            &mut bases,
        );
        Polymatroid { rank, bases }
    }

    pub fn rank(&self) -> &RankFunction {
        &self.rank
    }

    pub fn n(&self) -> usize {
        self.rank.n()
    }

    /// Bases in lexicographic order.
    pub fn bases(&self) -> &[IntVector] {
        &self.bases
    }

    pub fn contains(&self, a: &IntVector) -> Result<bool> {
        self.rank.contains(a)
    }

    /// The coordinate-permuted polymatroid `w(P)`, with `w(a)` a basis of
    /// `w(P)` exactly when `a` is a basis of `P`. Built by mapping the basis
    /// list (and re-sorting) rather than re-enumerating.
    pub fn permuted(&self, w: &Permutation) -> Result<Polymatroid> {
        let rank = self.rank.permuted(w)?;
        let mut bases: Vec<IntVector> = self.bases.iter().map(|a| w.apply_vector(a)).collect();
        bases.sort();
        debug_assert_eq!(
            bases,
            Polymatroid::from_rank(rank.clone()).bases,
            "permuted basis list must agree with direct enumeration"
        );
        Ok(Polymatroid { rank, bases })
    }
}

#[allow(clippy::too_many_arguments)]
fn search(
    rank: &RankFunction,
    lo: &IntVector,
    hi: &IntVector,
    lo_suffix: &[i64],
    hi_suffix: &[i64],
    depth: usize,
    placed: i64,
    sums: &mut [i64],
    coords: &mut [i64],
    bases: &mut Vec<IntVector>,
) {
    let n = rank.n();
    if depth == n {
        if placed == rank.full_rank() {
            bases.push(IntVector::new(coords.to_vec()));
        }
        return;
    }
    let remaining = rank.full_rank() - placed;
    let lo_here = lo.coord(depth).max(remaining - hi_suffix[depth + 1]);
    let hi_here = hi.coord(depth).min(remaining - lo_suffix[depth + 1]);
    'candidate: for v in lo_here..=hi_here {
        coords[depth] = v;
        // Refresh the subset sums for every mask whose top element is
        // `depth` and check the corresponding rank constraints. The sums
        // below `depth` are fixed here, so a violation at `v` persists for
        // every larger `v` and the whole candidate range can be abandoned.
        let bit = 1usize << depth;
        for below in 0..bit {
            let m = below | bit;
            sums[m] = sums[below] + v;
            if sums[m] > rank.value(SubsetMask(m as u32)) {
                break 'candidate;
            }
        }
        search(
            rank,
            lo,
            hi,
            lo_suffix,
            hi_suffix,
            depth + 1,
            placed + v,
            sums,
            coords,
            bases,
        );
    }
}

impl std::fmt::Debug for Polymatroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Polymatroid(n={}, {} bases)",
            self.rank.n(),
            self.bases.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::uniform;

    fn vecs(list: &[Vec<i64>]) -> Vec<IntVector> {
        list.iter().cloned().map(IntVector::new).collect()
    }

    #[test]
    fn uniform_one_of_two_has_the_two_unit_vectors() {
        let p = Polymatroid::from_rank(uniform(1, 2).unwrap());
        assert_eq!(p.bases(), vecs(&[vec![0, 1], vec![1, 0]]).as_slice());
    }

    #[test]
    fn asymmetric_rank_table_bases() {
        let f = RankFunction::new(2, vec![0, 2, 1, 2]).unwrap();
        let p = Polymatroid::from_rank(f);
        assert_eq!(p.bases(), vecs(&[vec![1, 1], vec![2, 0]]).as_slice());
    }

    #[test]
    fn single_coordinate_polymatroid_has_one_basis() {
        let f = RankFunction::new(1, vec![0, 3]).unwrap();
        let p = Polymatroid::from_rank(f);
        assert_eq!(p.bases(), vecs(&[vec![3]]).as_slice());
    }

    #[test]
    fn basis_count_of_uniform_matroids_is_binomial() {
        // U_{2,4} has C(4,2) = 6 bases, the 0/1 vectors with two ones.
        let p = Polymatroid::from_rank(uniform(2, 4).unwrap());
        assert_eq!(p.bases().len(), 6);
        for a in p.bases() {
            assert_eq!(a.total(), 2);
            assert!(a.coords().iter().all(|&c| c == 0 || c == 1));
        }
    }

    #[test]
    fn every_enumerated_basis_passes_membership() {
        let f = RankFunction::new(3, vec![0, 2, 2, 3, 1, 3, 3, 4]).unwrap();
        let p = Polymatroid::from_rank(f);
        assert!(!p.bases().is_empty());
        for a in p.bases() {
            assert!(p.contains(a).unwrap());
        }
        // Lexicographic order is part of the contract.
        let mut sorted = p.bases().to_vec();
        sorted.sort();
        assert_eq!(sorted.as_slice(), p.bases());
    }

    #[test]
    fn permuted_bases_match_reenumeration() {
        let f = RankFunction::new(2, vec![0, 2, 1, 2]).unwrap();
        let p = Polymatroid::from_rank(f);
        let w = Permutation::adjacent_transposition(0, 2).unwrap();
        let q = p.permuted(&w).unwrap();
        assert_eq!(q.bases(), vecs(&[vec![0, 2], vec![1, 1]]).as_slice());
    }

    #[test]
    fn rank_zero_polymatroid_has_the_origin() {
        let p = Polymatroid::from_rank(uniform(0, 3).unwrap());
        assert_eq!(p.bases(), vecs(&[vec![0, 0, 0]]).as_slice());
    }
}
