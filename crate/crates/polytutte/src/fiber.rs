//! Decomposition of the basis set into fibers: maximal chains of bases that
//! agree on every coordinate outside an adjacent pair `{h, h+1}` and differ
//! along `e_h - e_{h+1}`. Each fiber is an unbroken interval, which is what
//! the swap arguments for adjacent transpositions run on.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::point::IntVector;
use crate::polymatroid::Polymatroid;

/// One fiber with respect to the adjacent pair `(h, h+1)`: the members share
/// all coordinates outside the pair (and hence the pair sum), and are listed
/// in increasing order of coordinate `h`, consecutive members one exchange
/// step `e_h - e_{h+1}` apart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    pivot: usize,
    members: Vec<IntVector>,
}

impl Fiber {
    pub fn pivot(&self) -> usize {
        self.pivot
    }

    /// Members ordered by coordinate `h`, ascending.
    pub fn members(&self) -> &[IntVector] {
        &self.members
    }

    /// Member with the smallest coordinate `h` (largest `h+1`).
    pub fn first(&self) -> &IntVector {
        self.members.first().expect("fibers are nonempty")
    }

    /// Member with the largest coordinate `h` (smallest `h+1`).
    pub fn last(&self) -> &IntVector {
        self.members.last().expect("fibers are nonempty")
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Groups all bases of `p` into fibers with respect to the adjacent pair
/// `(h, h+1)` and checks each group is a contiguous chain in coordinate `h`.
/// Every basis lies in exactly one fiber; singleton fibers are kept.
pub fn fiber_decomposition(p: &Polymatroid, pivot: usize) -> Result<Vec<Fiber>> {
    let n = p.n();
    if pivot + 1 >= n {
        return Err(Error::PivotOutOfRange { pivot, n });
    }
    // Key a basis by its coordinates with the pair (h, h+1) blanked out; the
    // pair sum is then determined by the fixed total.
    let mut groups: BTreeMap<Vec<i64>, Vec<IntVector>> = BTreeMap::new();
    for a in p.bases() {
        let mut key = a.coords().to_vec();
        key[pivot] = 0;
        key[pivot + 1] = 0;
        groups.entry(key).or_default().push(a.clone());
    }
    let mut fibers = Vec::with_capacity(groups.len());
    for (_, mut members) in groups {
        members.sort_by_key(|a| a.coord(pivot));
        for pair in members.windows(2) {
            if pair[1].coord(pivot) != pair[0].coord(pivot) + 1 {
                return Err(Error::GapInFiber {
                    pivot,
                    member: pair[0].clone(),
                });
            }
        }
        fibers.push(Fiber { pivot, members });
    }
    Ok(fibers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::uniform;
    use crate::rank::RankFunction;

    #[test]
    fn uniform_one_of_two_is_a_single_fiber() {
        let p = Polymatroid::from_rank(uniform(1, 2).unwrap());
        let fibers = fiber_decomposition(&p, 0).unwrap();
        assert_eq!(fibers.len(), 1);
        assert_eq!(fibers[0].first(), &IntVector::new(vec![0, 1]));
        assert_eq!(fibers[0].last(), &IntVector::new(vec![1, 0]));
    }

    #[test]
    fn fibers_partition_the_bases() {
        let p = Polymatroid::from_rank(uniform(2, 4).unwrap());
        for pivot in 0..3 {
            let fibers = fiber_decomposition(&p, pivot).unwrap();
            let total: usize = fibers.iter().map(Fiber::len).sum();
            assert_eq!(total, p.bases().len());
            for fiber in &fibers {
                for pair in fiber.members().windows(2) {
                    let step = pair[0].exchanged(pivot, pivot + 1);
                    assert_eq!(step, pair[1]);
                }
            }
        }
    }

    #[test]
    fn singleton_fibers_appear_when_no_exchange_applies() {
        // Coordinates are independent here, but the pair sum pins both, so
        // every fiber w.r.t. (0,1) of this two-basis polymatroid is split by
        // the third coordinate.
        let f = RankFunction::new(3, vec![0, 1, 1, 1, 1, 2, 2, 2]).unwrap();
        let p = Polymatroid::from_rank(f);
        let fibers = fiber_decomposition(&p, 1).unwrap();
        assert!(fibers.iter().any(|f| f.len() == 1));
    }

    #[test]
    fn pivot_must_name_an_adjacent_pair() {
        let p = Polymatroid::from_rank(uniform(1, 2).unwrap());
        assert!(matches!(
            fiber_decomposition(&p, 1),
            Err(Error::PivotOutOfRange { pivot: 1, n: 2 })
        ));
    }
}
