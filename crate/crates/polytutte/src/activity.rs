//! Internal and external activity of basis coordinates, the tight-set
//! families that characterize them, and per-basis activity records.

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::point::IntVector;
use crate::polymatroid::Polymatroid;

fn require_basis(p: &Polymatroid, a: &IntVector) -> Result<()> {
    if !p.contains(a)? {
        return Err(Error::NotABasis(a.clone()));
    }
    Ok(())
}

/// `i` is internally active in the basis `a` when no exchange that lowers
/// coordinate `i` in favour of an earlier coordinate stays in the
/// polymatroid: `a - e_i + e_j` is not in `P` for every `j < i`. The first
/// coordinate is vacuously internally active in every basis.
pub fn is_internally_active(p: &Polymatroid, a: &IntVector, i: usize) -> Result<bool> {
    require_basis(p, a)?;
    for j in 0..i {
        if p.contains(&a.exchanged(j, i))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `i` is externally active in the basis `a` when no exchange that raises
/// coordinate `i` at the expense of an earlier coordinate stays in the
/// polymatroid: `a + e_i - e_j` is not in `P` for every `j < i`. The first
/// coordinate is vacuously externally active in every basis.
pub fn is_externally_active(p: &Polymatroid, a: &IntVector, i: usize) -> Result<bool> {
    require_basis(p, a)?;
    for j in 0..i {
        if p.contains(&a.exchanged(i, j))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The activity profile of one basis: which coordinates are internally and
/// externally active.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActivityRecord {
    pub basis: IntVector,
    pub internal: SubsetMask,
    pub external: SubsetMask,
}

impl ActivityRecord {
    /// Count of coordinates that are internally but not externally active.
    pub fn only_internal(&self) -> u32 {
        (self.internal.len() - self.internal.intersection(self.external).len()) as u32
    }

    /// Count of coordinates that are externally but not internally active.
    pub fn only_external(&self) -> u32 {
        (self.external.len() - self.internal.intersection(self.external).len()) as u32
    }

    /// Count of coordinates active in both senses.
    pub fn both(&self) -> u32 {
        self.internal.intersection(self.external).len() as u32
    }
}

/// Activity profile of a single basis.
pub fn activity_record(p: &Polymatroid, a: &IntVector) -> Result<ActivityRecord> {
    let mut internal = SubsetMask::EMPTY;
    let mut external = SubsetMask::EMPTY;
    for i in 0..p.n() {
        if is_internally_active(p, a, i)? {
            internal = internal.insert(i);
        }
        if is_externally_active(p, a, i)? {
            external = external.insert(i);
        }
    }
    Ok(ActivityRecord {
        basis: a.clone(),
        internal,
        external,
    })
}

/// Activity profiles of all bases, in basis (lexicographic) order.
pub fn activity_records(p: &Polymatroid) -> Result<Vec<ActivityRecord>> {
    p.bases().iter().map(|a| activity_record(p, a)).collect()
}

/// The family of tight sets of a basis: the subsets where the defining
/// inequality holds with equality, `sum_{i in I} a_i = f(I)`. Always
/// contains the empty set and the full ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TightFamily {
    n: usize,
    sets: Vec<SubsetMask>,
}

impl TightFamily {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[SubsetMask] {
        &self.sets
    }

    pub fn contains(&self, mask: SubsetMask) -> bool {
        self.sets.binary_search_by_key(&mask.0, |s| s.0).is_ok()
    }

    /// First pair of tight sets whose union or intersection is not tight,
    /// if any. `None` certifies closure under union and intersection.
    pub fn lattice_violation(&self) -> Option<(SubsetMask, SubsetMask)> {
        for &x in &self.sets {
            for &y in &self.sets {
                if !self.contains(x.union(y)) || !self.contains(x.intersection(y)) {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

/// Tight sets of the basis `a`, in increasing mask order.
pub fn tight_sets(p: &Polymatroid, a: &IntVector) -> Result<TightFamily> {
    require_basis(p, a)?;
    let n = p.n();
    let sets = SubsetMask::all(n)
        .filter(|&m| a.sum_over(m) == p.rank().value(m))
        .collect();
    Ok(TightFamily { n, sets })
}

/// The two senses of activity, for callers that select one by value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActivityKind {
    Internal,
    External,
}

/// Activity read off a precomputed tight-set family instead of exchange
/// probes: `i` is internally active exactly when some set `I` with least
/// element `i` has a tight complement (equivalently, some tight set contains
/// all earlier coordinates but not `i`), and externally active exactly when
/// some tight set has `i` as its least element.
pub fn active_in_family(family: &TightFamily, i: usize, kind: ActivityKind) -> bool {
    let earlier = SubsetMask::below(i);
    match kind {
        ActivityKind::Internal => family
            .sets
            .iter()
            .any(|&t| earlier.is_subset_of(t) && !t.contains(i)),
        ActivityKind::External => family
            .sets
            .iter()
            .any(|&t| t.contains(i) && t.intersection(earlier).is_empty()),
    }
}

/// Tight-set route to activity, as an independent oracle for the exchange
/// predicates: computes the family of `a` and checks it. Agreement of the
/// two routes on every basis, index, and kind is a core verified property.
pub fn active_via_tight_sets(
    p: &Polymatroid,
    a: &IntVector,
    i: usize,
    kind: ActivityKind,
) -> Result<bool> {
    let family = tight_sets(p, a)?;
    Ok(active_in_family(&family, i, kind))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::uniform;
    use crate::rank::RankFunction;

    fn poly(n: usize, values: Vec<i64>) -> Polymatroid {
        Polymatroid::from_rank(RankFunction::new(n, values).unwrap())
    }

    #[test]
    fn first_coordinate_is_always_active_both_ways() {
        let p = poly(3, vec![0, 2, 2, 3, 1, 3, 3, 4]);
        for a in p.bases() {
            assert!(is_internally_active(&p, a, 0).unwrap());
            assert!(is_externally_active(&p, a, 0).unwrap());
        }
    }

    #[test]
    fn two_element_uniform_records() {
        let p = Polymatroid::from_rank(uniform(1, 2).unwrap());
        let records = activity_records(&p).unwrap();
        // bases in lex order: (0,1) then (1,0)
        assert_eq!(records[0].basis, IntVector::new(vec![0, 1]));
        assert_eq!(records[0].internal, SubsetMask(0b01));
        assert_eq!(records[0].external, SubsetMask(0b11));
        assert_eq!(
            (
                records[0].only_internal(),
                records[0].only_external(),
                records[0].both()
            ),
            (0, 1, 1)
        );
        assert_eq!(records[1].basis, IntVector::new(vec![1, 0]));
        assert_eq!(records[1].internal, SubsetMask(0b11));
        assert_eq!(records[1].external, SubsetMask(0b01));
        assert_eq!(
            (
                records[1].only_internal(),
                records[1].only_external(),
                records[1].both()
            ),
            (1, 0, 1)
        );
    }

    #[test]
    fn tight_sets_of_unit_vector_bases() {
        let p = Polymatroid::from_rank(uniform(1, 2).unwrap());
        let fam = tight_sets(&p, &IntVector::new(vec![1, 0])).unwrap();
        assert_eq!(
            fam.sets(),
            &[SubsetMask::EMPTY, SubsetMask(0b01), SubsetMask(0b11)]
        );
        assert!(fam.lattice_violation().is_none());
    }

    #[test]
    fn tight_set_activity_matches_exchange_activity() {
        let p = poly(3, vec![0, 2, 2, 3, 1, 3, 3, 4]);
        for a in p.bases() {
            for i in 0..p.n() {
                assert_eq!(
                    active_via_tight_sets(&p, a, i, ActivityKind::Internal).unwrap(),
                    is_internally_active(&p, a, i).unwrap(),
                    "internal mismatch at {a} coordinate {i}"
                );
                assert_eq!(
                    active_via_tight_sets(&p, a, i, ActivityKind::External).unwrap(),
                    is_externally_active(&p, a, i).unwrap(),
                    "external mismatch at {a} coordinate {i}"
                );
            }
        }
    }

    #[test]
    fn non_bases_are_rejected() {
        let p = Polymatroid::from_rank(uniform(1, 2).unwrap());
        let outside = IntVector::new(vec![2, -1]);
        assert!(matches!(
            is_internally_active(&p, &outside, 1),
            Err(Error::NotABasis(_))
        ));
        assert!(matches!(tight_sets(&p, &outside), Err(Error::NotABasis(_))));
    }
}
