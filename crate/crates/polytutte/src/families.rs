//! Constructors for the rank functions used throughout the tests and the
//! command line: uniform matroids, graphic matroids, and weighted coverage
//! functions (deterministically seeded random ones included).

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::rank::{RankFunction, MAX_GROUND_SET};

/// Rank function of the uniform matroid `U_{d,n}`: `f(I) = min(|I|, d)`.
pub fn uniform(d: usize, n: usize) -> Result<RankFunction> {
    if n == 0 || n > MAX_GROUND_SET {
        return Err(Error::UnsupportedGroundSet { n });
    }
    if d > n {
        return Err(Error::InvalidRank { d, n });
    }
    let values = SubsetMask::all(n).map(|m| m.len().min(d) as i64).collect();
    Ok(RankFunction::new_unchecked(n, values))
}

/// Rank function of the graphic matroid of a multigraph: for an edge subset,
/// the number of vertices it touches minus the number of connected components
/// it spans. Loops and parallel edges are allowed; the ground set is the edge
/// list in the given order.
pub fn graphic(vertex_count: usize, edges: &[(usize, usize)]) -> Result<RankFunction> {
    let n = edges.len();
    if n == 0 || n > MAX_GROUND_SET {
        return Err(Error::UnsupportedGroundSet { n });
    }
    for (idx, &(u, v)) in edges.iter().enumerate() {
        for vertex in [u, v] {
            if vertex >= vertex_count {
                return Err(Error::VertexOutOfRange {
                    edge: idx,
                    vertex,
                    vertices: vertex_count,
                });
            }
        }
    }
    let values = SubsetMask::all(n)
        .map(|mask| {
            // Union-find over the vertices touched by the selected edges.
            let mut parent: Vec<usize> = (0..vertex_count).collect();
            fn find(parent: &mut [usize], mut x: usize) -> usize {
                while parent[x] != x {
                    parent[x] = parent[parent[x]];
                    x = parent[x];
                }
                x
            }
            // Starting from isolated vertices, each union of two distinct
            // components adds exactly one edge to a spanning forest.
            let mut merges = 0i64;
            for e in mask.iter() {
                let (u, v) = edges[e];
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru != rv {
                    parent[ru] = rv;
                    merges += 1;
                }
            }
            merges
        })
        .collect();
    Ok(RankFunction::new_unchecked(n, values))
}

/// Weighted coverage function `f(I) = sum of weights of parts hit by I`,
/// given parts as (member mask, weight) pairs. Coverage functions are
/// submodular for nonnegative weights, which this enforces.
///
/// For example, parts `({1,2}, 3)` on a ground set of size 2 give the table
/// `[0, 3, 3, 3]` — either element alone already covers the part.
pub fn coverage_from_parts(n: usize, parts: &[(SubsetMask, i64)]) -> Result<RankFunction> {
    if n == 0 || n > MAX_GROUND_SET {
        return Err(Error::UnsupportedGroundSet { n });
    }
    if parts.is_empty() {
        return Err(Error::NoCoverageParts);
    }
    let full = SubsetMask::full(n);
    for &(members, weight) in parts {
        if !members.is_subset_of(full) || members.is_empty() || weight < 0 {
            return Err(Error::NoCoverageParts);
        }
    }
    let values = SubsetMask::all(n)
        .map(|mask| {
            parts
                .iter()
                .filter(|(members, _)| !mask.intersection(*members).is_empty())
                .map(|&(_, weight)| weight)
                .sum()
        })
        .collect();
    Ok(RankFunction::new_unchecked(n, values))
}

/// Deterministically seeded random coverage function: `parts` parts, each a
/// uniformly random nonempty subset of a `ground`-point universe with an
/// integer weight in `1..=max_weight`, covered through `n` blocks that
/// partition the universe round-robin (point `p` belongs to block
/// `p mod n`). The same seed always yields the same rank table.
pub fn random_coverage(
    n: usize,
    seed: u64,
    ground: usize,
    parts: usize,
    max_weight: i64,
) -> Result<RankFunction> {
    if n == 0 || n > MAX_GROUND_SET {
        return Err(Error::UnsupportedGroundSet { n });
    }
    if parts == 0 || ground == 0 || max_weight < 1 {
        return Err(Error::NoCoverageParts);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut part_list = Vec::with_capacity(parts);
    for _ in 0..parts {
        // Nonempty point subset, then projected onto the blocks it meets.
        let point_set = loop {
            let bits = rng.next_u64() & ((1u64 << ground) - 1);
            if bits != 0 {
                break bits;
            }
        };
        let mut members = SubsetMask::EMPTY;
        for p in 0..ground {
            if point_set >> p & 1 == 1 {
                members = members.insert(p % n);
            }
        }
        let weight = 1 + (rng.next_u64() % max_weight as u64) as i64;
        part_list.push((members, weight));
    }
    coverage_from_parts(n, &part_list)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_tables() {
        assert_eq!(uniform(1, 2).unwrap().values(), &[0, 1, 1, 1]);
        assert_eq!(uniform(2, 2).unwrap().values(), &[0, 1, 1, 2]);
        assert_eq!(uniform(0, 2).unwrap().values(), &[0, 0, 0, 0]);
        assert!(matches!(
            uniform(3, 2),
            Err(Error::InvalidRank { d: 3, n: 2 })
        ));
    }

    #[test]
    fn graphic_rank_counts_spanning_forest_edges() {
        // Triangle: every single edge has rank 1, every pair rank 2, all
        // three still rank 2 (one cycle).
        let f = graphic(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(f.values(), &[0, 1, 1, 2, 1, 2, 2, 2]);
        assert!(f.is_matroid_rank());
    }

    #[test]
    fn graphic_rank_handles_loops_and_parallels() {
        // A loop contributes nothing; parallel edges share their rank.
        let f = graphic(2, &[(0, 0), (0, 1), (0, 1)]).unwrap();
        assert_eq!(f.values(), &[0, 0, 1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn graphic_rejects_bad_vertices() {
        assert!(matches!(
            graphic(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange {
                edge: 0,
                vertex: 2,
                vertices: 2
            })
        ));
    }

    #[test]
    fn coverage_table_from_one_part() {
        let f = coverage_from_parts(2, &[(SubsetMask(0b11), 3)]).unwrap();
        assert_eq!(f.values(), &[0, 3, 3, 3]);
    }

    #[test]
    fn coverage_table_from_two_parts() {
        let f = coverage_from_parts(2, &[(SubsetMask(0b01), 2), (SubsetMask(0b11), 1)]).unwrap();
        assert_eq!(f.values(), &[0, 3, 1, 3]);
    }

    #[test]
    fn random_coverage_is_reproducible_and_submodular() {
        let a = random_coverage(3, 7, 4, 2, 2).unwrap();
        let b = random_coverage(3, 7, 4, 2, 2).unwrap();
        assert_eq!(a.values(), b.values());
        // new() re-runs the full submodularity scan
        assert!(RankFunction::new(3, a.values().to_vec()).is_ok());
        let c = random_coverage(3, 8, 4, 2, 2).unwrap();
        assert!(a.values() != c.values() || a.full_rank() == c.full_rank());
    }
}
