//! The standing verification corpus: every uniform matroid on up to five
//! elements, the cycle matroid of every connected multigraph with up to
//! four edges (up to isomorphism), and fifty deterministically seeded
//! coverage polymatroids. Small enough that exhaustive per-instance checks
//! finish in seconds, varied enough to exercise loops, coloops, parallel
//! elements, and genuinely non-matroidal rank tables.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::families::{graphic, random_coverage, uniform};
use crate::rank::RankFunction;

/// One corpus member: a validated rank table plus a diagnostic label that
/// identifies the instance in failure messages.
#[derive(Clone)]
pub struct CorpusInstance {
    pub name: String,
    pub rank: RankFunction,
}

/// All uniform matroids `U_{d,n}` with `1 <= n <= 5` and `0 <= d <= n`.
pub fn uniform_sweep() -> Vec<CorpusInstance> {
    let mut out = Vec::new();
    for n in 1..=5 {
        for d in 0..=n {
            out.push(CorpusInstance {
                name: format!("uniform:{d},{n}"),
                rank: uniform(d, n).expect("rank within ground-set size"),
            });
        }
    }
    out
}

fn all_vertices_connected(vertex_count: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..vertex_count).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(u, v) in edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
        }
    }
    let root = find(&mut parent, 0);
    (1..vertex_count).all(|v| find(&mut parent, v) == root)
}

/// Lexicographically least relabeling of the edge multiset over all vertex
/// permutations; equal canonical forms mean isomorphic multigraphs.
fn canonical_form(vertex_count: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    (0..vertex_count)
        .permutations(vertex_count)
        .map(|relabel| {
            let mut mapped: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (relabel[a], relabel[b]);
                    (x.min(y), x.max(y))
                })
                .collect();
            mapped.sort_unstable();
            mapped
        })
        .min()
        .expect("at least one relabeling")
}

/// Every connected multigraph with `1..=max_edges` edges, one per
/// isomorphism class, as `(vertex count, canonical edge list)` pairs.
/// Loops and parallel edges are allowed. A connected graph satisfies
/// `vertices <= edges + 1`, which bounds the search.
pub fn connected_multigraphs(max_edges: usize) -> Vec<(usize, Vec<(usize, usize)>)> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for edge_count in 1..=max_edges {
        for vertex_count in 1..=edge_count + 1 {
            let slots: Vec<(usize, usize)> = (0..vertex_count)
                .flat_map(|a| (a..vertex_count).map(move |b| (a, b)))
                .collect();
            for combo in slots.iter().combinations_with_replacement(edge_count) {
                let edges: Vec<(usize, usize)> = combo.into_iter().copied().collect();
                if !all_vertices_connected(vertex_count, &edges) {
                    continue;
                }
                let canon = canonical_form(vertex_count, &edges);
                if seen.insert((vertex_count, canon.clone())) {
                    out.push((vertex_count, canon));
                }
            }
        }
    }
    out
}

/// Cycle matroids of all connected multigraphs with up to four edges.
pub fn graphic_sweep() -> Vec<CorpusInstance> {
    connected_multigraphs(4)
        .into_iter()
        .map(|(vertex_count, edges)| CorpusInstance {
            name: format!("graph:{vertex_count}v,{edges:?}"),
            rank: graphic(vertex_count, &edges).expect("canonical endpoints in range"),
        })
        .collect()
}

/// Fifty seeded coverage polymatroids with `n` in `{2,3,4}` and full rank
/// at most 4 (at most two parts of weight at most two each).
pub fn coverage_sweep() -> Vec<CorpusInstance> {
    (0u64..50)
        .map(|seed| {
            let n = 2 + (seed as usize % 3);
            let parts = 1 + (seed as usize % 2);
            let max_weight = 1 + ((seed / 2) % 2) as i64;
            CorpusInstance {
                name: format!("coverage:{seed},{n},4,{parts},{max_weight}"),
                rank: random_coverage(n, seed, 4, parts, max_weight)
                    .expect("sweep parameters in range"),
            }
        })
        .collect()
}

/// The whole corpus in a fixed order: uniform, then graphic, then coverage.
pub fn full_corpus() -> Vec<CorpusInstance> {
    let mut out = uniform_sweep();
    out.extend(graphic_sweep());
    out.extend(coverage_sweep());
    out
}
