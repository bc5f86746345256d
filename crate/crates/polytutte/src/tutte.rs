//! The main invariants: the activity-based Tutte polynomial of a
//! polymatroid, the classical Tutte polynomial of a matroid computed two
//! independent ways, the lattice-distance generating series, and the checks
//! tying them together (coordinate-permutation invariance, the truncated
//! series identity, and the matroid correspondence formula).

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::activity::{activity_records, ActivityRecord};
use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::point::{IntVector, Permutation};
use crate::poly::{BivariatePolynomial, Coefficient, VarPair, UV, XY};
use crate::polymatroid::Polymatroid;
use crate::rank::RankFunction;
use crate::series::{expand_transformed_tutte, TruncatedSeries};

/// The summand `x^oi * y^oe * (x+y-1)^ie` contributed by one basis.
pub fn tutte_summand<C: Coefficient>(oi: u32, oe: u32, ie: u32) -> BivariatePolynomial<C> {
    let x = BivariatePolynomial::var_first(XY);
    let y = BivariatePolynomial::var_second(XY);
    let core = x.add(&y).sub(&BivariatePolynomial::one(XY));
    BivariatePolynomial::term(C::one(), oi, oe, XY).mul(&core.pow(ie))
}

/// Assembles the polynomial from precomputed activity records.
pub fn tutte_from_records<C: Coefficient>(records: &[ActivityRecord]) -> BivariatePolynomial<C> {
    let mut total = BivariatePolynomial::zero(XY);
    for r in records {
        total = total.add(&tutte_summand(
            r.only_internal(),
            r.only_external(),
            r.both(),
        ));
    }
    total
}

/// The Tutte polynomial of a polymatroid: the sum over all bases of
/// `x^oi * y^oe * (x+y-1)^ie`, where the exponents count internally-only,
/// externally-only, and doubly active coordinates. An empty base set gives
/// the zero polynomial.
pub fn polymatroid_tutte<C: Coefficient>(p: &Polymatroid) -> BivariatePolynomial<C> {
    let records = activity_records(p).expect("enumerated bases are members");
    tutte_from_records(&records)
}

fn require_matroid(rank: &RankFunction) -> Result<()> {
    if let Some((subset, element)) = rank.matroid_rank_witness() {
        return Err(Error::NotAMatroidRank { subset, element });
    }
    Ok(())
}

/// The bases of a matroid given by its rank function: the subsets of full
/// size and full rank, in increasing mask order.
pub fn matroid_bases(rank: &RankFunction) -> Result<Vec<SubsetMask>> {
    require_matroid(rank)?;
    let d = rank.full_rank();
    Ok(SubsetMask::all(rank.n())
        .filter(|&b| b.len() as i64 == d && rank.value(b) == d)
        .collect())
}

/// The classical Tutte polynomial via basis activities: the sum over bases
/// `B` of `x^i(B) * y^j(B)`, where `i(B)` counts elements of `B` with no
/// smaller replacement (`e` with no `e' < e` outside `B` making
/// `B - e + e'` a basis) and `j(B)` counts elements outside `B` with no
/// smaller exchange (`e` with no `e' < e` inside `B` making `B + e - e'` a
/// basis). Elements are compared in ground-set order.
pub fn classical_tutte_activity<C: Coefficient>(
    rank: &RankFunction,
) -> Result<BivariatePolynomial<C>> {
    let bases = matroid_bases(rank)?;
    let lookup: BTreeSet<u32> = bases.iter().map(|b| b.0).collect();
    let n = rank.n();
    let mut total = BivariatePolynomial::zero(XY);
    for &b in &bases {
        let mut internal = 0u32;
        let mut external = 0u32;
        for e in 0..n {
            if b.contains(e) {
                let replaceable =
                    (0..e).any(|e2| !b.contains(e2) && lookup.contains(&b.remove(e).insert(e2).0));
                if !replaceable {
                    internal += 1;
                }
            } else {
                let exchangeable =
                    (0..e).any(|e2| b.contains(e2) && lookup.contains(&b.insert(e).remove(e2).0));
                if !exchangeable {
                    external += 1;
                }
            }
        }
        total = total.add(&BivariatePolynomial::term(C::one(), internal, external, XY));
    }
    Ok(total)
}

/// The classical Tutte polynomial by the corank–nullity expansion
/// `sum_{A subseteq E} (x-1)^{d - f(A)} (y-1)^{|A| - f(A)}`, used as an
/// independent oracle for the activity route.
pub fn classical_tutte_corank_nullity<C: Coefficient>(
    rank: &RankFunction,
) -> Result<BivariatePolynomial<C>> {
    require_matroid(rank)?;
    let d = rank.full_rank();
    let x_minus_one = BivariatePolynomial::var_first(XY).sub(&BivariatePolynomial::one(XY));
    let y_minus_one = BivariatePolynomial::var_second(XY).sub(&BivariatePolynomial::one(XY));
    let mut total = BivariatePolynomial::zero(XY);
    for a in SubsetMask::all(rank.n()) {
        let corank = (d - rank.value(a)) as u32;
        let nullity = (a.len() as i64 - rank.value(a)) as u32;
        total = total.add(&x_minus_one.pow(corank).mul(&y_minus_one.pow(nullity)));
    }
    Ok(total)
}

/// Outcome of the sampled correspondence identity between the classical
/// Tutte polynomial of a matroid and the Tutte polynomial of its 0/1
/// polymatroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub sample_count: usize,
    pub holds: bool,
    /// First sample `(x, y)` where the two sides differ, if any.
    pub failure: Option<(i64, i64)>,
}

/// First `k` primes, for sample grids.
fn primes(k: usize) -> Vec<i64> {
    let mut out: Vec<i64> = Vec::with_capacity(k);
    let mut candidate = 2i64;
    while out.len() < k {
        if out.iter().all(|p| candidate % p != 0) {
            out.push(candidate);
        }
        candidate += 1;
    }
    out
}

fn int_pow(base: &BigInt, e: u32) -> BigInt {
    let mut out = BigInt::from(1);
    for _ in 0..e {
        out *= base;
    }
    out
}

/// Checks the identity `T_M(x,y) * x^{n-d} * y^d = (x+y-xy)^n *
/// T_P(x/s, y/s)` (with `s = x+y-xy` and `P` the 0/1 polymatroid of the
/// matroid `M`) at a grid of exact sample points, using the cross-multiplied
/// form `s^n * T_P(x/s, y/s) = sum c_{pq} x^p y^q s^{n-p-q}`, which clears
/// every denominator. The grid takes enough primes per axis to exceed the
/// per-variable degree bound of both sides, skipping the one point where
/// `s = 0`, so pointwise equality pins down the polynomial identity.
pub fn correspondence_check(rank: &RankFunction) -> Result<CorrespondenceReport> {
    let n = rank.n();
    let d = rank.full_rank() as u32;
    let classical: BivariatePolynomial<BigInt> = classical_tutte_activity(rank)?;
    let poly: BivariatePolynomial<BigInt> =
        polymatroid_tutte(&Polymatroid::from_rank(rank.clone()));
    // Per-variable degrees of both sides are at most 2n (coarse bound);
    // 2n+2 primes per axis leave at least 2n+1 complete rows and columns
    // after skipping (2,2). The floor of 6 keeps small instances at a
    // comfortably large grid.
    let axis = primes((2 * n + 2).max(6));
    let mut sample_count = 0usize;
    for &x in &axis {
        for &y in &axis {
            let s = x + y - x * y;
            if s == 0 {
                continue;
            }
            sample_count += 1;
            let (xb, yb, sb) = (BigInt::from(x), BigInt::from(y), BigInt::from(s));
            let lhs = classical.eval(&xb, &yb) * int_pow(&xb, n as u32 - d) * int_pow(&yb, d);
            let mut rhs = BigInt::from(0);
            for ((p, q), c) in poly.terms() {
                rhs += c * int_pow(&xb, p) * int_pow(&yb, q) * int_pow(&sb, n as u32 - p - q);
            }
            if lhs != rhs {
                return Ok(CorrespondenceReport {
                    sample_count,
                    holds: false,
                    failure: Some((x, y)),
                });
            }
        }
    }
    Ok(CorrespondenceReport {
        sample_count,
        holds: true,
        failure: None,
    })
}

/// Sum of the coordinatewise excesses of `a` over `c`.
pub fn d_gt(a: &IntVector, c: &IntVector) -> Result<i64> {
    if a.dim() != c.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: c.dim(),
        });
    }
    Ok(a.coords()
        .iter()
        .zip(c.coords())
        .map(|(&ai, &ci)| (ai - ci).max(0))
        .sum())
}

/// Sum of the coordinatewise excesses of `c` over `a`.
pub fn d_lt(a: &IntVector, c: &IntVector) -> Result<i64> {
    d_gt(c, a)
}

/// The two one-sided distances from a lattice point to a polymatroid, each
/// minimized independently over the bases (the minimizers may differ).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceProfile {
    pub point: IntVector,
    pub d_gt: i64,
    pub d_lt: i64,
}

pub fn polytope_distance(p: &Polymatroid, c: &IntVector) -> Result<DistanceProfile> {
    if p.bases().is_empty() {
        return Err(Error::EmptyPolymatroid);
    }
    let mut best_gt = i64::MAX;
    let mut best_lt = i64::MAX;
    for a in p.bases() {
        best_gt = best_gt.min(d_gt(a, c)?);
        best_lt = best_lt.min(d_lt(a, c)?);
    }
    Ok(DistanceProfile {
        point: c.clone(),
        d_gt: best_gt,
        d_lt: best_lt,
    })
}

/// The distance generating series truncated at total degree `cap`: the sum
/// over lattice points `c` of `u^{d>(P,c)} v^{d<(P,c)}`, keeping the terms
/// with `d> + d< <= cap`. Scanning the box `[L_i - cap, U_i + cap]` per
/// coordinate is exhaustive for those terms: a point beyond it exceeds one
/// distance by more than `cap` against every basis in that coordinate
/// alone.
pub fn truncated_tilde_series<C: Coefficient>(
    p: &Polymatroid,
    cap: u32,
) -> Result<TruncatedSeries<C>> {
    if p.bases().is_empty() {
        return Err(Error::EmptyPolymatroid);
    }
    let n = p.n();
    let (lo, hi) = p.rank().coordinate_bounds();
    let lo: Vec<i64> = (0..n).map(|i| lo.coord(i) - cap as i64).collect();
    let hi: Vec<i64> = (0..n).map(|i| hi.coord(i) + cap as i64).collect();
    let mut series = TruncatedSeries::zero(cap, UV);
    let mut c = lo.clone();
    loop {
        // Minimize the two one-sided distances over the bases directly on
        // the coordinate slices (avoids allocating an IntVector per point).
        let mut best_gt = i64::MAX;
        let mut best_lt = i64::MAX;
        for a in p.bases() {
            let mut gt = 0i64;
            let mut lt = 0i64;
            for (ai, ci) in a.coords().iter().zip(&c) {
                let diff = ai - ci;
                if diff > 0 {
                    gt += diff;
                } else {
                    lt -= diff;
                }
            }
            best_gt = best_gt.min(gt);
            best_lt = best_lt.min(lt);
        }
        if best_gt + best_lt <= cap as i64 {
            series = series.add(&TruncatedSeries::term(
                C::one(),
                best_gt as u32,
                best_lt as u32,
                cap,
                UV,
            ))?;
        }
        // Odometer step through the box.
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(series);
            }
            c[pos] += 1;
            if c[pos] <= hi[pos] {
                break;
            }
            c[pos] = lo[pos];
            pos += 1;
        }
    }
}

/// Whether the truncated distance series equals the truncated expansion of
/// the Tutte polynomial under `x -> 1/(1-u)`, `y -> 1/(1-v)`, term for term
/// through total degree `cap`.
pub fn series_equivalence_check(p: &Polymatroid, cap: u32) -> Result<bool> {
    let direct: TruncatedSeries<BigInt> = truncated_tilde_series(p, cap)?;
    let records = activity_records(p)?;
    let triples: Vec<(u32, u32, u32)> = records
        .iter()
        .map(|r| (r.only_internal(), r.only_external(), r.both()))
        .collect();
    let expanded: TruncatedSeries<BigInt> = expand_transformed_tutte(&triples, cap);
    Ok(direct == expanded)
}

/// Whether the Tutte polynomial is unchanged by every listed coordinate
/// permutation of the polymatroid.
pub fn sn_invariance_check(p: &Polymatroid, ws: &[Permutation]) -> Result<bool> {
    let reference: BivariatePolynomial<BigInt> = polymatroid_tutte(p);
    for w in ws {
        let image = p.permuted(w)?;
        if polymatroid_tutte::<BigInt>(&image) != reference {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The default permutation list for invariance checking: every permutation
/// for `n <= 5`, the adjacent transpositions (which generate the rest)
/// for larger ground sets.
pub fn default_invariance_permutations(n: usize) -> Vec<Permutation> {
    if n <= 5 {
        Permutation::all(n)
    } else {
        (0..n - 1)
            .map(|h| Permutation::adjacent_transposition(h, n).expect("h+1 < n"))
            .collect()
    }
}

/// Canonical variable pairs for the two polynomial families.
pub fn tutte_vars() -> VarPair {
    XY
}
