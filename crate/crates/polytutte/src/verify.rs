//! Exhaustive machine checks for the exchange and activity properties that
//! make the Tutte polynomial invariant under coordinate swaps: composition
//! and transfer of feasible exchanges, lattice closure of tight families,
//! agreement of the two activity routes, activity agreement between bases
//! differing in two coordinates, the behaviour of activities under one
//! adjacent swap, and the per-fiber summand identity.
//!
//! Every check instantiates its hypothesis over all bases (and index
//! tuples) of one polymatroid and records the first counterexample, so a
//! passing report is an exhaustive certificate for that instance.
//!
//! A note on positions: if `w` swaps coordinates `h` and `h+1`, then
//! position `h` of the swapped polymatroid holds what position `h+1` of the
//! original held, and vice versa. The swap-related implications below
//! therefore pair position `h` on one side with `h+1` on the other; that
//! crossing is intended, not a typo.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::activity::{
    active_in_family, activity_records, tight_sets, ActivityKind, ActivityRecord,
};
use crate::error::Result;
use crate::fiber::{fiber_decomposition, Fiber};
use crate::mask::SubsetMask;
use crate::point::{IntVector, Permutation};
use crate::poly::{BivariatePolynomial, XY};
use crate::polymatroid::Polymatroid;
use crate::rank::RankFunction;
use crate::tutte::tutte_summand;

/// Activity records for every basis of one polymatroid, keyed by basis, so
/// property checks can re-query individual indices cheaply.
pub struct ActivityTable {
    p: Polymatroid,
    records: BTreeMap<IntVector, ActivityRecord>,
}

impl ActivityTable {
    pub fn new(p: &Polymatroid) -> Self {
        let records = activity_records(p)
            .expect("enumerated bases are members")
            .into_iter()
            .map(|r| (r.basis.clone(), r))
            .collect();
        ActivityTable {
            p: p.clone(),
            records,
        }
    }

    pub fn polymatroid(&self) -> &Polymatroid {
        &self.p
    }

    pub fn record(&self, a: &IntVector) -> &ActivityRecord {
        self.records.get(a).expect("queried vector is a basis")
    }

    pub fn internal(&self, a: &IntVector, i: usize) -> bool {
        self.record(a).internal.contains(i)
    }

    pub fn external(&self, a: &IntVector, i: usize) -> bool {
        self.record(a).external.contains(i)
    }

    /// `(internally active, externally active)` of index `i` at basis `a`.
    pub fn status(&self, a: &IntVector, i: usize) -> (bool, bool) {
        let r = self.record(a);
        (r.internal.contains(i), r.external.contains(i))
    }

    /// The basis's contribution `x^oi y^oe (x+y-1)^ie` to the polynomial.
    pub fn summand(&self, a: &IntVector) -> BivariatePolynomial<BigInt> {
        let r = self.record(a);
        tutte_summand(r.only_internal(), r.only_external(), r.both())
    }
}

/// Result of one exhaustive property check: how many instantiated
/// conclusions were tested, and the first counterexample if any failed.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: u64,
    pub counterexample: Option<String>,
}

impl CheckOutcome {
    fn new(name: &'static str) -> Self {
        CheckOutcome {
            name,
            cases: 0,
            counterexample: None,
        }
    }

    fn observe(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(witness());
        }
    }

    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "{}: PASS ({} cases)", self.name, self.cases),
            Some(w) => write!(
                f,
                "{}: FAIL ({} cases; counterexample: {})",
                self.name, self.cases, w
            ),
        }
    }
}

/// Aggregated outcome of the whole property suite on one instance.
#[derive(Clone, Debug)]
pub struct PropertyReport {
    pub checks: Vec<CheckOutcome>,
    /// Which swap-pattern classes the instance realized, with occurrence
    /// counts; classes that never occur are simply absent.
    pub realized_patterns: BTreeMap<String, u64>,
}

impl PropertyReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(CheckOutcome::holds)
    }

    pub fn failures(&self) -> Vec<&CheckOutcome> {
        self.checks.iter().filter(|c| !c.holds()).collect()
    }
}

fn member(p: &Polymatroid, v: &IntVector) -> bool {
    p.contains(v).expect("probe has matching dimension")
}

/// Ordered pairs of distinct bases that agree outside two indices, tagged
/// with the index `i` where the first basis is smaller and the index `j`
/// where it is larger. (Equal totals force exactly two differing indices
/// with opposite signs whenever any coordinate differs in just two spots.)
fn two_coordinate_pairs(p: &Polymatroid) -> Vec<(&IntVector, &IntVector, usize, usize)> {
    let mut out = Vec::new();
    for a in p.bases() {
        for b in p.bases() {
            if a == b {
                continue;
            }
            let diff: Vec<usize> = (0..p.n()).filter(|&t| a.coord(t) != b.coord(t)).collect();
            if diff.len() != 2 {
                continue;
            }
            let (i, j) = if a.coord(diff[0]) < b.coord(diff[0]) {
                (diff[0], diff[1])
            } else {
                (diff[1], diff[0])
            };
            out.push((a, b, i, j));
        }
    }
    out
}

/// Two feasible exchanges compose: moving a unit from `i` to `k` and from
/// `j` to `i` both staying in `P` forces the direct move from `j` to `k`
/// to stay in `P` as well.
fn check_exchange_composition(t: &ActivityTable) -> CheckOutcome {
    let mut out = CheckOutcome::new("exchange-composition");
    let p = t.polymatroid();
    let n = p.n();
    for a in p.bases() {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    if member(p, &a.exchanged(k, i)) && member(p, &a.exchanged(i, j)) {
                        out.observe(member(p, &a.exchanged(k, j)), || {
                            format!(
                                "basis {a}: moves {}->{} and {}->{} stay in P but {}->{} does not",
                                i + 1,
                                k + 1,
                                j + 1,
                                i + 1,
                                j + 1,
                                k + 1
                            )
                        });
                    }
                }
            }
        }
    }
    out
}

/// Feasible exchanges transfer between two bases that differ in exactly the
/// coordinates `i` (first smaller) and `j` (first larger): a feasible
/// `j -> k` move from the first gives a feasible `i -> k` move from the
/// second, and a feasible `k -> i` move from the first gives a feasible
/// `k -> j` move from the second.
fn check_exchange_transfer(t: &ActivityTable) -> CheckOutcome {
    let mut out = CheckOutcome::new("exchange-transfer");
    let p = t.polymatroid();
    for (a, b, i, j) in two_coordinate_pairs(p) {
        for k in 0..p.n() {
            if k == i || k == j {
                continue;
            }
            if member(p, &a.exchanged(k, j)) {
                out.observe(member(p, &b.exchanged(k, i)), || {
                    format!(
                        "bases {a}, {b} (smaller at {}): {}->{} feasible from the first, {}->{} not from the second",
                        i + 1, j + 1, k + 1, i + 1, k + 1
                    )
                });
            }
            if member(p, &a.exchanged(i, k)) {
                out.observe(member(p, &b.exchanged(j, k)), || {
                    format!(
                        "bases {a}, {b} (smaller at {}): {}->{} feasible from the first, {}->{} not from the second",
                        i + 1, k + 1, i + 1, k + 1, j + 1
                    )
                });
            }
        }
    }
    out
}

/// The family of tight sets of every basis is closed under union and
/// intersection.
fn check_tight_closure(t: &ActivityTable) -> CheckOutcome {
    let mut out = CheckOutcome::new("tight-closure");
    let p = t.polymatroid();
    for a in p.bases() {
        let family = tight_sets(p, a).expect("enumerated bases are members");
        let violation = family.lattice_violation();
        out.observe(violation.is_none(), || {
            let (x, y) = violation.expect("witness present on failure");
            format!("basis {a}: tight sets {x} and {y} break union/intersection closure")
        });
    }
    out
}

/// The exchange-probe definition of activity agrees with the tight-set
/// characterization on every basis, index, and kind.
fn check_activity_characterization(t: &ActivityTable) -> CheckOutcome {
    let mut out = CheckOutcome::new("activity-characterization");
    let p = t.polymatroid();
    for a in p.bases() {
        let family = tight_sets(p, a).expect("enumerated bases are members");
        let rec = t.record(a);
        for i in 0..p.n() {
            let exchange = rec.internal.contains(i);
            let family_route = active_in_family(&family, i, ActivityKind::Internal);
            out.observe(exchange == family_route, || {
                format!(
                    "basis {a}, index {}: exchange route says internal={exchange}, tight-set route says {family_route}",
                    i + 1
                )
            });
            let exchange = rec.external.contains(i);
            let family_route = active_in_family(&family, i, ActivityKind::External);
            out.observe(exchange == family_route, || {
                format!(
                    "basis {a}, index {}: exchange route says external={exchange}, tight-set route says {family_route}",
                    i + 1
                )
            });
        }
    }
    out
}

/// Indices above both differing coordinates have the same internal
/// activity at the two bases of a two-coordinate pair.
fn check_pair_above_internal(t: &ActivityTable) -> CheckOutcome {
    let mut out = CheckOutcome::new("pair-above-internal");
    let p = t.polymatroid();
    for (a, b, i, j) in two_coordinate_pairs(p) {
        for k in (i.max(j) + 1)..p.n() {
            out.observe(t.internal(a, k) == t.internal(b, k), || {
                format!(
                    "bases {a}, {b} differing at {{{}, {}}}: index {} internally active at exactly one",
                    i + 1,
                    j + 1,
                    k + 1
                )
            });
        }
    }
    out
}

/// Indices above both differing coordinates have the same external
/// activity at the two bases of a two-coordinate pair.
fn check_pair_above_external(t: &ActivityTable) -> CheckOutcome {
    let mut out = CheckOutcome::new("pair-above-external");
    let p = t.polymatroid();
    for (a, b, i, j) in two_coordinate_pairs(p) {
        for k in (i.max(j) + 1)..p.n() {
            out.observe(t.external(a, k) == t.external(b, k), || {
                format!(
                    "bases {a}, {b} differing at {{{}, {}}}: index {} externally active at exactly one",
                    i + 1,
                    j + 1,
                    k + 1
                )
            });
        }
    }
    out
}

/// When `j` is internally active at the smaller-at-`i` basis and `i` at the
/// other, all indices below both differing coordinates agree in internal
/// and external activity across the pair.
fn check_pair_below_internal(t: &ActivityTable) -> CheckOutcome {
    let mut out = CheckOutcome::new("pair-below-internal-active");
    let p = t.polymatroid();
    for (a, b, i, j) in two_coordinate_pairs(p) {
        if !(t.internal(a, j) && t.internal(b, i)) {
            continue;
        }
        for k in 0..i.min(j) {
            out.observe(t.internal(a, k) == t.internal(b, k), || {
                format!(
                    "bases {a}, {b} (internal at {} / {}): index {} internally active at exactly one",
                    j + 1,
                    i + 1,
                    k + 1
                )
            });
            out.observe(t.external(a, k) == t.external(b, k), || {
                format!(
                    "bases {a}, {b} (internal at {} / {}): index {} externally active at exactly one",
                    j + 1,
                    i + 1,
                    k + 1
                )
            });
        }
    }
    out
}

/// When `i` is externally active at the smaller-at-`i` basis and `j` at the
/// other, all indices below both differing coordinates agree in internal
/// and external activity across the pair.
fn check_pair_below_external(t: &ActivityTable) -> CheckOutcome {
    let mut out = CheckOutcome::new("pair-below-external-active");
    let p = t.polymatroid();
    for (a, b, i, j) in two_coordinate_pairs(p) {
        if !(t.external(a, i) && t.external(b, j)) {
            continue;
        }
        for k in 0..i.min(j) {
            out.observe(t.internal(a, k) == t.internal(b, k), || {
                format!(
                    "bases {a}, {b} (external at {} / {}): index {} internally active at exactly one",
                    i + 1,
                    j + 1,
                    k + 1
                )
            });
            out.observe(t.external(a, k) == t.external(b, k), || {
                format!(
                    "bases {a}, {b} (external at {} / {}): index {} externally active at exactly one",
                    i + 1,
                    j + 1,
                    k + 1
                )
            });
        }
    }
    out
}

/// A polymatroid paired with its image under one adjacent coordinate swap,
/// with activity tables for both.
struct SwapScope<'a> {
    h: usize,
    w: Permutation,
    base: &'a ActivityTable,
    swapped: ActivityTable,
}

impl<'a> SwapScope<'a> {
    fn new(base: &'a ActivityTable, h: usize) -> Self {
        let p = base.polymatroid();
        let w = Permutation::adjacent_transposition(h, p.n()).expect("pivot in range");
        let swapped_p = p.permuted(&w).expect("transposition is a bijection");
        SwapScope {
            h,
            w,
            base,
            swapped: ActivityTable::new(&swapped_p),
        }
    }

    fn image(&self, a: &IntVector) -> IntVector {
        self.w.apply_vector(a)
    }
}

/// Indices away from the swapped pair keep their activities when the pair
/// is swapped.
fn check_outside_fixed(s: &SwapScope, out: &mut CheckOutcome) {
    let p = s.base.polymatroid();
    let h = s.h;
    for a in p.bases() {
        let wa = s.image(a);
        for i in (0..p.n()).filter(|&i| i != h && i != h + 1) {
            out.observe(s.base.internal(a, i) == s.swapped.internal(&wa, i), || {
                format!(
                    "pivot {}: basis {a}: internal activity of index {} changes under the swap",
                    h + 1,
                    i + 1
                )
            });
            out.observe(s.base.external(a, i) == s.swapped.external(&wa, i), || {
                format!(
                    "pivot {}: basis {a}: external activity of index {} changes under the swap",
                    h + 1,
                    i + 1
                )
            });
        }
    }
}

/// An inactive lower position never becomes active after the swap (its
/// image sits at the upper position of the swapped polymatroid).
fn check_lower_never_gains(s: &SwapScope, out: &mut CheckOutcome) {
    let p = s.base.polymatroid();
    let h = s.h;
    for a in p.bases() {
        let wa = s.image(a);
        if !s.base.internal(a, h) {
            out.observe(!s.swapped.internal(&wa, h + 1), || {
                format!(
                    "pivot {}: basis {a}: position {} internally inactive, yet its swapped copy at {} is active",
                    h + 1,
                    h + 1,
                    h + 2
                )
            });
        }
        if !s.base.external(a, h) {
            out.observe(!s.swapped.external(&wa, h + 1), || {
                format!(
                    "pivot {}: basis {a}: position {} externally inactive, yet its swapped copy at {} is active",
                    h + 1,
                    h + 1,
                    h + 2
                )
            });
        }
    }
}

/// An upper position inactive after the swap (where it sits at the lower
/// position) was already inactive before.
fn check_upper_never_gains(s: &SwapScope, out: &mut CheckOutcome) {
    let p = s.base.polymatroid();
    let h = s.h;
    for a in p.bases() {
        let wa = s.image(a);
        if !s.swapped.internal(&wa, h) {
            out.observe(!s.base.internal(a, h + 1), || {
                format!(
                    "pivot {}: basis {a}: swapped copy of position {} internally inactive, yet the original is active",
                    h + 1,
                    h + 2
                )
            });
        }
        if !s.swapped.external(&wa, h) {
            out.observe(!s.base.external(a, h + 1), || {
                format!(
                    "pivot {}: basis {a}: swapped copy of position {} externally inactive, yet the original is active",
                    h + 1,
                    h + 2
                )
            });
        }
    }
}

/// When the step raising the lower coordinate stays in `P`: internal
/// inactivity of the lower position forces inactivity of its swapped copy,
/// and external inactivity of the swapped copy forces inactivity of the
/// original.
fn check_shift_up_feasible(s: &SwapScope, out: &mut CheckOutcome) {
    let p = s.base.polymatroid();
    let h = s.h;
    for a in p.bases() {
        if !member(p, &a.exchanged(h, h + 1)) {
            continue;
        }
        let wa = s.image(a);
        if !s.base.internal(a, h) {
            out.observe(!s.swapped.internal(&wa, h), || {
                format!(
                    "pivot {}: basis {a} (upward step feasible): position {} internally inactive, swapped position {} active",
                    h + 1,
                    h + 1,
                    h + 1
                )
            });
        }
        if !s.swapped.external(&wa, h) {
            out.observe(!s.base.external(a, h), || {
                format!(
                    "pivot {}: basis {a} (upward step feasible): swapped position {} externally inactive, original position {} active",
                    h + 1,
                    h + 1,
                    h + 1
                )
            });
        }
    }
}

/// When the step raising the lower coordinate leaves `P`: internal
/// inactivity of the upper position forces inactivity of its swapped copy,
/// and external inactivity of that copy forces inactivity of the lower
/// position.
fn check_shift_up_blocked(s: &SwapScope, out: &mut CheckOutcome) {
    let p = s.base.polymatroid();
    let h = s.h;
    for a in p.bases() {
        if member(p, &a.exchanged(h, h + 1)) {
            continue;
        }
        let wa = s.image(a);
        if !s.base.internal(a, h + 1) {
            out.observe(!s.swapped.internal(&wa, h), || {
                format!(
                    "pivot {}: basis {a} (upward step blocked): position {} internally inactive, swapped copy at {} active",
                    h + 1,
                    h + 2,
                    h + 1
                )
            });
        }
        if !s.swapped.external(&wa, h + 1) {
            out.observe(!s.base.external(a, h), || {
                format!(
                    "pivot {}: basis {a} (upward step blocked): swapped position {} externally inactive, original position {} active",
                    h + 1,
                    h + 2,
                    h + 1
                )
            });
        }
    }
}

/// When the step lowering the lower coordinate stays in `P`: the swapped
/// copy of the upper position being internally inactive forces the lower
/// position inactive, and external inactivity of the lower position forces
/// inactivity of its swapped partner.
fn check_shift_down_feasible(s: &SwapScope, out: &mut CheckOutcome) {
    let p = s.base.polymatroid();
    let h = s.h;
    for a in p.bases() {
        if !member(p, &a.exchanged(h + 1, h)) {
            continue;
        }
        let wa = s.image(a);
        if !s.swapped.internal(&wa, h) {
            out.observe(!s.base.internal(a, h), || {
                format!(
                    "pivot {}: basis {a} (downward step feasible): swapped position {} internally inactive, original position {} active",
                    h + 1,
                    h + 1,
                    h + 1
                )
            });
        }
        if !s.base.external(a, h) {
            out.observe(!s.swapped.external(&wa, h), || {
                format!(
                    "pivot {}: basis {a} (downward step feasible): position {} externally inactive, swapped position {} active",
                    h + 1,
                    h + 1,
                    h + 1
                )
            });
        }
    }
}

/// When the step lowering the lower coordinate leaves `P`: the swapped copy
/// of the lower position being internally inactive forces the original
/// inactive, and external inactivity of the upper position forces
/// inactivity of its swapped copy.
fn check_shift_down_blocked(s: &SwapScope, out: &mut CheckOutcome) {
    let p = s.base.polymatroid();
    let h = s.h;
    for a in p.bases() {
        if member(p, &a.exchanged(h + 1, h)) {
            continue;
        }
        let wa = s.image(a);
        if !s.swapped.internal(&wa, h + 1) {
            out.observe(!s.base.internal(a, h), || {
                format!(
                    "pivot {}: basis {a} (downward step blocked): swapped copy at {} internally inactive, position {} active",
                    h + 1,
                    h + 2,
                    h + 1
                )
            });
        }
        if !s.base.external(a, h + 1) {
            out.observe(!s.swapped.external(&wa, h), || {
                format!(
                    "pivot {}: basis {a} (downward step blocked): position {} externally inactive, swapped copy at {} active",
                    h + 1,
                    h + 2,
                    h + 1
                )
            });
        }
    }
}

/// Mask of indices outside the swapped pair.
fn outside_pair(h: usize, n: usize) -> SubsetMask {
    SubsetMask::singleton(h).insert(h + 1).complement(n)
}

/// The four implications that tie the activities of a multi-member fiber's
/// two ends together, each exhaustively checked over the fibers at one
/// pivot.
fn check_fiber_claims(
    s: &SwapScope,
    fibers: &[Fiber],
    internal_collapse: &mut CheckOutcome,
    internal_spread: &mut CheckOutcome,
    external_collapse: &mut CheckOutcome,
    external_spread: &mut CheckOutcome,
) {
    let h = s.h;
    let n = s.base.polymatroid().n();
    let outside = outside_pair(h, n);
    for fiber in fibers.iter().filter(|f| f.len() >= 2) {
        let bottom = fiber.first();
        let top = fiber.last();
        let wb = s.image(bottom);
        let wt = s.image(top);

        if !s.swapped.internal(&wb, h) {
            internal_collapse.observe(!s.base.internal(top, h), || {
                format!(
                    "pivot {}: fiber {bottom}..{top}: swapped bottom inactive at position {} but the top is internally active there",
                    h + 1,
                    h + 1
                )
            });
        } else {
            internal_spread.observe(
                s.swapped.internal(&wt, h) && s.base.internal(bottom, h) && s.base.internal(top, h),
                || {
                    format!(
                        "pivot {}: fiber {bottom}..{top}: internal activity fails to spread to both ends at position {}",
                        h + 1,
                        h + 1
                    )
                },
            );
            let rb = s.base.record(bottom);
            let rt = s.base.record(top);
            internal_spread.observe(
                rb.internal.intersection(outside) == rt.internal.intersection(outside)
                    && rb.external.intersection(outside) == rt.external.intersection(outside),
                || {
                    format!(
                        "pivot {}: fiber {bottom}..{top}: ends disagree on activities outside the pair",
                        h + 1
                    )
                },
            );
        }

        if !s.base.external(bottom, h) {
            external_collapse.observe(!s.swapped.external(&wt, h), || {
                format!(
                    "pivot {}: fiber {bottom}..{top}: bottom inactive at position {} but the swapped top is externally active there",
                    h + 1,
                    h + 1
                )
            });
        } else {
            external_spread.observe(
                s.swapped.external(&wb, h) && s.swapped.external(&wt, h) && s.base.external(top, h),
                || {
                    format!(
                        "pivot {}: fiber {bottom}..{top}: external activity fails to spread to both ends at position {}",
                        h + 1,
                        h + 1
                    )
                },
            );
            let rb = s.base.record(bottom);
            let rt = s.base.record(top);
            external_spread.observe(
                rb.internal.intersection(outside) == rt.internal.intersection(outside)
                    && rb.external.intersection(outside) == rt.external.intersection(outside),
                || {
                    format!(
                        "pivot {}: fiber {bottom}..{top}: ends disagree on activities outside the pair",
                        h + 1
                    )
                },
            );
        }
    }
}

/// `(internally active, externally active)` prediction for one context.
type Status = (bool, bool);

fn status_name((i, e): Status) -> &'static str {
    match (i, e) {
        (true, true) => "internal+external",
        (true, false) => "internal only",
        (false, true) => "external only",
        (false, false) => "inactive",
    }
}

/// The eight inspected contexts of a fiber-end pattern, in a fixed order:
/// `h` means the pivot position, `h+1` the one above it, and "swapped"
/// refers to the image basis inside the swapped polymatroid.
const PATTERN_CONTEXTS: [&str; 8] = [
    "bottom in P at h",
    "swapped top at h+1",
    "swapped bottom at h+1",
    "top in P at h",
    "bottom in P at h+1",
    "swapped top at h",
    "swapped bottom at h",
    "top in P at h+1",
];

const T: bool = true;
const F: bool = false;

/// Forced status patterns when internal activity spreads along the fiber
/// but external does not, indexed by (top externally active at `h`, bottom
/// externally active at `h+1`) as `(F,F)`, `(T,F)`, `(F,T)`, `(T,T)`.
const INTERNAL_SPREAD_PATTERNS: [[Status; 8]; 4] = [
    [
        (T, F),
        (F, F),
        (T, F),
        (T, F),
        (F, F),
        (T, F),
        (T, F),
        (T, F),
    ],
    [
        (T, F),
        (F, T),
        (T, F),
        (T, T),
        (F, F),
        (T, F),
        (T, F),
        (T, F),
    ],
    [
        (T, F),
        (F, F),
        (T, F),
        (T, F),
        (F, T),
        (T, F),
        (T, T),
        (T, F),
    ],
    [
        (T, F),
        (F, T),
        (T, F),
        (T, T),
        (F, T),
        (T, F),
        (T, T),
        (T, F),
    ],
];

/// Forced status patterns when external activity spreads along the fiber
/// but internal does not, indexed by (bottom internally active at `h`, top
/// internally active at `h+1`).
const EXTERNAL_SPREAD_PATTERNS: [[Status; 8]; 4] = [
    [
        (F, T),
        (F, T),
        (F, F),
        (F, T),
        (F, T),
        (F, T),
        (F, T),
        (F, F),
    ],
    [
        (T, T),
        (F, T),
        (T, F),
        (F, T),
        (F, T),
        (F, T),
        (F, T),
        (F, F),
    ],
    [
        (F, T),
        (F, T),
        (F, F),
        (F, T),
        (F, T),
        (T, T),
        (F, T),
        (T, F),
    ],
    [
        (T, T),
        (F, T),
        (T, F),
        (F, T),
        (F, T),
        (T, T),
        (F, T),
        (T, F),
    ],
];

/// Forced status pattern when both internal and external activity spread
/// along the fiber.
const BOTH_SPREAD_PATTERN: [Status; 8] = [
    (T, T),
    (F, T),
    (T, F),
    (T, T),
    (F, T),
    (T, T),
    (T, T),
    (T, F),
];

fn pattern_column(first: bool, second: bool) -> usize {
    first as usize + 2 * (second as usize)
}

/// Classifies each multi-member fiber's end pair by which activities spread
/// along it and checks the observed statuses of the pivot pair — at both
/// ends, in both the original and the swapped polymatroid — against the
/// forced pattern for that class. The class with no spread instead forces
/// each end's summand to equal its swapped image's.
fn check_swap_patterns(
    s: &SwapScope,
    fibers: &[Fiber],
    out: &mut CheckOutcome,
    realized: &mut BTreeMap<String, u64>,
) {
    let h = s.h;
    for fiber in fibers.iter().filter(|f| f.len() >= 2) {
        let bottom = fiber.first();
        let top = fiber.last();
        let wb = s.image(bottom);
        let wt = s.image(top);
        let statuses: [Status; 8] = [
            s.base.status(bottom, h),
            s.swapped.status(&wt, h + 1),
            s.swapped.status(&wb, h + 1),
            s.base.status(top, h),
            s.base.status(bottom, h + 1),
            s.swapped.status(&wt, h),
            s.swapped.status(&wb, h),
            s.base.status(top, h + 1),
        ];
        let internal_spreads = statuses[6].0;
        let external_spreads = statuses[0].1;
        let (key, expected): (String, Option<&[Status; 8]>) =
            match (internal_spreads, external_spreads) {
                (false, false) => ("neither-spreads".to_string(), None),
                (true, false) => {
                    let col = pattern_column(statuses[3].1, statuses[4].1);
                    (
                        format!("internal-spread({})", col + 1),
                        Some(&INTERNAL_SPREAD_PATTERNS[col]),
                    )
                }
                (false, true) => {
                    let col = pattern_column(statuses[0].0, statuses[7].0);
                    (
                        format!("external-spread({})", col + 1),
                        Some(&EXTERNAL_SPREAD_PATTERNS[col]),
                    )
                }
                (true, true) => ("both-spread".to_string(), Some(&BOTH_SPREAD_PATTERN)),
            };
        *realized.entry(key.clone()).or_default() += 1;
        match expected {
            None => {
                let ok = s.base.summand(bottom) == s.swapped.summand(&wb)
                    && s.base.summand(top) == s.swapped.summand(&wt);
                out.observe(ok, || {
                    format!(
                        "pivot {}: fiber {bottom}..{top} ({key}): an end summand differs from its swapped image",
                        h + 1
                    )
                });
            }
            Some(pattern) => {
                let mismatch = (0..8).find(|&idx| statuses[idx] != pattern[idx]);
                out.observe(mismatch.is_none(), || {
                    let idx = mismatch.expect("witness present on failure");
                    format!(
                        "pivot {}: fiber {bottom}..{top} ({key}): {} should be {} but is {}",
                        h + 1,
                        PATTERN_CONTEXTS[idx],
                        status_name(pattern[idx]),
                        status_name(statuses[idx])
                    )
                });
            }
        }
    }
}

/// Runs every exchange/activity property check exhaustively on one
/// polymatroid: the standalone exchange and tight-set properties, the
/// two-coordinate pair properties, and — for every pivot — the swap and
/// fiber properties.
pub fn lemma_property_suite(p: &Polymatroid) -> PropertyReport {
    let table = ActivityTable::new(p);
    let mut checks = vec![
        check_exchange_composition(&table),
        check_exchange_transfer(&table),
        check_tight_closure(&table),
        check_activity_characterization(&table),
        check_pair_above_internal(&table),
        check_pair_above_external(&table),
        check_pair_below_internal(&table),
        check_pair_below_external(&table),
    ];
    let mut outside_fixed = CheckOutcome::new("swap-outside-fixed");
    let mut lower = CheckOutcome::new("swap-lower-never-gains");
    let mut upper = CheckOutcome::new("swap-upper-never-gains");
    let mut up_feasible = CheckOutcome::new("shift-up-feasible");
    let mut up_blocked = CheckOutcome::new("shift-up-blocked");
    let mut down_feasible = CheckOutcome::new("shift-down-feasible");
    let mut down_blocked = CheckOutcome::new("shift-down-blocked");
    let mut internal_collapse = CheckOutcome::new("fiber-internal-collapse");
    let mut internal_spread = CheckOutcome::new("fiber-internal-spread");
    let mut external_collapse = CheckOutcome::new("fiber-external-collapse");
    let mut external_spread = CheckOutcome::new("fiber-external-spread");
    let mut patterns = CheckOutcome::new("swap-pattern-tables");
    let mut realized = BTreeMap::new();
    for h in 0..p.n().saturating_sub(1) {
        let scope = SwapScope::new(&table, h);
        check_outside_fixed(&scope, &mut outside_fixed);
        check_lower_never_gains(&scope, &mut lower);
        check_upper_never_gains(&scope, &mut upper);
        check_shift_up_feasible(&scope, &mut up_feasible);
        check_shift_up_blocked(&scope, &mut up_blocked);
        check_shift_down_feasible(&scope, &mut down_feasible);
        check_shift_down_blocked(&scope, &mut down_blocked);
        let fibers = fiber_decomposition(p, h).expect("pivot in range");
        check_fiber_claims(
            &scope,
            &fibers,
            &mut internal_collapse,
            &mut internal_spread,
            &mut external_collapse,
            &mut external_spread,
        );
        check_swap_patterns(&scope, &fibers, &mut patterns, &mut realized);
    }
    checks.extend([
        outside_fixed,
        lower,
        upper,
        up_feasible,
        up_blocked,
        down_feasible,
        down_blocked,
        internal_collapse,
        internal_spread,
        external_collapse,
        external_spread,
        patterns,
    ]);
    PropertyReport {
        checks,
        realized_patterns: realized,
    }
}

/// Per-fiber comparison of summands across one adjacent swap: `a` and `b`
/// are the summands of the fiber's bottom and top end in `P`; `c` and
/// `d_term` are the summands of their images in the swapped polymatroid.
/// For one-member fibers `b` and `d_term` are zero and the identity is
/// `a = c`; otherwise it is `a + b = c + d_term`.
#[derive(Clone, Debug)]
pub struct FiberIdentityReport {
    pub fiber: Fiber,
    pub a: BivariatePolynomial<BigInt>,
    pub b: BivariatePolynomial<BigInt>,
    pub c: BivariatePolynomial<BigInt>,
    pub d_term: BivariatePolynomial<BigInt>,
    /// Human-readable note on the activity pattern away from the swapped
    /// pair, which acts as a common factor of the compared summands and is
    /// deliberately not divided out.
    pub e_divisor_note: String,
    /// Whether every member strictly between the ends has equal summands in
    /// the two polymatroids (vacuously true for fibers of length <= 2).
    pub interior_match: bool,
    pub holds: bool,
}

/// Checks the end-summand identity on every fiber at the given pivot.
pub fn fiber_identity_check(p: &Polymatroid, h: usize) -> Result<Vec<FiberIdentityReport>> {
    let fibers = fiber_decomposition(p, h)?;
    let table = ActivityTable::new(p);
    let w = Permutation::adjacent_transposition(h, p.n())?;
    let swapped = ActivityTable::new(&p.permuted(&w)?);
    let outside = outside_pair(h, p.n());
    let mut reports = Vec::with_capacity(fibers.len());
    for fiber in fibers {
        let bottom = fiber.first().clone();
        let top = fiber.last().clone();
        let a = table.summand(&bottom);
        let c = swapped.summand(&w.apply_vector(&bottom));
        let (b, d_term) = if fiber.len() == 1 {
            (BivariatePolynomial::zero(XY), BivariatePolynomial::zero(XY))
        } else {
            (table.summand(&top), swapped.summand(&w.apply_vector(&top)))
        };
        let interior_match = fiber
            .members()
            .iter()
            .skip(1)
            .take(fiber.len().saturating_sub(2))
            .all(|m| table.summand(m) == swapped.summand(&w.apply_vector(m)));
        let rb = table.record(&bottom);
        let rt = table.record(&top);
        let pair = SubsetMask::singleton(h).insert(h + 1);
        let e_divisor_note = if rb.internal.intersection(outside)
            == rt.internal.intersection(outside)
            && rb.external.intersection(outside) == rt.external.intersection(outside)
        {
            format!(
                "shared factor outside {pair}: internal {}, external {}",
                rb.internal.intersection(outside),
                rb.external.intersection(outside)
            )
        } else {
            format!("ends differ outside {pair}; each end matches its swapped image instead")
        };
        let holds = if fiber.len() == 1 {
            a == c
        } else {
            a.add(&b) == c.add(&d_term)
        };
        reports.push(FiberIdentityReport {
            fiber,
            a,
            b,
            c,
            d_term,
            e_divisor_note,
            interior_match,
            holds,
        });
    }
    Ok(reports)
}

/// Independent basis oracle: scans the whole coordinate-bound box and keeps
/// the vectors the rank table admits, in ascending order. Quadratically
/// slower than the pruned enumeration; exists to certify it.
pub fn brute_force_bases(rank: &RankFunction) -> Vec<IntVector> {
    let n = rank.n();
    let (lo, hi) = rank.coordinate_bounds();
    if (0..n).any(|i| lo.coord(i) > hi.coord(i)) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut c: Vec<i64> = (0..n).map(|i| lo.coord(i)).collect();
    loop {
        let v = IntVector::new(c.clone());
        if rank.contains(&v).expect("matching dimension") {
            out.push(v);
        }
        let mut pos = 0;
        loop {
            if pos == n {
                out.sort();
                return out;
            }
            c[pos] += 1;
            if c[pos] <= hi.coord(pos) {
                break;
            }
            c[pos] = lo.coord(pos);
            pos += 1;
        }
    }
}

/// Whether every basis is reachable from every other by single exchange
/// steps inside `P` (breadth-first search over the exchange graph).
pub fn exchange_connected(p: &Polymatroid) -> bool {
    let bases = p.bases();
    if bases.len() <= 1 {
        return true;
    }
    let n = p.n();
    let mut seen = vec![false; bases.len()];
    let mut queue = vec![0usize];
    seen[0] = true;
    while let Some(at) = queue.pop() {
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let next = bases[at].exchanged(i, j);
                if let Ok(pos) = bases.binary_search(&next) {
                    if !seen[pos] {
                        seen[pos] = true;
                        queue.push(pos);
                    }
                }
            }
        }
    }
    seen.into_iter().all(|v| v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{random_coverage, uniform};

    fn poly_of(values: Vec<i64>, n: usize) -> Polymatroid {
        Polymatroid::from_rank(RankFunction::new(n, values).unwrap())
    }

    fn failure_lines(report: &PropertyReport) -> String {
        report
            .failures()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join("\n")
    }

    #[test]
    fn property_suite_passes_on_small_instances() {
        let instances = vec![
            Polymatroid::from_rank(uniform(1, 2).unwrap()),
            Polymatroid::from_rank(uniform(2, 4).unwrap()),
            poly_of(vec![0, 2, 1, 2], 2),
            poly_of(vec![0, 2, 2, 3, 1, 3, 3, 4], 3),
        ];
        for p in &instances {
            let report = lemma_property_suite(p);
            assert!(report.all_hold(), "{}", failure_lines(&report));
        }
    }

    #[test]
    fn property_suite_passes_on_seeded_coverage_instances() {
        for seed in 0..6 {
            let rank = random_coverage(3, seed, 4, 2, 2).unwrap();
            let report = lemma_property_suite(&Polymatroid::from_rank(rank));
            assert!(report.all_hold(), "seed {seed}: {}", failure_lines(&report));
        }
    }

    #[test]
    fn hand_picked_instances_realize_the_rare_pattern_classes() {
        // found by scanning seeded coverage instances; these two classes
        // are the only ones the standing corpus never produces
        let cases = [
            ("internal-spread(2)", random_coverage(3, 0, 4, 2, 1)),
            ("external-spread(1)", random_coverage(3, 28, 4, 3, 1)),
        ];
        for (class, rank) in cases {
            let report = lemma_property_suite(&Polymatroid::from_rank(rank.unwrap()));
            assert!(report.all_hold(), "{class}: {}", failure_lines(&report));
            assert!(
                report.realized_patterns.contains_key(class),
                "{class} missing from {:?}",
                report.realized_patterns
            );
        }
    }

    #[test]
    fn property_suite_is_vacuous_on_one_coordinate() {
        let report = lemma_property_suite(&poly_of(vec![0, 3], 1));
        assert!(report.all_hold());
        assert!(report.realized_patterns.is_empty());
        let by_name = |name: &str| {
            report
                .checks
                .iter()
                .find(|c| c.name == name)
                .expect("check present")
                .cases
        };
        assert_eq!(by_name("exchange-composition"), 0);
        assert_eq!(by_name("swap-outside-fixed"), 0);
        // the single index is still compared across the two routes
        assert_eq!(by_name("activity-characterization"), 2);
    }

    #[test]
    fn two_element_chain_satisfies_the_end_identity() {
        let p = Polymatroid::from_rank(uniform(1, 2).unwrap());
        let reports = fiber_identity_check(&p, 0).unwrap();
        assert_eq!(reports.len(), 1);
        let r = &reports[0];
        assert!(r.holds && r.interior_match);
        // bottom (0,1) contributes y(x+y-1); top (1,0) contributes x(x+y-1)
        let x = BivariatePolynomial::<BigInt>::var_first(XY);
        let y = BivariatePolynomial::<BigInt>::var_second(XY);
        let core = x.add(&y).sub(&BivariatePolynomial::one(XY));
        assert_eq!(r.a, y.mul(&core));
        assert_eq!(r.b, x.mul(&core));
        assert_eq!(r.a.add(&r.b), r.c.add(&r.d_term));
    }

    #[test]
    fn singleton_fibers_match_their_swapped_images() {
        let p = poly_of(vec![0, 1, 1, 1, 1, 2, 2, 2], 3);
        let reports = fiber_identity_check(&p, 1).unwrap();
        assert!(!reports.is_empty());
        for r in &reports {
            assert_eq!(r.fiber.len(), 1);
            assert!(r.b.is_zero() && r.d_term.is_zero());
            assert!(r.holds, "fiber at {}", r.fiber.first());
        }
    }

    #[test]
    fn fiber_identity_rejects_out_of_range_pivot() {
        let p = poly_of(vec![0, 3], 1);
        assert!(fiber_identity_check(&p, 0).is_err());
        let p = Polymatroid::from_rank(uniform(1, 2).unwrap());
        assert!(fiber_identity_check(&p, 1).is_err());
    }

    #[test]
    fn vacuous_pivot_pair_realizes_the_doubly_active_pattern() {
        // At the first pivot both classifying positions are index 0, which
        // is always doubly active, so every multi-member fiber lands in the
        // both-spread class.
        let p = Polymatroid::from_rank(uniform(1, 2).unwrap());
        let report = lemma_property_suite(&p);
        assert!(report.all_hold(), "{}", failure_lines(&report));
        assert_eq!(report.realized_patterns.get("both-spread"), Some(&1));
    }

    #[test]
    fn richer_instances_realize_more_patterns() {
        // A three-coordinate instance has pivots beyond the first, where
        // the classifying positions are genuinely constrained.
        let p = Polymatroid::from_rank(uniform(2, 4).unwrap());
        let report = lemma_property_suite(&p);
        assert!(report.all_hold(), "{}", failure_lines(&report));
        assert!(
            report.realized_patterns.len() > 1,
            "{:?}",
            report.realized_patterns
        );
    }

    #[test]
    fn brute_force_scan_agrees_with_enumeration() {
        let tables: Vec<(usize, Vec<i64>)> = vec![
            (2, vec![0, 1, 1, 1]),
            (2, vec![0, 2, 1, 2]),
            (3, vec![0, 2, 2, 3, 1, 3, 3, 4]),
            (1, vec![0, 3]),
        ];
        for (n, values) in tables {
            let rank = RankFunction::new(n, values).unwrap();
            let p = Polymatroid::from_rank(rank.clone());
            assert_eq!(&brute_force_bases(&rank), p.bases());
        }
    }

    #[test]
    fn exchange_graph_is_connected() {
        for p in [
            Polymatroid::from_rank(uniform(2, 4).unwrap()),
            poly_of(vec![0, 2, 1, 2], 2),
            poly_of(vec![0, 3], 1),
        ] {
            assert!(exchange_connected(&p));
        }
    }

    #[test]
    fn check_outcome_formats_pass_and_fail() {
        let mut c = CheckOutcome::new("demo");
        c.observe(true, || unreachable!());
        assert_eq!(c.to_string(), "demo: PASS (1 cases)");
        c.observe(false, || "basis (0, 1) misbehaves".to_string());
        assert_eq!(
            c.to_string(),
            "demo: FAIL (2 cases; counterexample: basis (0, 1) misbehaves)"
        );
    }
}
