//! Randomized structural properties: polynomial ring axioms, truncated
//! series inversion, permutation round trips, and basic sanity of seeded
//! coverage instances (nonempty, brute-force-checked, exchange-connected,
//! permutation-invariant Tutte polynomial).

use num_bigint::BigInt;
use proptest::prelude::*;

use polytutte::families::random_coverage;
use polytutte::point::{IntVector, Permutation};
use polytutte::poly::{BivariatePolynomial, UV, XY};
use polytutte::polymatroid::Polymatroid;
use polytutte::series::{cross_pow, geometric_pow, TruncatedSeries, Var};
use polytutte::tutte::polymatroid_tutte;
use polytutte::verify::{brute_force_bases, exchange_connected};

type P = BivariatePolynomial<i64>;

fn poly_strategy() -> impl Strategy<Value = P> {
    proptest::collection::vec(((0u32..5, 0u32..5), -9i64..=9), 0..8).prop_map(|terms| {
        terms.into_iter().fold(P::zero(XY), |acc, ((i, j), c)| {
            acc.add(&P::term(c, i, j, XY))
        })
    })
}

fn vector_and_permutation() -> impl Strategy<Value = (IntVector, Permutation)> {
    (1usize..6)
        .prop_flat_map(|n| {
            (
                proptest::collection::vec(-5i64..=5, n),
                Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            )
        })
        .prop_map(|(coords, images)| {
            (
                IntVector::new(coords),
                Permutation::new(images).expect("shuffled identity is a bijection"),
            )
        })
}

fn coverage_polymatroid() -> impl Strategy<Value = Polymatroid> {
    (0u64..512, 2usize..=4, 1usize..=2, 1i64..=2).prop_map(|(seed, n, parts, maxw)| {
        Polymatroid::from_rank(
            random_coverage(n, seed, 4, parts, maxw).expect("parameters in range"),
        )
    })
}

fn polymatroid_with_permutation() -> impl Strategy<Value = (Polymatroid, Permutation)> {
    coverage_polymatroid().prop_flat_map(|p| {
        let images = Just((0..p.n()).collect::<Vec<usize>>()).prop_shuffle();
        (Just(p), images).prop_map(|(p, images)| {
            let w = Permutation::new(images).expect("shuffled identity is a bijection");
            (p, w)
        })
    })
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(
        a in poly_strategy(),
        b in poly_strategy(),
        c in poly_strategy(),
    ) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn multiplication_is_commutative_and_distributive(
        a in poly_strategy(),
        b in poly_strategy(),
        c in poly_strategy(),
    ) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn ring_units_and_cancellation(a in poly_strategy(), b in poly_strategy()) {
        prop_assert_eq!(a.mul(&P::one(XY)), a.clone());
        prop_assert_eq!(a.add(&P::zero(XY)), a.clone());
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.sub(&b).add(&b), a);
    }

    #[test]
    fn geometric_series_inverts_binomial_powers(m in 0u32..5, cap in 0u32..7) {
        let u = BivariatePolynomial::<i64>::var_first(UV);
        let binom = BivariatePolynomial::one(UV).sub(&u).pow(m);
        let inverse = geometric_pow::<i64>(Var::First, m, cap, UV);
        let product = inverse
            .mul(&TruncatedSeries::from_polynomial(&binom, cap))
            .expect("caps match");
        prop_assert_eq!(product, TruncatedSeries::one(cap, UV));
    }

    #[test]
    fn cross_terms_match_the_truncated_polynomial(m in 0u32..5, cap in 0u32..7) {
        let uv = BivariatePolynomial::<i64>::var_first(UV)
            .mul(&BivariatePolynomial::var_second(UV));
        let poly = BivariatePolynomial::one(UV).sub(&uv).pow(m);
        prop_assert_eq!(
            cross_pow::<i64>(m, cap, UV),
            TruncatedSeries::from_polynomial(&poly, cap)
        );
    }

    #[test]
    fn permutation_inverse_round_trips((v, w) in vector_and_permutation()) {
        prop_assert_eq!(w.inverse().apply_vector(&w.apply_vector(&v)), v);
        prop_assert!(w.inverse().dim() == w.dim());
    }

    #[test]
    fn coverage_instances_enumerate_and_connect(p in coverage_polymatroid()) {
        prop_assert!(!p.bases().is_empty());
        prop_assert_eq!(&brute_force_bases(p.rank()), p.bases());
        prop_assert!(exchange_connected(&p));
    }

    #[test]
    fn tutte_survives_a_random_relabeling((p, w) in polymatroid_with_permutation()) {
        let permuted = p.permuted(&w).expect("dimensions match");
        prop_assert_eq!(
            polymatroid_tutte::<BigInt>(&p),
            polymatroid_tutte::<BigInt>(&permuted)
        );
    }
}
