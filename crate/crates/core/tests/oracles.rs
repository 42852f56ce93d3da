//! Independent re-derivations of values the library computes another way.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use coxeter_toric::cohomology::{
    betti, exp_sech_coefficients, exponential_specialization, rep_via_induction, rep_via_induction_multiset,
};
use coxeter_toric::combinatorics::{
    all_permutations, binomial, class_data, factorial, partitions_of, secant_numbers, stirling2, CycleType, Partition,
    Subset,
};
use coxeter_toric::poset_homology::{equivariant_top_character, homology_ranks, EvenInterval};
use coxeter_toric::rep_ring::{decompose, to_class_function, ClassFunction, RepSeries, SchurVector};
use coxeter_toric::{rational, Rational};

fn all_irreducibles(max: usize) -> Vec<Partition> {
    (0..=max).flat_map(partitions_of).collect()
}

#[test]
fn pieri_matches_induced_characters() {
    for lambda in all_irreducibles(5) {
        let chi = ClassFunction::irreducible(&lambda);
        let v = SchurVector::basis(lambda.clone());
        for k in 0..=(7 - lambda.n()) {
            let h = decompose(&chi.induced_product(&ClassFunction::trivial(k)));
            assert_eq!(v.pieri_h(k), h, "{lambda} · h_{k}");
            let e = decompose(&chi.induced_product(&ClassFunction::sign(k)));
            assert_eq!(v.pieri_e(k), e, "{lambda} · e_{k}");
        }
    }
}

#[test]
fn general_products_match_induced_characters() {
    for a in all_irreducibles(4) {
        for b in all_irreducibles(6 - a.n()) {
            let by_pieri = SchurVector::basis(a.clone()).product(&SchurVector::basis(b.clone()));
            let by_characters =
                decompose(&ClassFunction::irreducible(&a).induced_product(&ClassFunction::irreducible(&b)));
            assert_eq!(by_pieri, by_characters, "{a} · {b}");
        }
    }
}

/// Row orthogonality, degrees at the identity, and `Σ (dim V_λ)^2 = n!`.
#[test]
fn character_tables_are_orthogonal() {
    for n in 1..=7 {
        let lambdas = partitions_of(n);
        let mut order_sum = BigInt::zero();
        for lambda in &lambdas {
            let chi = ClassFunction::irreducible(lambda);
            let id = CycleType::new(vec![1; n]).unwrap();
            assert_eq!(chi.value(&id), Rational::from_integer(lambda.dimension()));
            order_sum += lambda.dimension() * lambda.dimension();
            for mu in &lambdas {
                let inner = chi.inner(&ClassFunction::irreducible(mu));
                let want = if lambda == mu { Rational::one() } else { Rational::zero() };
                assert_eq!(inner, want, "⟨χ^{lambda}, χ^{mu}⟩");
            }
        }
        assert_eq!(order_sum, BigInt::from(factorial(n)));
        let class_total: u64 = lambdas.iter().map(|mu| class_data(&CycleType(mu.clone())).1).sum();
        assert_eq!(class_total, factorial(n));
    }
}

#[test]
fn characters_from_explicit_permutations() {
    // the permutation character on [n] counts fixed points, class by class
    for n in 1..=6 {
        let f = ClassFunction::fixed_points(n);
        for w in all_permutations(n) {
            let fixed = (0..n).filter(|&i| w.apply(i) == i).count() as i64;
            assert_eq!(f.value(&w.cycle_type()), rational::int(fixed));
        }
        let mut expected = SchurVector::basis(Partition::row(n));
        if n >= 2 {
            expected.add_term(Partition::new(vec![n - 1, 1]).unwrap(), Rational::one());
        }
        assert_eq!(decompose(&f), expected);
    }
}

#[test]
fn round_trip_through_class_functions() {
    for n in 0..=7 {
        for lambda in partitions_of(n) {
            let v = SchurVector::basis(lambda.clone());
            assert_eq!(decompose(&to_class_function(&v)), v);
        }
    }
}

/// Euler zigzag numbers by the boustrophedon triangle.
fn zigzag(max: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    let mut row = vec![BigInt::one()];
    for k in 1..=max {
        let mut next = vec![BigInt::zero()];
        for j in 0..k {
            let v = &next[j] + &row[k - 1 - j];
            next.push(v);
        }
        out.push(next[k].clone());
        row = next;
    }
    out
}

#[test]
fn secant_numbers_match_zigzag() {
    let z = zigzag(24);
    let s = secant_numbers(24);
    for (k, a) in s.iter().enumerate() {
        assert_eq!(a, &z[2 * k], "A_{}", 2 * k);
    }
    let small: Vec<i64> = s.iter().take(5).map(|x| x.try_into().unwrap()).collect();
    assert_eq!(small, [1, 1, 5, 61, 1385]);
}

/// Möbius function `μ(∅, J)` of `B_n^ev` by the defining recursion.
fn mobius_even(n: usize) -> i64 {
    let top = Subset::full(n);
    let mut mu: BTreeMap<Subset, i64> = BTreeMap::new();
    let mut evens: Vec<Subset> = top.subsets().filter(|s| s.len() % 2 == 0).collect();
    evens.sort_by_key(|s| s.len());
    for j in evens {
        let v = if j.is_empty() {
            1
        } else {
            -mu.iter().filter(|(k, _)| k.is_subset_of(j) && **k != j).map(|(_, v)| v).sum::<i64>()
        };
        mu.insert(j, v);
    }
    mu[&top]
}

#[test]
fn top_rank_matches_mobius_function() {
    for n in (0..=8).step_by(2) {
        let ranks = homology_ranks(n).unwrap();
        let rank = ranks[&(n / 2)] as i64;
        let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
        assert_eq!(sign * rank, mobius_even(n), "n={n}");
    }
}

#[test]
fn interval_complex_sizes() {
    let complex = EvenInterval::new(8).unwrap().complex();
    assert_eq!(complex.simplex_counts(), vec![1, 126, 1260, 2520]);
    assert_eq!(complex.reduced_euler_characteristic(), 1385);
    assert!(complex.boundary_squares_to_zero());
}

#[test]
fn hopf_character_at_identity_is_rank() {
    for n in (2..=8).step_by(2) {
        let chi = equivariant_top_character(n).unwrap();
        let id = CycleType::new(vec![1; n]).unwrap();
        assert_eq!(chi.value(&id), Rational::from_integer(betti(n, n / 2)));
    }
}

#[test]
fn induction_formula_variants_agree() {
    for n in 0..=12 {
        for i in 0..=n / 2 {
            assert_eq!(rep_via_induction(n, i), rep_via_induction_multiset(n, i), "n={n}, i={i}");
        }
    }
}

#[test]
fn exponential_generating_function() {
    for row in exponential_specialization(8).unwrap() {
        assert!(row.agrees(), "{row:?}");
    }
    let c = exp_sech_coefficients(10);
    for n in 0..=10 {
        for i in 0..=n / 2 {
            let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            assert_eq!(c[&(n, i)], sign * betti(n, i));
        }
    }
}

#[test]
fn series_inverse_is_two_sided() {
    for s in [RepSeries::all_trivial(8), RepSeries::even_trivial(8), RepSeries::even_sign_t(8)] {
        let inv = s.invert().unwrap();
        assert_eq!(s.multiply(&inv), RepSeries::one(8));
        assert_eq!(inv.multiply(&s), RepSeries::one(8));
    }
}

#[test]
fn ordered_set_partitions_count_chains() {
    // Σ_m m!·S(n, m) is the ordered Bell number
    let fubini = [1u64, 1, 3, 13, 75, 541, 4683, 47293];
    for (n, &f) in fubini.iter().enumerate() {
        let total: u64 = (0..=n).map(|m| factorial(m) * stirling2(n, m)).sum();
        assert_eq!(total, f);
    }
    assert_eq!(binomial(10, 4), 210);
}
