use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use coxeter_toric::combinatorics::{enumerate_chains, factorial, partitions_of, Partition, Permutation, SubsetChain};
use coxeter_toric::cup_product::{cup_reduce, sn_act_on_nu, DegreeTwoClass, NuClass};
use coxeter_toric::rep_ring::{decompose, to_class_function, SchurVector};
use coxeter_toric::wonderful_model::{self as wm, ModelPoint};
use coxeter_toric::{rational, Rational};

/// A virtual character of `S_n` with small integer coefficients.
fn schur_vector(max_n: usize) -> impl Strategy<Value = SchurVector> {
    (0..=max_n).prop_flat_map(|n| {
        let parts = partitions_of(n);
        prop::collection::vec(-3i64..=3, parts.len()).prop_map(move |coeffs| {
            let mut v = SchurVector::zero(n);
            for (lambda, c) in parts.iter().zip(coeffs) {
                v.add_term(lambda.clone(), rational::int(c));
            }
            v
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|w| Permutation::new(w).unwrap())
}

fn chain(n: usize) -> impl Strategy<Value = SubsetChain> {
    let all: Vec<SubsetChain> = (1..=n).flat_map(|m| enumerate_chains(n, m)).collect();
    prop::sample::select(all)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn omega_swaps_pieri_rules(v in schur_vector(5), k in 0usize..=3) {
        prop_assert_eq!(v.pieri_h(k).omega(), v.omega().pieri_e(k));
        prop_assert_eq!(v.omega().omega(), v);
    }

    #[test]
    fn class_function_round_trip(v in schur_vector(6)) {
        prop_assert_eq!(decompose(&to_class_function(&v)), v);
    }

    #[test]
    fn product_is_commutative(a in schur_vector(3), b in schur_vector(3)) {
        prop_assert_eq!(a.product(&b), b.product(&a));
    }

    #[test]
    fn restriction_preserves_dimension(v in schur_vector(7)) {
        prop_assume!(v.n() >= 1);
        prop_assert_eq!(v.restrict().dimension(), v.dimension());
    }

    #[test]
    fn pieri_multiplies_dimensions(v in schur_vector(5), k in 0usize..=3) {
        let n = v.n();
        let binom = Rational::from_integer((factorial(n + k) / (factorial(n) * factorial(k))).into());
        prop_assert_eq!(v.pieri_h(k).dimension(), v.dimension() * binom.clone());
        prop_assert_eq!(v.pieri_e(k).dimension(), v.dimension() * binom);
    }

    #[test]
    fn conjugation_is_an_involution(n in 0usize..=10, k in 0usize..50) {
        let parts = partitions_of(n);
        let lambda: &Partition = &parts[k % parts.len()];
        prop_assert_eq!(&lambda.conjugate().conjugate(), lambda);
        prop_assert_eq!(lambda.conjugate().dimension(), lambda.dimension());
    }

    #[test]
    fn orbit_points_land_in_their_orbit(c in chain(5), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = wm::orbit_point_with(&c, |_, _| wm::random_nonzero(&mut rng));
        prop_assert!(wm::is_on_model(&p));
        prop_assert_eq!(&wm::orbit_of(&p).unwrap().chain, &c);
        prop_assert!(wm::degeneration_witness(&p).unwrap().verified());
        prop_assert_eq!(ModelPoint::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn actions_respect_orbits(c in chain(5), w in permutation(5), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = wm::orbit_point_with(&c, |_, _| wm::random_nonzero(&mut rng));
        let g = wm::random_torus_element(5, &mut rng);
        prop_assert_eq!(&wm::orbit_of(&wm::torus_act(&g, &p)).unwrap().chain, &c);
        prop_assert_eq!(wm::orbit_of(&wm::permutation_act(&w, &p)).unwrap().chain, c.permute(w.images()));
        let back = wm::permutation_act(&w.inverse(), &wm::permutation_act(&w, &p));
        prop_assert_eq!(back, p);
    }

    #[test]
    fn orbit_dimensions_add_up(c in chain(6)) {
        let o = wm::OrbitLabel { chain: c };
        prop_assert_eq!(o.dimension() + o.cone_dimension(), 5);
    }

    #[test]
    fn action_preserves_relations(w in permutation(6), a in 0usize..6, b in 0usize..6, c in 0usize..6, d in 0usize..6) {
        prop_assume!(a != b && c != d);
        let (x, y) = (NuClass::new(a, b), NuClass::new(c, d));
        let mut direct = DegreeTwoClass::zero();
        direct.add(&cup_reduce(&sn_act_on_nu(&w, &x), &sn_act_on_nu(&w, &y)));
        prop_assert_eq!(direct, cup_reduce(&x, &y).act(&w));
    }
}

#[test]
fn maximal_chains_are_permutations() {
    for n in 1..=7 {
        assert_eq!(enumerate_chains(n, n).len() as u64, factorial(n));
    }
}

#[test]
fn chain_counts_are_ordered_set_partitions() {
    for n in 1..=6 {
        for m in 1..=n {
            let want = coxeter_toric::combinatorics::ordered_set_partitions(n, m);
            assert_eq!(enumerate_chains(n, m).len() as u64, want);
        }
    }
}

#[test]
fn refinement_is_a_partial_order() {
    let chains: Vec<SubsetChain> = (1..=4).flat_map(|m| enumerate_chains(4, m)).collect();
    for a in &chains {
        assert!(wm::closure_refinement(a, a));
        for b in &chains {
            if a != b && wm::closure_refinement(a, b) {
                assert!(!wm::closure_refinement(b, a));
            }
            if !wm::closure_refinement(a, b) {
                continue;
            }
            for c in &chains {
                if wm::closure_refinement(b, c) {
                    assert!(wm::closure_refinement(a, c));
                }
            }
        }
    }
}

#[test]
fn closures_contain_exactly_refining_orbits_sampled() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let chains: Vec<SubsetChain> = (1..=4).flat_map(|m| enumerate_chains(4, m)).collect();
    for a in &chains {
        for _ in 0..3 {
            let p = wm::orbit_point_with(a, |_, _| wm::random_nonzero(&mut rng));
            for b in &chains {
                assert_eq!(wm::in_orbit_closure(&p, b), wm::closure_refinement(a, b));
            }
        }
    }
}

#[test]
fn closures_contain_exactly_refining_orbits() {
    let chains: Vec<SubsetChain> = (1..=4).flat_map(|m| enumerate_chains(4, m)).collect();
    for a in &chains {
        let p = wm::orbit_representative(a);
        for b in &chains {
            let refines = wm::closure_refinement(a, b);
            assert_eq!(wm::in_orbit_closure(&p, b), refines, "{a} in closure of {b}");
            if refines {
                assert!(wm::satisfies_block_equations(&p, b), "{a} against the equations of {b}");
            }
        }
    }
}
