use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use pairenum::genfunc::{
    multigraph_series, multigraph_series_with, simple_genfunc_det, simple_genfunc_det_with, simple_genfunc_elementwise,
    simple_genfunc_elementwise_with, simple_genfunc_harary, CycleIndex, ELEMENT_LIMIT,
};
use pairenum::invariants::{
    gamma_reduce, orbit_representatives, pair_group_elements, reynolds, Monomial, SymPoly, ORBIT_LIMIT,
};
use pairenum::oracle::{brute_simple_counts, brute_simple_counts_with, burnside_subset_count};
use pairenum::perm::num_edge_slots;
use pairenum::{Error, Execution};

fn ints(cs: &[i64]) -> Vec<BigInt> {
    cs.iter().map(|&c| BigInt::from(c)).collect()
}

#[test]
fn known_small_vectors() {
    let known: [(usize, &[i64]); 4] = [
        (5, &[1, 1, 2, 4, 6, 6, 6, 4, 2, 1, 1]),
        (6, &[1, 1, 2, 5, 9, 15, 21, 24, 24, 21, 15, 9, 5, 2, 1, 1]),
        (
            7,
            &[
                1, 1, 2, 5, 10, 21, 41, 65, 97, 131, 148, 148, 131, 97, 65, 41, 21, 10, 5, 2, 1, 1,
            ],
        ),
        (
            8,
            &[
                1, 1, 2, 5, 11, 24, 56, 115, 221, 402, 663, 980, 1312, 1557, 1646, 1557, 1312, 980, 663, 402, 221, 115,
                56, 24, 11, 5, 2, 1, 1,
            ],
        ),
    ];
    for (n, want) in known {
        assert_eq!(simple_genfunc_det(n).unwrap().counts(), ints(want), "n = {n}");
        assert_eq!(simple_genfunc_harary(n).unwrap().counts(), ints(want), "n = {n}");
    }
    assert_eq!(
        simple_genfunc_elementwise(7, ELEMENT_LIMIT).unwrap().counts(),
        simple_genfunc_det(7).unwrap().counts()
    );
}

#[test]
fn det_and_harary_agree_at_scale() {
    for n in 1..=24 {
        let det = simple_genfunc_det(n).unwrap();
        det.check_invariants().unwrap();
        assert_eq!(det.counts(), simple_genfunc_harary(n).unwrap().counts(), "n = {n}");
        assert_eq!(det.counts().len(), num_edge_slots(n) + 1);
    }
}

#[test]
fn burnside_agrees_with_both_other_routes() {
    let brute = brute_simple_counts(6).unwrap();
    assert_eq!(burnside_subset_count(6, 7).unwrap(), brute.counts()[7]);
    for n in 1..=9 {
        let g = simple_genfunc_det(n).unwrap();
        for (i, a) in g.counts().iter().enumerate() {
            assert_eq!(&burnside_subset_count(n, i).unwrap(), a, "n = {n}, i = {i}");
        }
    }
}

#[test]
fn sequential_and_parallel_agree() {
    for n in [1, 5, 12, 25] {
        assert_eq!(
            simple_genfunc_det_with(n, Execution::Sequential).unwrap(),
            simple_genfunc_det_with(n, Execution::Parallel).unwrap()
        );
    }
    assert_eq!(
        simple_genfunc_elementwise_with(6, ELEMENT_LIMIT, Execution::Sequential).unwrap(),
        simple_genfunc_elementwise_with(6, ELEMENT_LIMIT, Execution::Parallel).unwrap()
    );
    assert_eq!(
        brute_simple_counts_with(5, Execution::Sequential).unwrap(),
        brute_simple_counts_with(5, Execution::Parallel).unwrap()
    );
    assert_eq!(
        multigraph_series_with(7, 20, Execution::Sequential).unwrap().counts(),
        multigraph_series_with(7, 20, Execution::Parallel).unwrap().counts()
    );
}

#[test]
fn multigraph_series_properties() {
    assert_eq!(
        multigraph_series(3, 8).unwrap().counts(),
        ints(&[1, 1, 2, 3, 4, 5, 7, 8, 10])
    );
    assert_eq!(
        multigraph_series(4, 8).unwrap().counts(),
        ints(&[1, 1, 3, 6, 11, 18, 32, 48, 75])
    );
    assert_eq!(
        multigraph_series(5, 8).unwrap().counts(),
        ints(&[1, 1, 3, 7, 17, 35, 76, 149, 291])
    );
    assert_eq!(multigraph_series(1, 4).unwrap().counts(), ints(&[1, 0, 0, 0, 0]));
    for n in 2..=8 {
        let multi = multigraph_series(n, 12).unwrap();
        let simple = simple_genfunc_det(n).unwrap();
        let c = multi.counts();
        assert!(c.windows(2).all(|w| w[0] <= w[1]), "n = {n}: {c:?}");
        for (i, a) in simple.counts().iter().enumerate().take(13) {
            assert!(&c[i] >= a, "n = {n}, i = {i}");
        }
        // truncation does not change lower coefficients
        assert_eq!(multigraph_series(n, 5).unwrap().counts(), &c[..6]);
    }
}

#[test]
fn cycle_index_substitution_gives_the_counts() {
    for n in 1..=10 {
        let z = CycleIndex::pair_group(n).unwrap();
        let total: BigRational = z.terms().map(|(_, c)| c.clone()).sum();
        assert!(total.is_one(), "n = {n}");
        let sub = z.substitute_one_plus_zk();
        let g = simple_genfunc_det(n).unwrap();
        let want: Vec<BigRational> = g.counts().iter().cloned().map(BigRational::from_integer).collect();
        assert_eq!(sub.coeffs(), &want[..], "n = {n}");
    }
}

#[test]
fn orbit_representatives_count_the_classes() {
    for n in 1..=6 {
        let g = simple_genfunc_det(n).unwrap();
        for (i, a) in g.counts().iter().enumerate() {
            let reps = orbit_representatives(n, i, ORBIT_LIMIT).unwrap();
            assert_eq!(&BigInt::from(reps.len()), a, "n = {n}, i = {i}");
            assert!(reps.iter().all(|r| r.edge_count() as usize == i));
        }
    }
}

#[test]
fn guards_are_errors() {
    assert!(matches!(brute_simple_counts(7), Err(Error::Guard { .. })));
    assert!(matches!(
        simple_genfunc_elementwise(9, ELEMENT_LIMIT),
        Err(Error::Guard { .. })
    ));
    assert!(matches!(
        orbit_representatives(8, 2, ORBIT_LIMIT),
        Err(Error::Guard { .. })
    ));
    assert!(simple_genfunc_det(0).is_err());
    assert!(burnside_subset_count(4, 7).is_err());
}

fn monomial_strategy(m: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..4, m).prop_map(Monomial::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gamma_commutes_with_the_action(mono in monomial_strategy(6), g in 0usize..24) {
        let p = &pair_group_elements(4, 4).unwrap()[g];
        prop_assert_eq!(gamma_reduce(&mono.act(p)), gamma_reduce(&mono).act(p));
        prop_assert!(gamma_reduce(&mono).is_squarefree());
    }

    #[test]
    fn reynolds_is_a_projector(mono in monomial_strategy(6)) {
        let r = reynolds(&mono, 4).unwrap();
        let mut again = SymPoly::zero(6);
        for (term, c) in r.terms() {
            for (t2, c2) in reynolds(term, 4).unwrap().terms() {
                again.add_term(t2.clone(), &(c * c2));
            }
        }
        prop_assert_eq!(&again, &r);
        let weight: BigRational = r.terms().map(|(_, c)| c.clone()).sum();
        prop_assert!(weight.is_one());
        prop_assert!(r.terms().all(|(t, c)| t.degree() == mono.degree() && !c.is_zero()));
    }
}
