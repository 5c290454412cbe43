mod common;

use common::*;
use mcl_core::integral::{
    block_ideal, corollary_gens, integral_closure, integral_closure_by_enumeration, is_integrally_closed,
    is_normal_up_to, np_member, np_witness, NewtonPolyhedron,
};
use mcl_core::monomial::{ExponentVector, MonomialIdeal};
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

fn sized_ideal() -> impl Strategy<Value = (usize, Vec<Vec<u32>>)> {
    (1usize..=3).prop_flat_map(|n| (Just(n), prop::collection::vec(prop::collection::vec(0u32..=4, n), 1..=4)))
}

fn ideal_of(n: usize, rows: &[Vec<u32>]) -> MonomialIdeal {
    MonomialIdeal::new(n, rows.iter().map(|r| ExponentVector::from(r.as_slice()))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn closure_is_idempotent_and_extensive((n, gens) in sized_ideal()) {
        let i = ideal_of(n, &gens);
        let c = integral_closure(&i).unwrap();
        prop_assert!(i.is_subset_of(&c).unwrap());
        prop_assert_eq!(&integral_closure(&c).unwrap(), &c);
        prop_assert!(is_integrally_closed(&c).unwrap().closed);
        prop_assert_eq!(c, integral_closure_by_enumeration(&i).unwrap());
    }

    #[test]
    fn closure_is_monotone((n, a) in sized_ideal(), extra in prop::collection::vec(0u32..=4, 3)) {
        let i = ideal_of(n, &a);
        let mut b = a.clone();
        b.push(extra[..n].to_vec());
        let j = ideal_of(n, &b);
        prop_assert!(integral_closure(&i).unwrap().is_subset_of(&integral_closure(&j).unwrap()).unwrap());
    }

    #[test]
    fn power_membership_is_a_lower_bound((n, gens) in sized_ideal(), probe in prop::collection::vec(0u32..=5, 3)) {
        let i = ideal_of(n, &gens);
        let p = &probe[..n];
        let v = ExponentVector::from(p);
        if (1..=4).any(|k| power_member(p, &gens, k)) {
            prop_assert!(np_member(&v, &i).unwrap());
        }
        // Membership in the closure is membership in the polyhedron.
        prop_assert_eq!(integral_closure(&i).unwrap().contains(&v).unwrap(), np_member(&v, &i).unwrap());
    }

    #[test]
    fn facets_agree_with_the_linear_program((n, gens) in sized_ideal(), probe in prop::collection::vec(0u32..=6, 3)) {
        let i = ideal_of(n, &gens);
        prop_assume!(!i.is_unit());
        let v = ExponentVector::from(&probe[..n]);
        let np = NewtonPolyhedron::new(&i).unwrap();
        prop_assert_eq!(np.contains(&v), np_member(&v, &i).unwrap());
        for vtx in np.vertices() {
            prop_assert!(i.generators().contains(vtx));
        }
    }

    #[test]
    fn witnesses_are_convex_combinations((n, gens) in sized_ideal(), probe in prop::collection::vec(0u32..=6, 3)) {
        let i = ideal_of(n, &gens);
        let v = ExponentVector::from(&probe[..n]);
        if let Some(w) = np_witness(&v, &i).unwrap() {
            let total: BigRational = w.weights.iter().sum();
            prop_assert_eq!(total, BigRational::one());
            prop_assert!(w.weights.iter().all(|x| *x >= BigRational::from_integer(0.into())));
            prop_assert!(w.point.le_vector(&v));
        }
    }

    #[test]
    fn two_valued_block_ideals_are_normal(s in 1u32..=5, gap in 1u32..=3, picks in prop::collection::vec(any::<bool>(), 1..=3)) {
        let alpha: Vec<u32> = picks.iter().map(|&p| if p { s + gap } else { s }).collect();
        prop_assert!(is_normal_up_to(&block_ideal(&alpha).unwrap(), 2).unwrap().is_normal());
    }
}

#[test]
fn corollary_generators_are_block_ideals() {
    // I(lα) with α = (s, …, s, t).
    for n in 1..=4usize {
        for s in 1..=3u32 {
            for t in 1..=5u32 {
                for l in 1..=2u32 {
                    let mut alpha = vec![l * s; n - 1];
                    alpha.push(l * t);
                    let expected = block_ideal(&alpha).unwrap();
                    let got = corollary_gens(s, t, n, l).unwrap();
                    assert!(got.equals(&expected).unwrap(), "s={s} t={t} n={n} l={l}");
                }
            }
        }
    }
}

#[test]
fn three_distinct_exponents_can_fail() {
    let v = is_normal_up_to(&block_ideal(&[4, 5, 7]).unwrap(), 2).unwrap();
    assert!(!v.is_normal());
}

#[test]
fn closure_of_pure_powers_matches_box_scan() {
    // ⟨x^4, y^5, z^7⟩: the closure is the lattice points with
    // x/4 + y/5 + z/7 ≥ 1, i.e. 35x + 28y + 20z ≥ 140.
    let i = MonomialIdeal::from_rows(3, &[&[4, 0, 0], &[0, 5, 0], &[0, 0, 7]]).unwrap();
    let c = integral_closure(&i).unwrap();
    let members: Vec<Vec<u32>> =
        box_points(&[4, 5, 7]).into_iter().filter(|p| 35 * p[0] + 28 * p[1] + 20 * p[2] >= 140).collect();
    assert_eq!(generator_rows(&c), naive_minimal(&members));
}
