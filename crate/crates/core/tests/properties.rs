//! Property tests backed by independent brute-force oracles.

use proptest::collection::vec;
use proptest::prelude::*;

use monomial_residues::current::{annihilates_term, TensorCurrent};
use monomial_residues::ideal::{
    variety_codimension, variety_is_origin, Exponent, MonomialIdeal, Polynomial,
};
use monomial_residues::newton::{
    compute_newton_polyhedron, integral_closure, integral_closure_of_power,
};
use monomial_residues::residue::annihilator;

fn exp(coords: &[i64]) -> Exponent {
    Exponent::new(coords.to_vec()).unwrap()
}

fn raw_exponents(n: usize, max: i64) -> impl Strategy<Value = Vec<Exponent>> {
    vec(vec(0..=max, n), 1..6).prop_filter_map("no zero exponents", |raw| {
        let exps: Vec<Exponent> = raw
            .into_iter()
            .filter(|c| c.iter().any(|&x| x > 0))
            .map(|c| Exponent::new(c).unwrap())
            .collect();
        (!exps.is_empty()).then_some(exps)
    })
}

/// Exhaustive lattice-box walk used as the membership oracle.
fn box_points(n: usize, bound: i64) -> Vec<Exponent> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (0..=bound).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(|c| exp(&c)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimality_holds_on_construction(raw in raw_exponents(3, 8)) {
        let ideal = MonomialIdeal::minimalize(3, &raw).unwrap();
        let gens = ideal.generators();
        for (i, a) in gens.iter().enumerate() {
            for (j, b) in gens.iter().enumerate() {
                if i != j {
                    prop_assert!(!a.divides(b).unwrap());
                }
            }
        }
        // membership is preserved
        for e in &raw {
            prop_assert!(ideal.contains(e).unwrap());
        }
    }

    #[test]
    fn intersection_matches_boxed_membership(
        raw_i in raw_exponents(2, 8),
        raw_j in raw_exponents(2, 8),
    ) {
        let i = MonomialIdeal::minimalize(2, &raw_i).unwrap();
        let j = MonomialIdeal::minimalize(2, &raw_j).unwrap();
        let meet = i.intersect(&j).unwrap();
        for x in box_points(2, 16) {
            let expected = i.contains(&x).unwrap() && j.contains(&x).unwrap();
            prop_assert_eq!(meet.contains(&x).unwrap(), expected);
        }
    }

    #[test]
    fn power_identities(raw in raw_exponents(2, 4)) {
        let i = MonomialIdeal::minimalize(2, &raw).unwrap();
        prop_assert_eq!(i.power(1).unwrap(), i.clone());
        let via_product = i.power(2).unwrap().power(2).unwrap();
        prop_assert_eq!(via_product, i.power(4).unwrap());
    }

    #[test]
    fn codimension_is_full_iff_origin(raw in raw_exponents(4, 6)) {
        let codim = variety_codimension(&raw).unwrap();
        prop_assert_eq!(codim == 4, variety_is_origin(&raw));
    }

    #[test]
    fn closure_contains_and_is_idempotent(raw in raw_exponents(2, 6)) {
        let closure = integral_closure(&raw).unwrap();
        for g in &raw {
            prop_assert!(closure.contains(g).unwrap());
        }
        let again = integral_closure(closure.generators()).unwrap();
        prop_assert_eq!(closure, again);
    }

    #[test]
    fn scaled_membership_matches_closure_of_power(
        raw in raw_exponents(2, 5),
        r in 1u32..3,
    ) {
        let p = compute_newton_polyhedron(&raw).unwrap();
        let closure = integral_closure_of_power(&raw, r).unwrap();
        for x in box_points(2, 12) {
            prop_assert_eq!(
                p.contains_scaled(r as i64, &x).unwrap(),
                closure.contains(&x).unwrap()
            );
        }
    }

    #[test]
    fn pairing_agrees_with_divisibility(
        alpha in vec(1i64..6, 2),
        terms in vec((vec(0i64..8, 2), -3i64..4), 1..4),
    ) {
        let current = TensorCurrent::new(exp(&alpha)).unwrap();
        let poly = Polynomial::from_terms(
            2,
            terms.into_iter().map(|(c, q)| {
                (exp(&c), monomial_residues::ratio::Rational::new(q, 1))
            }),
        )
        .unwrap();
        // annihilates_term itself asserts that the pairing sum and the
        // divisibility criterion agree
        let _ = annihilates_term(&current, &poly).unwrap();
    }

    #[test]
    fn annihilator_depends_only_on_diagram(extra in vec(0i64..5, 2)) {
        // basex with a random interior translate of a generator added
        let mut a = vec![
            exp(&[8, 0]),
            exp(&[6, 1]),
            exp(&[2, 3]),
            exp(&[0, 6]),
        ];
        let base = annihilator(&a).unwrap().annihilator;
        let shifted = exp(&[2 + 1 + extra[0], 3 + 1 + extra[1]]);
        a.push(shifted);
        let augmented = annihilator(&a).unwrap().annihilator;
        prop_assert_eq!(base, augmented);
    }
}

#[test]
fn vertices_are_members_of_input() {
    let a = [
        exp(&[8, 0]),
        exp(&[6, 1]),
        exp(&[2, 3]),
        exp(&[1, 5]),
        exp(&[0, 6]),
    ];
    let p = compute_newton_polyhedron(&a).unwrap();
    for &v in p.vertex_indices() {
        assert!(a.contains(&p.points()[v]));
    }
}
