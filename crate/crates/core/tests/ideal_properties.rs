//! Algebraic laws of the monomial-ideal operations, checked on random small
//! ideals against membership tests done by hand.

mod common;

use common::{brute_minimal_primes, in_symbolic};
use genlink::ideal::{
    height_and_unmixed, minimal_primes, symbolic_member, symbolic_power, Monomial, MonomialIdeal, Universe,
};
use itertools::Itertools;
use proptest::prelude::*;

const VARS: u32 = 4;
const MAX_EXP: u32 = 2;

fn uni() -> Universe {
    Universe::x_grid(1, VARS)
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=MAX_EXP, VARS as usize).prop_map(|e| {
        Monomial::from_exponents(e.into_iter().enumerate().filter(|(_, x)| *x > 0).map(|(v, x)| (v as u32, x)))
    })
}

fn squarefree_monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(any::<bool>(), VARS as usize).prop_map(|bits| {
        Monomial::from_exponents(bits.into_iter().enumerate().filter(|(_, b)| *b).map(|(v, _)| (v as u32, 1)))
    })
}

fn ideal() -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial(), 1..5).prop_map(|g| MonomialIdeal::new(uni(), g).unwrap())
}

fn squarefree_ideal() -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(squarefree_monomial().prop_filter("proper", |m| !m.is_one()), 1..5)
        .prop_map(|g| MonomialIdeal::new(uni(), g).unwrap())
}

/// Every monomial with exponents up to `cap` in each variable.
fn box_monomials(cap: u32) -> Vec<Monomial> {
    (0..VARS)
        .map(|_| 0..=cap)
        .multi_cartesian_product()
        .map(|e| {
            Monomial::from_exponents(e.into_iter().enumerate().filter(|(_, x)| *x > 0).map(|(v, x)| (v as u32, x)))
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn generators_form_an_antichain(w in ideal()) {
        let g = w.generators();
        for (i, a) in g.iter().enumerate() {
            for (j, b) in g.iter().enumerate() {
                prop_assert!(i == j || !a.divides(b));
            }
        }
        let again = MonomialIdeal::new(uni(), g.iter().cloned()).unwrap();
        prop_assert_eq!(&again, &w);
    }

    #[test]
    fn sum_product_and_meet_commute(a in ideal(), b in ideal()) {
        prop_assert_eq!(a.sum(&b).unwrap(), b.sum(&a).unwrap());
        prop_assert_eq!(a.multiply(&b).unwrap(), b.multiply(&a).unwrap());
        prop_assert_eq!(a.intersect(&b).unwrap(), b.intersect(&a).unwrap());
    }

    #[test]
    fn product_and_meet_associate(a in ideal(), b in ideal(), c in ideal()) {
        let ab_c = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let a_bc = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let ab_c = a.intersect(&b).unwrap().intersect(&c).unwrap();
        let a_bc = a.intersect(&b.intersect(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn meet_is_idempotent_and_absorbs(a in ideal(), b in ideal()) {
        prop_assert_eq!(&a.intersect(&a).unwrap(), &a);
        prop_assert_eq!(&a.intersect(&a.sum(&b).unwrap()).unwrap(), &a);
    }

    #[test]
    fn membership_matches_definitions(a in ideal(), b in ideal()) {
        let meet = a.intersect(&b).unwrap();
        let sum = a.sum(&b).unwrap();
        let prod = a.multiply(&b).unwrap();
        for u in box_monomials(4) {
            prop_assert_eq!(meet.contains(&u), a.contains(&u) && b.contains(&u));
            prop_assert_eq!(sum.contains(&u), a.contains(&u) || b.contains(&u));
            let split = a.generators().iter().any(|g| g.divides(&u) && b.contains(&u.div(g).unwrap()));
            prop_assert_eq!(prod.contains(&u), split);
        }
    }

    /// `u ∈ W : V` exactly when `u·v ∈ W` for every generator `v` of `V`.
    #[test]
    fn colon_is_the_galois_adjoint(w in ideal(), v in ideal()) {
        let colon = w.colon(&v).unwrap();
        for u in box_monomials(2) {
            let adjoint = v.generators().iter().all(|g| w.contains(&u.mul(g)));
            prop_assert_eq!(colon.contains(&u), adjoint);
            prop_assert_eq!(w.colon_contains(&v, &u).unwrap(), adjoint);
        }
        prop_assert!(w.is_subset_of(&colon));
    }

    #[test]
    fn bracket_power_squares_generators(w in ideal(), q in 1u32..4) {
        let b = w.bracket_power(q).unwrap();
        let want = MonomialIdeal::new(uni(), w.generators().iter().map(|g| g.pow(q))).unwrap();
        prop_assert_eq!(b, want);
    }

    #[test]
    fn power_lies_in_symbolic_power(w in squarefree_ideal(), ell in 1u32..=4) {
        let sym = symbolic_power(&w, ell).unwrap();
        prop_assert!(w.power(ell).is_subset_of(&sym));
        if ell == 1 {
            prop_assert_eq!(&sym, &w);
        }
    }

    #[test]
    fn symbolic_membership_agrees_with_the_power(w in squarefree_ideal(), ell in 1u32..=3) {
        let sym = symbolic_power(&w, ell).unwrap();
        let primes = brute_minimal_primes(w.generators());
        for u in box_monomials(ell) {
            let member = symbolic_member(&w, &u, ell).unwrap();
            prop_assert_eq!(member, sym.contains(&u));
            prop_assert_eq!(member, in_symbolic(&primes, &u, ell));
        }
    }

    #[test]
    fn primes_match_enumeration(w in squarefree_ideal()) {
        let mut lib = minimal_primes(&w).unwrap();
        lib.sort();
        let brute = brute_minimal_primes(w.generators());
        prop_assert_eq!(&lib, &brute);
        let (h, unmixed) = height_and_unmixed(&w).unwrap();
        prop_assert_eq!(h, brute.iter().map(Vec::len).min().unwrap());
        prop_assert_eq!(unmixed, brute.iter().all(|p| p.len() == h));
    }

    #[test]
    fn json_round_trips(w in ideal()) {
        let back = MonomialIdeal::from_json(&w.to_json()).unwrap();
        prop_assert_eq!(back, w);
    }
}

#[test]
fn small_examples() {
    let u = uni();
    let (x, y, z) = (Monomial::var(0), Monomial::var(1), Monomial::var(2));
    let id = |g: Vec<Monomial>| MonomialIdeal::new(u, g).unwrap();
    assert_eq!(id(vec![x.clone(), x.mul(&y)]), id(vec![x.clone()]));
    assert!(id(vec![]).is_zero());
    assert_eq!(
        id(vec![x.mul(&y), y.mul(&z), x.mul(&y).mul(&z)]),
        id(vec![x.mul(&y), y.mul(&z)])
    );
    assert_eq!(id(vec![x.clone()]).multiply(&id(vec![y.clone()])).unwrap(), id(vec![x.mul(&y)]));
    let xy = id(vec![x.clone(), y.clone()]);
    assert_eq!(xy.power(2), id(vec![x.pow(2), x.mul(&y), y.pow(2)]));
    assert_eq!(xy.bracket_power(2).unwrap(), id(vec![x.pow(2), y.pow(2)]));
    assert_eq!(
        id(vec![x.mul(&y), z.clone()]).bracket_power(2).unwrap(),
        id(vec![x.pow(2).mul(&y.pow(2)), z.pow(2)])
    );
    assert!(xy.bracket_power(0).is_err());
    assert_eq!(
        id(vec![x.mul(&y), y.mul(&z)]).colon(&id(vec![y.clone()])).unwrap(),
        id(vec![x.clone(), z.clone()])
    );
    assert_eq!(xy.colon(&MonomialIdeal::unit(u)).unwrap(), xy);
    assert!(xy.colon(&MonomialIdeal::zero(u)).is_err());
    assert_eq!(id(vec![x.clone()]).intersect(&id(vec![y.clone()])).unwrap(), id(vec![x.mul(&y)]));
    assert_eq!(
        id(vec![x.pow(2), y.clone()]).intersect(&id(vec![x.clone()])).unwrap(),
        id(vec![x.pow(2), x.mul(&y)])
    );
    let single = id(vec![x.mul(&y)]);
    assert!(single.contains(&x.pow(2).mul(&y)));
    assert!(!single.contains(&x));
    assert!(!symbolic_member(&single, &x, 1).unwrap());
    for ell in 1..=4 {
        assert_eq!(symbolic_power(&xy, ell).unwrap(), xy.power(ell));
    }
}
