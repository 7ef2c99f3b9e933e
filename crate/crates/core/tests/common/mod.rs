#![allow(dead_code)]

use hecke_skein::perm::all_perms;
use hecke_skein::{HeckeElt, Scalar};
use proptest::prelude::*;
use rand::Rng;

/// Laurent polynomial with up to four small terms.
pub fn laurent() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-2i32..=2, -3i32..=3, -3i64..=3), 0..4).prop_map(|ts| {
        ts.into_iter()
            .fold(Scalar::zero(), |acc, (a, b, c)| &acc + &Scalar::monomial(a, b, c))
    })
}

/// Denominators typical of the computations: powers of `z`, quantum integers
/// and `v - s`.
pub fn denominator() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        Just(Scalar::one()),
        Just(Scalar::z()),
        Just(Scalar::quantum_int(3).unwrap()),
        Just(&Scalar::v() - &Scalar::s()),
        Just(&Scalar::one() + &Scalar::monomial(1, 2, 1)),
    ]
}

pub fn scalar() -> impl Strategy<Value = Scalar> {
    (laurent(), denominator()).prop_map(|(a, d)| &a / &d)
}

pub fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |x| !x.is_zero())
}

/// Element of `H_n` with up to `terms` basis elements.
pub fn hecke(n: usize, terms: usize) -> impl Strategy<Value = HeckeElt> {
    let perms = all_perms(n).unwrap();
    let count = perms.len();
    prop::collection::vec((0..count, scalar()), 1..=terms).prop_map(move |ts| {
        HeckeElt::from_terms(n, ts.into_iter().map(|(i, c)| (perms[i], c))).unwrap()
    })
}

/// Same shape of element drawn from a seeded generator.
pub fn random_hecke<R: Rng>(rng: &mut R, n: usize, terms: usize) -> HeckeElt {
    let perms = all_perms(n).unwrap();
    let dens = [
        Scalar::one(),
        Scalar::z(),
        Scalar::quantum_int(2).unwrap(),
        &Scalar::v() - &Scalar::s(),
    ];
    let k = rng.gen_range(1..=terms);
    let ts = (0..k).map(|_| {
        let mut c = Scalar::zero();
        for _ in 0..rng.gen_range(1..=3) {
            c = &c + &Scalar::monomial(rng.gen_range(-2..=2), rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        }
        let d = &dens[rng.gen_range(0..dens.len())];
        (perms[rng.gen_range(0..perms.len())], &c / d)
    });
    HeckeElt::from_terms(n, ts).unwrap()
}
