mod common;

use common::scalar;
use hecke_skein::symfun::{e_series, h_series};
use hecke_skein::{Scalar, SymFunc, TruncSeries};
use proptest::prelude::*;

const ORDER: usize = 4;

fn series() -> impl Strategy<Value = TruncSeries<Scalar>> {
    prop::collection::vec(scalar(), ORDER + 1).prop_map(|c| TruncSeries::new(c, ORDER).unwrap())
}

fn unit_constant() -> impl Strategy<Value = TruncSeries<Scalar>> {
    prop::collection::vec(scalar(), ORDER).prop_map(|mut c| {
        c.insert(0, Scalar::one());
        TruncSeries::new(c, ORDER).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ring_axioms(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.sub(&a).unwrap(), TruncSeries::constant(Scalar::zero(), ORDER));
    }

    #[test]
    fn inverse(a in unit_constant()) {
        let one = TruncSeries::one(&Scalar::one(), ORDER);
        prop_assert_eq!(a.mul(&a.inverse().unwrap()).unwrap(), one);
    }

    #[test]
    fn log_exp(a in unit_constant()) {
        let l = a.log().unwrap();
        prop_assert!(l.coeff(0).is_zero());
        prop_assert_eq!(l.exp().unwrap(), a.clone());
        prop_assert_eq!(l.exp().unwrap().log().unwrap(), l);
    }
}

#[test]
fn truncation_to_shorter_order() {
    let a = TruncSeries::new(vec![Scalar::one(), Scalar::v(), Scalar::s()], 2).unwrap();
    let b = TruncSeries::one(&Scalar::one(), 1);
    assert_eq!(a.mul(&b).unwrap().order(), 1);
    assert!(TruncSeries::constant(Scalar::zero(), 2).inverse().is_err());
    assert!(TruncSeries::constant(Scalar::v(), 2).log().is_err());
}

#[test]
fn elementary_times_complete_is_one() {
    let order = 8;
    let prod = e_series(order).scale_t(&Scalar::from_int(-1)).mul(&h_series(order)).unwrap();
    assert_eq!(prod, TruncSeries::one(&SymFunc::one(), order));
}
