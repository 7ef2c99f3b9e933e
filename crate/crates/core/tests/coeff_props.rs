mod common;

use common::{nonzero_scalar, scalar};
use hecke_skein::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn rational(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a - &a, Scalar::zero());
    }

    #[test]
    fn inverses(a in nonzero_scalar()) {
        let inv = a.inv().unwrap();
        prop_assert!((&a * &inv).is_one());
        prop_assert_eq!(inv.inv().unwrap(), a);
    }

    #[test]
    fn canonical_form_is_unique(a in scalar(), b in nonzero_scalar()) {
        // rebuilding from the same quotient lands on the same representative
        let q = &(&a * &b) / &b;
        prop_assert_eq!(q.numer(), a.numer());
        prop_assert_eq!(q.denom(), a.denom());
    }

    #[test]
    fn mirror_is_an_involutive_ring_map(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.mirror().mirror(), a.clone());
        prop_assert_eq!((&a * &b).mirror(), &a.mirror() * &b.mirror());
        prop_assert_eq!((&a + &b).mirror(), &a.mirror() + &b.mirror());
    }

    #[test]
    fn evaluation_commutes(a in scalar(), b in scalar(), v0 in 2i64..6, s0 in 2i64..6, q in 1i64..4) {
        let v = rational(v0, q);
        let s = rational(s0, q + 5);
        let (Ok(x), Ok(y)) = (a.eval_rational(&v, &s), b.eval_rational(&v, &s)) else {
            return Ok(());
        };
        prop_assert_eq!((&a + &b).eval_rational(&v, &s).unwrap(), &x + &y);
        prop_assert_eq!((&a * &b).eval_rational(&v, &s).unwrap(), &x * &y);
    }
}

#[test]
fn quantum_integers() {
    assert!(Scalar::quantum_int(0).is_err());
    for n in 1..=20 {
        let q = Scalar::quantum_int(n).unwrap();
        assert_eq!(&q * &Scalar::z(), Scalar::s_diff(n as i32), "n = {n}");
    }
}

#[test]
fn named_constants() {
    let z = Scalar::z();
    assert_eq!(z, &Scalar::s() - &Scalar::s_pow(-1));
    assert_eq!(&Scalar::delta() * &z, &Scalar::v_pow(-1) - &Scalar::v());
    assert!(Scalar::zero().inv().is_err());
}
