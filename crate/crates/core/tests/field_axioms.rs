use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rectjack::field::{format_rational, parse_rational, IntPoly, RatFunc};

fn arb_intpoly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-20i64..=20, 0..=4).prop_map(|v| IntPoly::from_i64s(&v))
}

fn arb_ratfunc() -> impl Strategy<Value = RatFunc> {
    (arb_intpoly(), arb_intpoly().prop_filter("nonzero", |p| !p.is_zero())).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn arb_rational() -> impl Strategy<Value = BigRational> {
    (-50i64..=50, 1i64..=30).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(a in arb_ratfunc(), b in arb_ratfunc(), c in arb_ratfunc()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() - a.clone(), RatFunc::from_int(0));
    }

    #[test]
    fn inverses(a in arb_ratfunc()) {
        match a.inverse() {
            Ok(inv) => prop_assert_eq!(a * inv, RatFunc::from_int(1)),
            Err(_) => prop_assert_eq!(a, RatFunc::from_int(0)),
        }
    }

    /// Reduced form is canonical: equal values have equal representations.
    #[test]
    fn canonical_form(n in arb_intpoly(), d in arb_intpoly().prop_filter("nonzero", |p| !p.is_zero()), k in arb_intpoly().prop_filter("nonzero", |p| !p.is_zero())) {
        let a = RatFunc::new(n.clone(), d.clone()).unwrap();
        let b = RatFunc::new(n.mul(&k), d.mul(&k)).unwrap();
        prop_assert_eq!(a.numer(), b.numer());
        prop_assert_eq!(a.denom(), b.denom());
    }

    /// Evaluation is a ring homomorphism away from poles.
    #[test]
    fn evaluation_is_multiplicative(a in arb_ratfunc(), b in arb_ratfunc(), x in arb_rational()) {
        if let (Ok(va), Ok(vb)) = (a.evaluate_at(&x), b.evaluate_at(&x)) {
            prop_assert_eq!((a.clone() * b.clone()).evaluate_at(&x).unwrap(), &va * &vb);
            prop_assert_eq!((a + b).evaluate_at(&x).unwrap(), va + vb);
        }
    }

    #[test]
    fn rational_text_round_trip(x in arb_rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn gcd_divides(a in arb_intpoly(), b in arb_intpoly(), k in arb_intpoly()) {
        let (a, b) = (a.mul(&k), b.mul(&k));
        let g = a.gcd(&b);
        if !g.is_zero() {
            prop_assert!(a.div_exact(&g).is_some());
            prop_assert!(b.div_exact(&g).is_some());
            if !k.is_zero() {
                prop_assert!(g.div_exact(&k.primitive_part()).is_some());
            }
        }
    }
}
