use confcohom::{falling_product, BiPoly, LaurentPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -20i64..=20), 0..6).prop_map(LaurentPoly::from_terms)
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(-9i64..=9, 0..5).prop_map(LaurentPoly::from_coeffs)
}

proptest! {
    #[test]
    fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn dual_is_an_involution(f in laurent(), d in -10i64..=10) {
        prop_assert_eq!(f.dual(d).dual(d), f);
    }

    #[test]
    fn falling_product_recurrence(f in laurent(), g in laurent(), n in 0u32..6) {
        let next = &falling_product(&f, &g, n) * &(&f - &g.scale(&BigInt::from(n)));
        prop_assert_eq!(falling_product(&f, &g, n + 1), next);
    }

    #[test]
    fn substitute_composes(f in laurent(), e1 in 1u32..4, e2 in 1u32..4) {
        let twice = f.substitute(e1, false).unwrap().substitute(e2, false).unwrap();
        prop_assert_eq!(twice, f.substitute(e1 * e2, false).unwrap());
    }

    #[test]
    fn substitute_is_a_ring_map(a in laurent(), b in laurent(), e in 1u32..4, neg in any::<bool>()) {
        let s = |p: &LaurentPoly| p.substitute(e, neg).unwrap();
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
    }

    #[test]
    fn evaluations(a in laurent(), b in laurent()) {
        prop_assert_eq!((&a * &b).value_at_one(), a.value_at_one() * b.value_at_one());
        prop_assert_eq!((&a * &b).value_at_minus_one(), a.value_at_minus_one() * b.value_at_minus_one());
        prop_assert_eq!(a.negate_var().negate_var(), a);
    }

    #[test]
    fn exact_division(a in laurent(), k in 1i64..50) {
        let k = BigInt::from(k);
        prop_assert_eq!(a.scale(&k).div_exact(&k), Some(a));
    }

    #[test]
    fn display_is_stable_under_clone(a in laurent()) {
        prop_assert_eq!(a.to_string(), a.clone().to_string());
    }

    #[test]
    fn bipoly_evaluation_is_a_ring_map(
        x in prop::collection::vec(((0u32..3, 0u32..3), -5i64..=5), 0..4),
        y in prop::collection::vec(((0u32..3, 0u32..3), -5i64..=5), 0..4),
        p in poly(),
    ) {
        let x = BiPoly::from_terms(x);
        let y = BiPoly::from_terms(y);
        prop_assert_eq!((&x * &y).eval_p(&p), &x.eval_p(&p) * &y.eval_p(&p));
        prop_assert_eq!((&x + &y).eval_p(&p), &x.eval_p(&p) + &y.eval_p(&p));
    }
}

#[test]
fn display_examples() {
    let f = LaurentPoly::from_terms([(6, 1), (5, -3), (4, 2)]);
    assert_eq!(f.to_string(), "T^6 - 3T^5 + 2T^4");
    assert_eq!(LaurentPoly::zero().to_string(), "0");
}

#[test]
fn falling_factorial_values() {
    // x(x-1)(x-2) at x = 5
    let x = LaurentPoly::constant(5);
    assert_eq!(falling_product(&x, &LaurentPoly::one(), 3), LaurentPoly::constant(60));
    assert_eq!(falling_product(&x, &LaurentPoly::one(), 0), LaurentPoly::one());
}
