use confcohom::combinat::{binomial, factorial};
use confcohom::confspace::{
    betti_bm, euler_char_fm, fixtures, poincare_delta, poincare_fm, poincare_ordinary, universal_poly, SpaceSpec,
};
use confcohom::selftest::universal_table_m6;
use confcohom::{Error, LaurentPoly};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().copied())
}

#[test]
fn universal_table_for_six_points() {
    for (l, expected) in (1..=6).zip(universal_table_m6()) {
        assert_eq!(universal_poly(l, 6, true).unwrap(), expected, "l = {l}");
    }
    assert_eq!(
        universal_poly(4, 6, true).unwrap().to_string(),
        "65P^4 + 300P^3T + 476P^2T^2 + 240PT^3"
    );
}

#[test]
fn universal_polynomials_evaluate_to_delta() {
    for x in fixtures::i_acyclic() {
        for m in 0..=8 {
            for l in 0..=m {
                for closed in [false, true] {
                    let q = universal_poly(l, m, closed).unwrap();
                    assert_eq!(
                        q.eval_p(&x.pc),
                        poincare_delta(&x, l, m, closed).unwrap(),
                        "{} l = {l} m = {m} closed = {closed}",
                        x.name
                    );
                }
            }
        }
    }
}

#[test]
fn fm_examples() {
    let c = fixtures::c();
    assert_eq!(poincare_fm(&c, 3).unwrap(), lp(&[(4, 2), (5, 3), (6, 1)]));
    assert_eq!(poincare_fm(&c, 0).unwrap(), LaurentPoly::one());
    assert_eq!(poincare_ordinary(&c, 3).unwrap(), lp(&[(0, 1), (1, 3), (2, 2)]));
}

#[test]
fn fm_recurrence_and_positivity() {
    for x in fixtures::i_acyclic() {
        for m in 0..=9u32 {
            let next = &poincare_fm(&x, m).unwrap() * &(&x.pc + &LaurentPoly::monomial(m, 1));
            assert_eq!(poincare_fm(&x, m + 1).unwrap(), next);
            for l in 0..=m {
                for closed in [false, true] {
                    assert!(poincare_delta(&x, l, m, closed).unwrap().has_nonneg_coeffs());
                }
            }
        }
    }
}

#[test]
fn closed_diagonal_is_the_power() {
    for x in fixtures::i_acyclic() {
        for m in 0..=7u32 {
            assert_eq!(poincare_delta(&x, m, m, true).unwrap(), x.pc.pow(m));
        }
    }
}

#[test]
fn euler_additivity() {
    for x in fixtures::i_acyclic() {
        for m in 0..=8u32 {
            let chi = x.euler_char();
            let closed = poincare_delta(&x, m, m, true).unwrap().value_at_minus_one();
            assert_eq!(closed, chi.pow(m));
            // the strata Δ_l X^m partition X^m
            let strata: BigInt = (0..=m)
                .map(|l| poincare_delta(&x, l, m, false).unwrap().value_at_minus_one())
                .sum();
            assert_eq!(strata, chi.pow(m));
            assert_eq!(poincare_fm(&x, m).unwrap().value_at_minus_one(), euler_char_fm(&x, m));
        }
    }
}

// Σ_m χ_c(F_m) t^m / m! = (1 + t)^χ: the coefficients are χ choose m, read as
// a generalized binomial coefficient
#[test]
fn euler_generating_series() {
    let mut spaces = fixtures::i_acyclic();
    spaces.push(fixtures::klein_punctured());
    for x in spaces {
        let chi = x.euler_char();
        for m in 0..=10u32 {
            let lhs = euler_char_fm(&x, m);
            let mut gen_binom = BigInt::from(1);
            for i in 0..m {
                gen_binom *= &chi - BigInt::from(i);
            }
            assert_eq!(&gen_binom % factorial(m as usize), BigInt::zero());
            assert_eq!(lhs, gen_binom);
            if !chi.is_negative() {
                let c: usize = chi.clone().try_into().unwrap();
                assert_eq!(lhs, binomial(c, m as usize) * factorial(m as usize));
            }
        }
    }
}

#[test]
fn arnold_betti_one() {
    let c = fixtures::c();
    for m in 1..=10u32 {
        assert_eq!(poincare_ordinary(&c, m).unwrap().coeff(1), BigInt::from(m * (m - 1) / 2));
        assert_eq!(betti_bm(&c, m, 1).unwrap(), BigInt::from(m * (m - 1) / 2));
    }
}

#[test]
fn gated_on_flags() {
    let k = fixtures::klein_punctured();
    assert!(matches!(poincare_fm(&k, 2), Err(Error::Hypothesis { flag: "i_acyclic", .. })));
    assert!(matches!(poincare_delta(&k, 1, 2, true), Err(Error::Hypothesis { .. })));
    assert!(matches!(poincare_ordinary(&k, 2), Err(Error::Hypothesis { .. })));
    assert!(universal_poly(3, 2, true).is_err());
    assert!(SpaceSpec::new("bad", lp(&[(0, 1)]), 1, true, true, true).is_err());
    assert!(SpaceSpec::new("bad", lp(&[(3, 1)]), 2, false, true, true).is_err());
    assert!(SpaceSpec::new("bad", lp(&[(1, -1)]), 2, false, true, true).is_err());
}

#[test]
fn removing_points_adds_degree_one_classes() {
    let c3 = fixtures::c().minus_points(3).unwrap();
    assert_eq!(c3.pc, fixtures::c_minus_a(3).pc);
    assert!(c3.connected);
    assert!(!fixtures::rd(1).minus_points(1).unwrap().connected);
}

proptest! {
    #[test]
    fn universal_polynomials_on_random_spaces(coeffs in prop::collection::vec(0i64..=4, 1..=4), m in 0u32..=6) {
        let mut c = vec![0];
        c.extend(coeffs);
        let dim = c.len() as u32 - 1;
        let x = SpaceSpec::new("random", LaurentPoly::from_coeffs(c), dim, true, true, true).unwrap();
        for l in 0..=m {
            for closed in [false, true] {
                prop_assert_eq!(
                    universal_poly(l, m, closed).unwrap().eval_p(&x.pc),
                    poincare_delta(&x, l, m, closed).unwrap()
                );
            }
        }
    }
}
