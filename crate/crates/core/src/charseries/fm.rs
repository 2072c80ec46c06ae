use std::collections::HashMap;

use num_bigint::BigInt;

use crate::combinat::{divisors, fixed_partitions, mobius, CycleType, Permutation};
use crate::confspace::SpaceSpec;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::polyarith::LaurentPoly;

use super::induce::induce_theta;
use super::macdonald::{char_xm_series, chi_identity};
use super::ClassSeries;

/// `B_d(T) = Σ_{e | d} μ(d/e) T^{d-e} χ_c(X)(1, T^e)`: the contribution of a
/// single `d`-cycle, with the `1/(d T^d)` of the closed formula cleared.
pub fn mobius_block(pc: &LaurentPoly, d: usize) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for e in divisors(d as u64).expect("d ≥ 1") {
        let mu = mobius(d as u64 / e).expect("positive");
        if mu != 0 {
            let e = e as usize;
            out += chi_identity(pc, e).shift((d - e) as i64).scale(&BigInt::from(mu));
        }
    }
    out
}

pub(crate) fn char_fm_pc(pc: &LaurentPoly, lambda: &CycleType) -> LaurentPoly {
    let mut out = LaurentPoly::one();
    for (d, x) in lambda.nonzero_mult() {
        let b = mobius_block(pc, d);
        for i in 0..x {
            let factor = &b - &LaurentPoly::monomial((i * d) as i64, d as i64);
            out = &out * &factor;
        }
    }
    out
}

/// `χ_c(F_m(X))(α, T)` for `α` of type `lambda`:
/// `∏_d ∏_{i < x_d} (B_d(T) - i d T^d)` with `B_d` from [`mobius_block`].
pub fn char_fm(x: &SpaceSpec, lambda: &CycleType) -> Result<LaurentPoly> {
    x.require_i_acyclic()?;
    Ok(char_fm_pc(&x.pc, lambda))
}

pub fn char_fm_series(x: &SpaceSpec, m: usize, limits: &Limits) -> Result<ClassSeries> {
    x.require_i_acyclic()?;
    limits.check_class(m)?;
    ClassSeries::from_fn(m, |c| Ok(char_fm_pc(&x.pc, c)))
}

/// `χ_c(Δ_l X^m)(α, T)` by summing `χ_c(F_l)` over the `α`-stable `l`-block
/// partitions, evaluated at the induced block permutation.
pub fn char_delta_oracle(x: &SpaceSpec, l: usize, alpha: &Permutation, limits: &Limits) -> Result<LaurentPoly> {
    x.require_i_acyclic()?;
    let m = alpha.size();
    if l > m {
        return Err(Error::invalid(format!("need l ≤ m, got l = {l}, m = {m}")));
    }
    if l == 0 {
        return Ok(if m == 0 { LaurentPoly::one() } else { LaurentPoly::zero() });
    }
    let mut cache: HashMap<CycleType, LaurentPoly> = HashMap::new();
    let mut out = LaurentPoly::zero();
    for (_, beta) in fixed_partitions(alpha, l, limits)? {
        let t = beta.cycle_type();
        let v = cache.entry(t).or_insert_with_key(|t| char_fm_pc(&x.pc, t));
        out += &*v;
    }
    Ok(out)
}

/// `χ_c(Δ_{≤l} X^m)(α, T) = Σ_{a<l} T^a χ_c(Δ_{l-a} X^m)(α, T)`.
pub fn char_delta_le(x: &SpaceSpec, l: usize, alpha: &Permutation, limits: &Limits) -> Result<LaurentPoly> {
    let m = alpha.size();
    if l > m {
        return Err(Error::invalid(format!("need l ≤ m, got l = {l}, m = {m}")));
    }
    if l == 0 {
        return char_delta_oracle(x, 0, alpha, limits);
    }
    let mut out = LaurentPoly::zero();
    for a in 0..l {
        out += char_delta_oracle(x, l - a, alpha, limits)?.shift(a as i64);
    }
    Ok(out)
}

/// `χ_c(F_m(X))` rebuilt from the characters of the powers `X^{m-a}`:
/// `Σ_{a<m} (-T)^a Θ_{m-a}^m(χ_c(X^{m-a}))`.
pub fn reconstruct_char_fm(x: &SpaceSpec, m: usize, limits: &Limits) -> Result<ClassSeries> {
    x.require_i_acyclic()?;
    if m == 0 {
        return ClassSeries::from_fn(0, |_| Ok(LaurentPoly::one()));
    }
    let mut out = ClassSeries::zero(m);
    for a in 0..m {
        let base = char_xm_series(x, m - a, limits)?;
        let term = induce_theta(&base, m, limits)?;
        let sign = if a % 2 == 0 { 1 } else { -1 };
        out = out.add(&term.mul_poly(&LaurentPoly::monomial(sign, a as i64)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charseries::induce::induce_i;
    use crate::combinat::partitions;
    use crate::confspace::{fixtures, poincare_fm};

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn char_fm_examples() {
        let c = fixtures::c();
        assert_eq!(char_fm(&c, &CycleType::full_cycle(3)).unwrap(), lp(&[(6, 1), (4, -1)]));
        assert_eq!(char_fm(&c, &CycleType::full_cycle(2)).unwrap(), lp(&[(4, 1), (3, -1)]));
        for x in fixtures::i_acyclic() {
            for m in 0..=6 {
                assert_eq!(
                    char_fm(&x, &CycleType::identity(m)).unwrap(),
                    poincare_fm(&x, m as u32).unwrap().negate_var()
                );
            }
        }
        assert!(matches!(
            char_fm(&fixtures::klein_punctured(), &CycleType::identity(2)),
            Err(Error::Hypothesis { .. })
        ));
    }

    #[test]
    fn delta_oracle_examples() {
        let lim = Limits::default();
        let c = fixtures::c();
        let swap = Permutation::parse_cycles(3, "(1 2)").unwrap();
        assert_eq!(char_delta_oracle(&c, 2, &swap, &lim).unwrap(), lp(&[(4, 1), (3, -1)]));
        for x in fixtures::i_acyclic() {
            for lambda in partitions(4, None) {
                let alpha = lambda.representative();
                assert_eq!(char_delta_oracle(&x, 4, &alpha, &lim).unwrap(), char_fm(&x, &lambda).unwrap());
                assert_eq!(char_delta_oracle(&x, 1, &alpha, &lim).unwrap(), chi_identity(&x.pc, 1));
                assert_eq!(char_delta_le(&x, 1, &alpha, &lim).unwrap(), chi_identity(&x.pc, 1));
            }
        }
    }

    #[test]
    fn delta_le_examples() {
        let lim = Limits::default();
        let c = fixtures::c();
        let cyc = Permutation::parse_cycles(3, "(1 2 3)").unwrap();
        assert_eq!(char_delta_le(&c, 3, &cyc, &lim).unwrap(), lp(&[(6, 1)]));
        for x in fixtures::i_acyclic() {
            for l in 1..=5u32 {
                let id = Permutation::identity(5);
                assert_eq!(
                    char_delta_le(&x, l as usize, &id, &lim).unwrap(),
                    crate::confspace::poincare_delta(&x, l, 5, true).unwrap().negate_var()
                );
            }
        }
    }

    #[test]
    fn reconstruction_examples() {
        let lim = Limits::default();
        let c = fixtures::c();
        let r1 = reconstruct_char_fm(&c, 1, &lim).unwrap();
        assert_eq!(r1.at_identity(), &chi_identity(&c.pc, 1));
        let r3 = reconstruct_char_fm(&c, 3, &lim).unwrap();
        assert_eq!(r3[&CycleType::full_cycle(3)], lp(&[(6, 1), (4, -1)]));
        assert_eq!(r3.at_identity(), &lp(&[(6, 1), (5, -3), (4, 2)]));
    }

    #[test]
    fn induction_matches_open_strata() {
        let lim = Limits::default();
        let x = fixtures::cstar();
        let f = char_fm_series(&x, 2, &lim).unwrap();
        let i = induce_i(&f, 4, &lim).unwrap();
        for (c, v) in i.iter() {
            assert_eq!(v, &char_delta_oracle(&x, 2, &c.representative(), &lim).unwrap());
        }
    }
}
