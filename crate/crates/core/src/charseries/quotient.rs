use num_bigint::BigInt;

use crate::combinat::{
    class_size, cyclic_group_classes, divisors, euler_phi, factorial, partitions, SubgroupClasses,
};
use crate::confspace::SpaceSpec;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::polyarith::LaurentPoly;

use super::fm::{char_fm_pc, mobius_block};
use super::macdonald::{char_xm_pc, sym_product_generating_function};
use super::ClassSeries;

/// Divides an integer combination of characters by the group order and
/// converts back from the `-T` convention to a Poincaré polynomial.
fn average(sum: LaurentPoly, order: &BigInt, what: &str) -> Result<LaurentPoly> {
    let avg = sum
        .div_exact(order)
        .ok_or_else(|| Error::consistency(format!("{what}: {sum} is not divisible by {order}")))?;
    let p = avg.negate_var();
    if !p.has_nonneg_coeffs() {
        return Err(Error::consistency(format!("{what}: {p} has a negative coefficient")));
    }
    Ok(p)
}

/// `P_c(Z/H)(T)` from the character series of `Z` and the class counts of
/// `H`: `P_c(Z/H)(-T) = (1/|H|) Σ_h χ_c(Z)(h, T)`.
pub fn quotient_poincare(series: &ClassSeries, subgroup: &SubgroupClasses) -> Result<LaurentPoly> {
    if subgroup.m != series.degree() {
        return Err(Error::invalid(format!(
            "subgroup of S_{} paired with a series on S_{}",
            subgroup.m,
            series.degree()
        )));
    }
    if subgroup.counts.values().sum::<u64>() != subgroup.order {
        return Err(Error::invalid("class counts do not add up to the subgroup order"));
    }
    let mut sum = LaurentPoly::zero();
    for (c, n) in &subgroup.counts {
        sum += series[c].scale(&BigInt::from(*n));
    }
    average(sum, &BigInt::from(subgroup.order), "quotient")
}

/// `P_c(CF_m(X))`, configurations modulo cyclic rotation:
/// `(1/m) Σ_{d | m} φ(d) ∏_{i < m/d} (B_d - i d T^d)` at `-T`.
pub fn poincare_cf(x: &SpaceSpec, m: usize) -> Result<LaurentPoly> {
    x.require_i_acyclic()?;
    if m == 0 {
        return Err(Error::invalid("CF_0 is not defined"));
    }
    let mut sum = LaurentPoly::zero();
    for d in divisors(m as u64)? {
        let d = d as usize;
        let b = mobius_block(&x.pc, d);
        let mut prod = LaurentPoly::one();
        for i in 0..m / d {
            prod = &prod * &(&b - &LaurentPoly::monomial((i * d) as i64, d as i64));
        }
        sum += prod.scale(&BigInt::from(euler_phi(d as u64)?));
    }
    average(sum, &BigInt::from(m), "CF_m")
}

/// `P_c(BF_m(X))`, unordered configurations: `(1/m!) Σ_λ h_λ χ_c(F_m(X))(λ)` at `-T`.
pub fn poincare_bf(x: &SpaceSpec, m: usize, limits: &Limits) -> Result<LaurentPoly> {
    x.require_i_acyclic()?;
    limits.check_class(m)?;
    let mut sum = LaurentPoly::zero();
    for c in partitions(m, None) {
        sum += char_fm_pc(&x.pc, &c).scale(&class_size(&c));
    }
    average(sum, &factorial(m), "BF_m")
}

/// `P_c` of the symmetric product `X^m / S_m` (`cyclic = false`) or the
/// cyclic product `X^m / C_m`. No hypothesis on `X` is needed. The symmetric
/// case is recomputed from the generating function and both routes must agree.
pub fn poincare_sym_product(x: &SpaceSpec, m: usize, cyclic: bool, limits: &Limits) -> Result<LaurentPoly> {
    if m == 0 {
        return Ok(LaurentPoly::one());
    }
    limits.check_class(m)?;
    if cyclic {
        let c = cyclic_group_classes(m)?;
        let mut sum = LaurentPoly::zero();
        for (t, n) in &c.counts {
            sum += char_xm_pc(&x.pc, t).scale(&BigInt::from(*n));
        }
        return average(sum, &BigInt::from(m), "cyclic product");
    }
    let mut sum = LaurentPoly::zero();
    for c in partitions(m, None) {
        sum += char_xm_pc(&x.pc, &c).scale(&class_size(&c));
    }
    let p = average(sum, &factorial(m), "symmetric product")?;
    let gf = sym_product_generating_function(&x.pc, m)?;
    if gf != p {
        return Err(Error::consistency(format!(
            "symmetric product: character average {p} differs from generating function {gf}"
        )));
    }
    Ok(p)
}
