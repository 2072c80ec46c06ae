//! Exact integer Laurent polynomials in `T` and bivariate polynomials in `(P, T)`.
//!
//! Coefficients are arbitrary precision and the coefficient maps never store
//! zeros, so structural equality is polynomial equality. There is no
//! division: callers that average over a group sum first and then use
//! [`LaurentPoly::div_exact`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Polynomial in `T` and `1/T` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The variable `T`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * T^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exp, c.into());
        p
    }

    /// Builds `Σ coeffs[k] T^k`.
    pub fn from_coeffs<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        Self::from_terms(coeffs.into_iter().enumerate().map(|(k, c)| (k as i64, c)))
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn has_nonneg_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Multiplies by `T^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `f(s T^e)` with `s = -1` when `negate`, else `+1`.
    pub fn substitute(&self, e: u32, negate: bool) -> Result<Self> {
        if e == 0 {
            return Err(Error::invalid("substitution exponent must be at least 1"));
        }
        let e = i64::from(e);
        Ok(LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, c)| {
                    let c = if negate && k.is_odd() { -c } else { c.clone() };
                    (k * e, c)
                })
                .collect(),
        })
    }

    /// `T^d f(1/T)`: the exponent `k` goes to `d - k`.
    pub fn dual(&self, d: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(k, c)| (d - k, c.clone())).collect(),
        }
    }

    /// `f(-T)`.
    pub fn negate_var(&self) -> Self {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, c)| (*k, if k.is_odd() { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Value at `T = 1`.
    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Value at `T = -1`.
    pub fn value_at_minus_one(&self) -> BigInt {
        self.negate_var().value_at_one()
    }

    /// Divides every coefficient by `d`, or returns `None` if some
    /// coefficient is not a multiple of `d`.
    pub fn div_exact(&self, d: &BigInt) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let mut coeffs = BTreeMap::new();
        for (e, c) in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            coeffs.insert(*e, q);
        }
        Some(LaurentPoly { coeffs })
    }
}

/// `∏_{i=0}^{n-1} (f - i g)`; the empty product is `1`.
///
/// With `g = 1` this is the falling factorial of `f`; with `g = -T` it is the
/// product `∏ (f + i T)` that builds ordered configuration spaces.
pub fn falling_product(f: &LaurentPoly, g: &LaurentPoly, n: u32) -> LaurentPoly {
    (0..n).fold(LaurentPoly::one(), |acc, i| {
        let factor = f - &g.scale(&BigInt::from(i));
        &acc * &factor
    })
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(BigInt, Option<String>)> = self
            .terms()
            .rev()
            .map(|(e, c)| {
                let var = match e {
                    0 => None,
                    1 => Some("T".to_string()),
                    _ => Some(format!("T^{e}")),
                };
                (c.clone(), var)
            })
            .collect();
        write_terms(f, &terms)
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(BigInt, Option<String>)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (idx, (c, var)) in terms.iter().enumerate() {
        let mag = c.abs();
        if idx == 0 {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        match var {
            None => write!(f, "{mag}")?,
            Some(v) if mag.is_one() => write!(f, "{v}")?,
            Some(v) => write!(f, "{mag}{v}")?,
        }
    }
    Ok(())
}

impl<'a> Add<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl<'a> AddAssign<&'a LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &'a LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self += &rhs;
    }
}

impl<'a> SubAssign<&'a LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &'a LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, -c);
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl<'a> Mul<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

/// Polynomial in two commuting variables `P` and `T` with nonnegative
/// exponents, keyed by `(P-exponent, T-exponent)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `c * P^p * T^t`.
    pub fn monomial(c: impl Into<BigInt>, p: u32, t: u32) -> Self {
        let mut out = BiPoly::zero();
        out.add_term((p, t), c.into());
        out
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = ((u32, u32), C)>) -> Self {
        let mut out = BiPoly::zero();
        for (k, c) in terms {
            out.add_term(k, c.into());
        }
        out
    }

    fn add_term(&mut self, key: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(key).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, p: u32, t: u32) -> BigInt {
        self.coeffs.get(&(p, t)).cloned().unwrap_or_default()
    }

    /// Nonzero terms as `((p, t), coefficient)`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = ((u32, u32), &BigInt)> + '_ {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    /// True when every monomial has total degree `deg`.
    pub fn is_homogeneous_of(&self, deg: u32) -> bool {
        self.coeffs.keys().all(|(p, t)| p + t == deg)
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        BiPoly::from_terms(self.coeffs.iter().map(|(k, c)| (*k, c * s)))
    }

    /// Multiplies by `T^k`.
    pub fn shift_t(&self, k: u32) -> Self {
        BiPoly::from_terms(self.coeffs.iter().map(|((p, t), c)| ((*p, t + k), c.clone())))
    }

    /// Substitutes `P := p` and returns the resulting polynomial in `T`.
    pub fn eval_p(&self, p: &LaurentPoly) -> LaurentPoly {
        let mut powers: Vec<LaurentPoly> = vec![LaurentPoly::one()];
        let mut out = LaurentPoly::zero();
        for ((pe, te), c) in &self.coeffs {
            while powers.len() <= *pe as usize {
                let next = powers.last().expect("nonempty") * p;
                powers.push(next);
            }
            out += powers[*pe as usize].shift(i64::from(*te)).scale(c);
        }
        out
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // highest power of P first
        let terms: Vec<(BigInt, Option<String>)> = self
            .coeffs
            .iter()
            .rev()
            .map(|((p, t), c)| {
                let mut var = String::new();
                match p {
                    0 => {}
                    1 => var.push('P'),
                    _ => var.push_str(&format!("P^{p}")),
                }
                match t {
                    0 => {}
                    1 => var.push('T'),
                    _ => var.push_str(&format!("T^{t}")),
                }
                (c.clone(), (!var.is_empty()).then_some(var))
            })
            .collect();
        write_terms(f, &terms)
    }
}

impl<'a> Add<&'a BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &'a BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &'a BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(*k, -c);
        }
        out
    }
}

impl<'a> Mul<&'a BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &'a BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((pa, ta), ca) in &self.coeffs {
            for ((pb, tb), cb) in &rhs.coeffs {
                out.add_term((pa + pb, ta + tb), ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&lp(&[(2, 1)]) * &lp(&[(1, 1)]), lp(&[(3, 1)]));
        assert_eq!(&lp(&[(2, 1), (1, 1)]) + &lp(&[(2, 1), (1, -1)]), lp(&[(2, 2)]));
        assert_eq!(
            &lp(&[(2, 1), (1, 1)]) * &lp(&[(2, 1), (1, 2)]),
            lp(&[(4, 1), (3, 3), (2, 2)])
        );
        assert!((&lp(&[(3, 5)]) - &lp(&[(3, 5)])).is_zero());
    }

    #[test]
    fn substitute_examples() {
        let f = lp(&[(2, 1), (1, 1)]);
        assert_eq!(f.substitute(2, false).unwrap(), lp(&[(4, 1), (2, 1)]));
        assert_eq!(f.substitute(1, true).unwrap(), lp(&[(2, 1), (1, -1)]));
        assert_eq!(lp(&[(3, 1)]).substitute(3, true).unwrap(), lp(&[(9, -1)]));
        assert!(matches!(f.substitute(0, false), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn falling_product_examples() {
        let t2 = lp(&[(2, 1)]);
        let minus_t = lp(&[(1, -1)]);
        assert_eq!(
            falling_product(&t2, &minus_t, 3),
            lp(&[(6, 1), (5, 3), (4, 2)])
        );
        assert_eq!(
            falling_product(&LaurentPoly::constant(3), &LaurentPoly::one(), 3),
            LaurentPoly::constant(6)
        );
        assert_eq!(falling_product(&t2, &minus_t, 0), LaurentPoly::one());
    }

    #[test]
    fn dual_and_negation() {
        assert_eq!(
            lp(&[(6, 1), (5, 3), (4, 2)]).dual(6),
            lp(&[(0, 1), (1, 3), (2, 2)])
        );
        assert_eq!(LaurentPoly::one().dual(0), LaurentPoly::one());
        assert_eq!(lp(&[(4, 7)]).dual(8), lp(&[(4, 7)]));
        assert_eq!(lp(&[(2, 1), (1, 1)]).negate_var(), lp(&[(2, 1), (1, -1)]));
        assert_eq!(
            lp(&[(6, 1), (5, 3), (4, 2)]).negate_var(),
            lp(&[(6, 1), (5, -3), (4, 2)])
        );
    }

    #[test]
    fn eval_p_examples() {
        let t2 = lp(&[(2, 1)]);
        assert_eq!(BiPoly::monomial(1, 2, 0).eval_p(&t2), lp(&[(4, 1)]));
        let q = BiPoly::from_terms([((2, 0), 31), ((1, 1), 30)]);
        assert_eq!(q.eval_p(&t2), lp(&[(4, 31), (3, 30)]));
        let p = lp(&[(1, 2), (2, 1), (-1, 3)]);
        assert_eq!(BiPoly::monomial(1, 5, 0).eval_p(&p), p.pow(5));
    }

    #[test]
    fn exact_division() {
        let f = lp(&[(0, 6), (3, -12)]);
        assert_eq!(f.div_exact(&BigInt::from(6)), Some(lp(&[(0, 1), (3, -2)])));
        assert_eq!(f.div_exact(&BigInt::from(5)), None);
    }

    #[test]
    fn display() {
        assert_eq!(lp(&[(6, 1), (5, -3), (4, 2)]).to_string(), "T^6 - 3T^5 + 2T^4");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(lp(&[(0, -1), (-2, 4)]).to_string(), "-1 + 4T^-2");
        let q = BiPoly::from_terms([((3, 0), 90), ((2, 1), 239), ((1, 2), 150)]);
        assert_eq!(q.to_string(), "90P^3 + 239P^2T + 150PT^2");
    }
}
