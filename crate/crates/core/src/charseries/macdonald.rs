use crate::combinat::{CycleType, Permutation};
use crate::confspace::SpaceSpec;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::polyarith::LaurentPoly;

use super::ClassSeries;

/// Graded dimensions of a finite-dimensional graded vector space:
/// `dims[k]` is the dimension in degree `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDims {
    pub dims: Vec<u32>,
}

impl GradedDims {
    pub fn new(dims: Vec<u32>) -> Self {
        GradedDims { dims }
    }

    pub fn total(&self) -> u32 {
        self.dims.iter().sum()
    }

    /// `Σ dims[k] T^k`.
    pub fn poincare(&self) -> LaurentPoly {
        LaurentPoly::from_coeffs(self.dims.iter().copied())
    }
}

/// `χ_c(X)(1, T^e) = P_c(X)(-T^e)`.
pub(crate) fn chi_identity(pc: &LaurentPoly, e: usize) -> LaurentPoly {
    pc.substitute(e as u32, true).expect("e ≥ 1")
}

/// `χ_c(X^m)(α, T) = ∏_d χ_c(X)(1, T^d)^{x_d}` for `α` of type `lambda`.
///
/// This is the form without extra `d^{x_d}` factors; it agrees with
/// [`tensor_trace_oracle`].
pub fn char_xm(x: &SpaceSpec, lambda: &CycleType) -> LaurentPoly {
    char_xm_pc(&x.pc, lambda)
}

pub(crate) fn char_xm_pc(pc: &LaurentPoly, lambda: &CycleType) -> LaurentPoly {
    lambda
        .nonzero_mult()
        .fold(LaurentPoly::one(), |acc, (d, x)| &acc * &chi_identity(pc, d).pow(x as u32))
}

pub fn char_xm_series(x: &SpaceSpec, m: usize, limits: &Limits) -> Result<ClassSeries> {
    limits.check_class(m)?;
    ClassSeries::from_fn(m, |c| Ok(char_xm(x, c)))
}

/// Brute-force graded trace of a permutation of type `lambda` on the
/// `m`-fold tensor power of a graded space, with Koszul signs.
///
/// Only basis tensors that are constant along the cycles are fixed; each
/// contributes the sign `∏ (-1)^{deg_i deg_j}` over the pairs of factors the
/// permutation swaps.
pub fn tensor_trace_oracle(dims: &GradedDims, lambda: &CycleType) -> Result<LaurentPoly> {
    let m = lambda.size();
    if dims.total() > 4 || m > 6 {
        return Err(Error::CapExceeded {
            what: format!("tensor oracle with total dimension {} and m = {m}", dims.total()),
            limit: 6,
        });
    }
    let basis: Vec<i64> = dims
        .dims
        .iter()
        .enumerate()
        .flat_map(|(k, n)| std::iter::repeat(k as i64).take(*n as usize))
        .collect();
    let alpha: Permutation = lambda.representative();
    let b = basis.len();
    let mut out = LaurentPoly::zero();
    if m == 0 {
        return Ok(LaurentPoly::one());
    }
    if b == 0 {
        return Ok(out);
    }
    let mut idx = vec![0usize; m];
    loop {
        // α sends the factor in slot i to slot α(i)
        if (0..m).all(|i| idx[alpha.apply(i)] == idx[i]) {
            let deg: Vec<i64> = idx.iter().map(|j| basis[*j]).collect();
            let mut odd_swaps = 0i64;
            for i in 0..m {
                for j in (i + 1)..m {
                    if alpha.apply(i) > alpha.apply(j) {
                        odd_swaps += deg[i] * deg[j];
                    }
                }
            }
            let total: i64 = deg.iter().sum();
            let trace_sign = if odd_swaps % 2 == 0 { 1 } else { -1 };
            let series_sign = if total % 2 == 0 { 1 } else { -1 };
            out += LaurentPoly::monomial(trace_sign * series_sign, total);
        }
        // next multi-index
        let mut pos = 0;
        loop {
            if pos == m {
                return Ok(out);
            }
            idx[pos] += 1;
            if idx[pos] < b {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Coefficient of `t^m` in `∏_{k odd} (1 + x^k t)^{β_k} / ∏_{k even} (1 - x^k t)^{β_k}`
/// where `P_c(X) = Σ β_k x^k`: the compact-support Poincaré polynomial of the
/// symmetric product, computed without characters.
pub fn sym_product_generating_function(pc: &LaurentPoly, m: usize) -> Result<LaurentPoly> {
    if pc.min_exp().is_some_and(|e| e < 0) || !pc.has_nonneg_coeffs() {
        return Err(Error::invalid("generating function needs a polynomial with nonnegative coefficients"));
    }
    // truncated power series in t with polynomial coefficients in x
    let mut series = vec![LaurentPoly::zero(); m + 1];
    series[0] = LaurentPoly::one();
    for (k, beta) in pc.terms() {
        let beta: usize = beta
            .try_into()
            .map_err(|_| Error::invalid("Betti number too large for the generating function"))?;
        let mut factor = vec![LaurentPoly::zero(); m + 1];
        for (j, slot) in factor.iter_mut().enumerate() {
            // (1 + x^k t)^β for odd k, (1 - x^k t)^{-β} for even k
            let c = if k % 2 == 1 {
                crate::combinat::binomial(beta, j)
            } else if beta == 0 {
                num_bigint::BigInt::from(u8::from(j == 0))
            } else {
                crate::combinat::binomial(beta + j - 1, j)
            };
            *slot = LaurentPoly::monomial(c, k * j as i64);
        }
        let mut next = vec![LaurentPoly::zero(); m + 1];
        for (i, a) in series.iter().enumerate() {
            for (j, f) in factor.iter().enumerate().take(m + 1 - i) {
                next[i + j] += a * f;
            }
        }
        series = next;
    }
    Ok(series.swap_remove(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::confspace::fixtures;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn char_xm_examples() {
        let c = fixtures::c();
        for m in 1..=5 {
            assert_eq!(char_xm(&c, &CycleType::full_cycle(m)), lp(&[(2 * m as i64, 1)]));
            for x in fixtures::i_acyclic() {
                assert_eq!(
                    char_xm(&x, &CycleType::identity(m)),
                    chi_identity(&x.pc, 1).pow(m as u32)
                );
            }
        }
        assert_eq!(char_xm(&c, &CycleType::from_parts(&[2, 1]).unwrap()), lp(&[(6, 1)]));
    }

    #[test]
    fn tensor_oracle_examples() {
        let lam2 = CycleType::full_cycle(2);
        assert_eq!(
            tensor_trace_oracle(&GradedDims::new(vec![1]), &CycleType::full_cycle(4)).unwrap(),
            LaurentPoly::one()
        );
        assert_eq!(
            tensor_trace_oracle(&GradedDims::new(vec![0, 0, 1]), &lam2).unwrap(),
            lp(&[(4, 1)])
        );
        assert_eq!(
            tensor_trace_oracle(&GradedDims::new(vec![0, 1]), &lam2).unwrap(),
            lp(&[(2, -1)])
        );
        assert!(tensor_trace_oracle(&GradedDims::new(vec![5]), &lam2).is_err());
    }

    #[test]
    fn generating_function_examples() {
        assert_eq!(sym_product_generating_function(&lp(&[(2, 1)]), 2).unwrap(), lp(&[(4, 1)]));
        assert_eq!(sym_product_generating_function(&lp(&[(1, 1)]), 3).unwrap(), LaurentPoly::zero());
        // a point: Sym^m(pt) = pt
        assert_eq!(sym_product_generating_function(&LaurentPoly::one(), 5).unwrap(), LaurentPoly::one());
    }
}
