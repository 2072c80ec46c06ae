//! Character series of `S_m` acting on compactly supported cohomology.
//!
//! A graded character is stored as `χ(α, T) = Σ_i (-1)^i tr(α | V^i) T^i`,
//! one polynomial per cycle type. With this sign convention the identity
//! entry of `H_c(Z)` is `P_c(Z)(-T)`, and `χ_c(X)(1, T^e) = P_c(X)(-T^e)`.
//!
//! Identities coming from a degree shift by `a` are written with `(-T)^a`;
//! those coming from an exact complex of length `a` use `T^a`.

mod fm;
mod induce;
mod macdonald;
mod quotient;

use std::collections::BTreeMap;
use std::ops::Index;

use num_bigint::BigInt;

use crate::combinat::{partitions, CycleType};
use crate::error::{Error, Result};
use crate::polyarith::LaurentPoly;

pub use fm::{
    char_delta_le, char_delta_oracle, char_fm, char_fm_series, mobius_block, reconstruct_char_fm,
};
pub use induce::{induce_i, induce_theta, induce_theta_by_chains};
pub use macdonald::{
    char_xm, char_xm_series, sym_product_generating_function, tensor_trace_oracle, GradedDims,
};
pub use quotient::{poincare_bf, poincare_cf, poincare_sym_product, quotient_poincare};

/// A class function on `S_m` with values in Laurent polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSeries {
    m: usize,
    values: BTreeMap<CycleType, LaurentPoly>,
}

impl ClassSeries {
    /// Evaluates `f` on every cycle type of `S_m`.
    pub fn from_fn(m: usize, mut f: impl FnMut(&CycleType) -> Result<LaurentPoly>) -> Result<Self> {
        let mut values = BTreeMap::new();
        for c in partitions(m, None) {
            let v = f(&c)?;
            values.insert(c, v);
        }
        Ok(ClassSeries { m, values })
    }

    /// From explicit values; every cycle type of `S_m` must be present.
    pub fn from_values(m: usize, values: BTreeMap<CycleType, LaurentPoly>) -> Result<Self> {
        let expected = partitions(m, None);
        if values.len() != expected.len() || expected.iter().any(|c| !values.contains_key(c)) {
            return Err(Error::invalid(format!(
                "a class series on S_{m} needs exactly the {} cycle types of {m}",
                expected.len()
            )));
        }
        Ok(ClassSeries { m, values })
    }

    pub fn zero(m: usize) -> Self {
        Self::from_fn(m, |_| Ok(LaurentPoly::zero())).expect("infallible")
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn get(&self, c: &CycleType) -> Option<&LaurentPoly> {
        self.values.get(c)
    }

    /// Value at the identity.
    pub fn at_identity(&self) -> &LaurentPoly {
        &self.values[&CycleType::identity(self.m)]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CycleType, &LaurentPoly)> {
        self.values.iter()
    }

    /// Pointwise `f ↦ f ⋅ p`.
    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        ClassSeries {
            m: self.m,
            values: self.values.iter().map(|(c, v)| (c.clone(), v * p)).collect(),
        }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        ClassSeries {
            m: self.m,
            values: self.values.iter().map(|(c, v)| (c.clone(), v.scale(s))).collect(),
        }
    }

    /// Applies `f` to every value.
    pub fn map(&self, mut f: impl FnMut(&CycleType, &LaurentPoly) -> LaurentPoly) -> Self {
        ClassSeries {
            m: self.m,
            values: self.values.iter().map(|(c, v)| (c.clone(), f(c, v))).collect(),
        }
    }

    pub fn add(&self, other: &ClassSeries) -> Self {
        assert_eq!(self.m, other.m, "adding class series of different degrees");
        self.map(|c, v| v + &other.values[c])
    }

    pub fn sub(&self, other: &ClassSeries) -> Self {
        assert_eq!(self.m, other.m, "subtracting class series of different degrees");
        self.map(|c, v| v - &other.values[c])
    }
}

impl Index<&CycleType> for ClassSeries {
    type Output = LaurentPoly;

    fn index(&self, c: &CycleType) -> &LaurentPoly {
        self.values
            .get(c)
            .unwrap_or_else(|| panic!("{c} is not a cycle type of S_{}", self.m))
    }
}
