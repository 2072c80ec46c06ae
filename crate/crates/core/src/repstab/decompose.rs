use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::charseries::ClassSeries;
use crate::combinat::{class_size, factorial, partitions, CycleType};
use crate::error::{Error, Result};
use crate::limits::Limits;

use super::mn::mn_character;

/// `λ[m] = (m - |λ|, λ_1, λ_2, …)`: a partition labelled by its shape below
/// the first row (the core `λ`) and its size `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PaddedPartition {
    core: Vec<usize>,
    m: usize,
}

impl PaddedPartition {
    /// Fails unless `core` is a partition (positive, decreasing) and
    /// `m ≥ |core| + core_1`.
    pub fn new(core: Vec<usize>, m: usize) -> Result<Self> {
        if core.contains(&0) || core.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!("{core:?} is not a partition")));
        }
        let weight: usize = core.iter().sum();
        let first = core.first().copied().unwrap_or(0);
        if m < weight + first {
            return Err(Error::invalid(format!(
                "{core:?}[{m}] is not a partition: need m ≥ {}",
                weight + first
            )));
        }
        Ok(PaddedPartition { core, m })
    }

    /// Splits a partition of `m` into its first row and core.
    pub fn from_partition(lambda: &CycleType) -> Self {
        let parts = lambda.parts();
        PaddedPartition {
            core: parts.get(1..).map(<[usize]>::to_vec).unwrap_or_default(),
            m: lambda.size(),
        }
    }

    pub fn core(&self) -> &[usize] {
        &self.core
    }

    pub fn size(&self) -> usize {
        self.m
    }

    /// The full partition `λ[m]`.
    pub fn padded(&self) -> CycleType {
        let weight: usize = self.core.iter().sum();
        let mut parts = vec![self.m - weight];
        parts.extend(&self.core);
        parts.retain(|p| *p > 0);
        CycleType::from_parts(&parts).expect("validated on construction")
    }
}

/// Smaller cores first, then reverse lexicographic, so `()` < `(1)` < `(2)` < `(1,1)`.
impl Ord for PaddedPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        let w = |c: &[usize]| c.iter().sum::<usize>();
        self.m
            .cmp(&other.m)
            .then_with(|| w(&self.core).cmp(&w(&other.core)))
            .then_with(|| other.core.cmp(&self.core))
    }
}

impl PartialOrd for PaddedPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Core in parentheses followed by `[m]`, e.g. `(2,1)[7]`.
impl fmt::Display for PaddedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", format_core(&self.core), self.m)
    }
}

pub fn format_core(core: &[usize]) -> String {
    let items: Vec<String> = core.iter().map(ToString::to_string).collect();
    format!("({})", items.join(","))
}

/// Character of the degree-`i` piece: `(-1)^i` times the coefficient of `T^i`.
pub fn degree_character(series: &ClassSeries, degree: i64) -> BTreeMap<CycleType, BigInt> {
    series
        .iter()
        .map(|(c, v)| {
            let coeff = v.coeff(degree);
            (c.clone(), if degree.is_odd() { -coeff } else { coeff })
        })
        .collect()
}

/// Irreducible multiplicities of the degree-`i` piece of a character series,
/// keyed by padded partition. Zero multiplicities are omitted.
pub fn decompose(series: &ClassSeries, degree: i64, limits: &Limits) -> Result<BTreeMap<PaddedPartition, u64>> {
    let m = series.degree();
    limits.check_class(m)?;
    let chi = degree_character(series, degree);
    let mut out = BTreeMap::new();
    if chi.values().all(Zero::is_zero) {
        return Ok(out);
    }
    let order = factorial(m);
    let classes = partitions(m, None);
    let weights: Vec<BigInt> = classes.iter().map(|c| class_size(c) * &chi[c]).collect();
    for mu in &classes {
        let mut acc = BigInt::zero();
        for (c, w) in classes.iter().zip(&weights) {
            if !w.is_zero() {
                acc += w * mn_character(mu, c)?;
            }
        }
        let (q, r) = acc.div_rem(&order);
        if !r.is_zero() || q.is_negative() {
            return Err(Error::consistency(format!(
                "degree {degree} of a series on S_{m} is not a character: multiplicity of {mu} is {acc}/{order}"
            )));
        }
        if !q.is_zero() {
            let n = q
                .to_u64()
                .ok_or_else(|| Error::consistency(format!("multiplicity {q} does not fit in u64")))?;
            out.insert(PaddedPartition::from_partition(mu), n);
        }
    }
    Ok(out)
}

/// Borel–Moore character series from the compact-support one for an oriented
/// `d`-dimensional `X`: `χ_BM(α, T) = sgn(α)^d (-T)^{m d} χ_c(α, 1/T)` on `S_m`
/// with `m` the degree of the series. Applying it twice is the identity.
pub fn bm_series(series: &ClassSeries, d: u32) -> ClassSeries {
    let md = series.degree() as i64 * i64::from(d);
    series.map(|c, v| {
        let flip = (md % 2 == 1) ^ (d % 2 == 1 && c.is_odd());
        let dual = v.dual(md);
        if flip {
            -dual
        } else {
            dual
        }
    })
}
