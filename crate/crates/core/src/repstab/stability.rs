use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::charseries::{char_fm_series, induce_i, ClassSeries};
use crate::combinat::{class_size, factorial, CycleType};
use crate::confspace::SpaceSpec;
use crate::error::{Error, Result};
use crate::limits::Limits;

use super::decompose::{bm_series, decompose, degree_character};
use super::mn::irrep_dimension;

/// Multiplicities `c(λ)_m` of the irreducibles `V(λ)_m` in one cohomological
/// degree, for each `m` of a range. Rows are indexed by the core `λ`; a
/// missing row is identically zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub degree: u32,
    pub ms: Vec<usize>,
    pub rows: BTreeMap<Vec<usize>, Vec<u64>>,
    /// Total dimension in this degree for each `m`.
    pub betti: Vec<BigInt>,
}

impl MultiplicityTable {
    /// Smallest `m` in the range from which every row is nondecreasing.
    pub fn monotone_onset(&self) -> Option<usize> {
        self.onset(|a, b| a <= b)
    }

    /// Smallest `m` in the range from which every row is constant.
    pub fn constant_onset(&self) -> Option<usize> {
        self.onset(|a, b| a == b)
    }

    fn onset(&self, ok: impl Fn(u64, u64) -> bool) -> Option<usize> {
        let n = self.ms.len();
        if n == 0 {
            return None;
        }
        // first index from which all consecutive pairs satisfy `ok`
        let mut start = n - 1;
        while start > 0 && self.rows.values().all(|r| ok(r[start - 1], r[start])) {
            start -= 1;
        }
        Some(self.ms[start])
    }

    /// Whether every row satisfies `ok` on consecutive entries with both
    /// `m` values at least `from`. Vacuously true when fewer than two such
    /// columns exist.
    fn holds_from(&self, from: usize, ok: impl Fn(u64, u64) -> bool) -> bool {
        let idx: Vec<usize> = (0..self.ms.len()).filter(|k| self.ms[*k] >= from).collect();
        idx.windows(2)
            .all(|w| self.rows.values().all(|r| ok(r[w[0]], r[w[1]])))
    }

    pub fn monotone_from(&self, from: usize) -> bool {
        self.holds_from(from, |a, b| a <= b)
    }

    pub fn constant_from(&self, from: usize) -> bool {
        self.holds_from(from, |a, b| a == b)
    }
}

/// An integer sequence agrees with a polynomial of `degree` from `start` on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Polynomiality {
    pub start: usize,
    pub degree: usize,
}

/// Finds the earliest `start` (and the least `degree` there) such that the
/// `(degree + 1)`-th finite differences of `values[start..]` all vanish, with
/// at least `window` of them checked.
pub fn detect_polynomiality(ms: &[usize], values: &[BigInt], window: usize) -> Option<Polynomiality> {
    let window = window.max(1);
    for s in 0..values.len() {
        let tail = &values[s..];
        let mut diff: Vec<BigInt> = tail.to_vec();
        for degree in 0.. {
            diff = diff.windows(2).map(|w| &w[1] - &w[0]).collect();
            if diff.len() < window {
                break;
            }
            if diff.iter().all(Zero::is_zero) {
                return Some(Polynomiality { start: ms[s], degree });
            }
        }
    }
    None
}

/// Stability diagnostics for `H_BM^i(Δ_{m-a} X^m)` over a range of `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub space: String,
    pub degree: u32,
    pub a: usize,
    pub table: MultiplicityTable,
    /// `i + a`.
    pub monotone_bound: usize,
    /// `4i + 4a` for surfaces, `2i + 4a` in dimension ≥ 3.
    pub stable_bound: usize,
    pub monotone_beyond_bound: bool,
    pub constant_beyond_bound: bool,
    pub observed_monotone_onset: Option<usize>,
    pub observed_constant_onset: Option<usize>,
    pub betti_polynomial: Option<Polynomiality>,
}

impl StabilityReport {
    pub fn consistent(&self) -> bool {
        self.monotone_beyond_bound && self.constant_beyond_bound
    }
}

/// BM character series of the open stratum `Δ_{m-a} X^m` on `S_m`: the
/// conversion happens on `S_{m-a}` (where the stratum is `F_{m-a}(X)`, a
/// manifold of dimension `(m-a) d`) before inducing up.
pub fn bm_stratum_series(x: &SpaceSpec, m: usize, a: usize, limits: &Limits) -> Result<ClassSeries> {
    if a > m {
        return Err(Error::invalid(format!("need a ≤ m, got a = {a}, m = {m}")));
    }
    if m > 0 && a == m {
        return Ok(ClassSeries::zero(m));
    }
    let fm = char_fm_series(x, m - a, limits)?;
    let bm = bm_series(&fm, x.dim);
    if a == 0 {
        Ok(bm)
    } else {
        induce_i(&bm, m, limits)
    }
}

fn stability_hypotheses(x: &SpaceSpec) -> Result<()> {
    x.require_i_acyclic()?;
    x.require_orientable()?;
    x.require_connected()?;
    if x.dim < 2 {
        return Err(Error::Hypothesis {
            space: x.name.clone(),
            flag: "of dimension at least 2",
        });
    }
    Ok(())
}

/// Builds the multiplicity table of `H_BM^i(Δ_{m-a} X^m)` for `m` in `range`
/// and compares it with the monotonicity and stability bounds. `window` is
/// the number of redundant finite differences required for polynomiality.
pub fn stability_report(
    x: &SpaceSpec,
    i: u32,
    a: usize,
    range: RangeInclusive<usize>,
    window: usize,
    limits: &Limits,
) -> Result<StabilityReport> {
    stability_hypotheses(x)?;
    let (m0, m1) = (*range.start(), *range.end());
    if m0 > m1 || m0 < a {
        return Err(Error::invalid(format!("bad range {m0}..{m1} for a = {a}")));
    }
    let ms: Vec<usize> = range.collect();
    let mut per_m: Vec<BTreeMap<Vec<usize>, u64>> = Vec::with_capacity(ms.len());
    let mut betti = Vec::with_capacity(ms.len());
    for &m in &ms {
        let series = bm_stratum_series(x, m, a, limits)?;
        let dec = decompose(&series, i64::from(i), limits)?;
        let b = degree_character(&series, i64::from(i))
            .remove(&CycleType::identity(m))
            .unwrap_or_default();
        let dim: BigInt = dec
            .iter()
            .map(|(p, n)| irrep_dimension(&p.padded()) * BigInt::from(*n))
            .sum();
        if dim != b {
            return Err(Error::consistency(format!(
                "m = {m}: irreducible dimensions add to {dim}, Betti number is {b}"
            )));
        }
        per_m.push(dec.into_iter().map(|(p, n)| (p.core().to_vec(), n)).collect());
        betti.push(b);
    }
    let mut rows: BTreeMap<Vec<usize>, Vec<u64>> = BTreeMap::new();
    for (k, dec) in per_m.iter().enumerate() {
        for (core, n) in dec {
            rows.entry(core.clone()).or_insert_with(|| vec![0; ms.len()])[k] = *n;
        }
    }
    let table = MultiplicityTable {
        degree: i,
        ms: ms.clone(),
        rows,
        betti,
    };
    let i_us = i as usize;
    let monotone_bound = i_us + a;
    let stable_bound = if x.dim == 2 { 4 * i_us + 4 * a } else { 2 * i_us + 4 * a };
    Ok(StabilityReport {
        space: x.name.clone(),
        degree: i,
        a,
        monotone_beyond_bound: table.monotone_from(monotone_bound),
        constant_beyond_bound: table.constant_from(stable_bound),
        observed_monotone_onset: table.monotone_onset(),
        observed_constant_onset: table.constant_onset(),
        betti_polynomial: detect_polynomiality(&ms, &table.betti, window),
        monotone_bound,
        stable_bound,
        table,
    })
}

/// Betti numbers `dim H_BM^i(BF_m(X))` over a range of `m`, compared with the
/// claim that they are constant for `m ≥ i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfConstancy {
    pub space: String,
    pub degree: u32,
    pub values: Vec<(usize, BigInt)>,
    /// `max(i, first m of the range)`.
    pub claimed_from: usize,
    pub constant_from_claim: bool,
    /// Smallest `m` of the range from which the values are constant.
    pub observed_onset: usize,
    pub stable_value: BigInt,
}

/// `dim H_BM^i(BF_m(X))`: the `S_m`-average of the BM character of `F_m(X)`.
pub fn betti_bm_bf(x: &SpaceSpec, m: usize, i: u32, limits: &Limits) -> Result<BigInt> {
    x.require_orientable()?;
    let bm = bm_series(&char_fm_series(x, m, limits)?, x.dim);
    let mut sum = BigInt::zero();
    for (c, v) in bm.iter() {
        sum += class_size(c) * v.coeff(i64::from(i));
    }
    let (q, r) = sum.div_rem(&factorial(m));
    if !r.is_zero() {
        return Err(Error::consistency(format!("BF_{m}: average {sum}/{m}! is not an integer")));
    }
    Ok(if i % 2 == 1 { -q } else { q })
}

/// Checks constancy of `dim H_BM^i(BF_m(X))` for `m ≥ i` on `range`. Needs
/// `X` i-acyclic and orientable with `dim H_c^{top}(X) ≤ 1`.
pub fn bf_constancy(x: &SpaceSpec, i: u32, range: RangeInclusive<usize>, limits: &Limits) -> Result<BfConstancy> {
    x.require_i_acyclic()?;
    x.require_orientable()?;
    if x.pc.coeff(i64::from(x.dim)) > BigInt::one() {
        return Err(Error::Hypothesis {
            space: x.name.clone(),
            flag: "of top compactly supported Betti number at most 1",
        });
    }
    let (m0, m1) = (*range.start(), *range.end());
    if m0 == 0 || m0 > m1 {
        return Err(Error::invalid(format!("bad range {m0}..{m1}")));
    }
    let values: Vec<(usize, BigInt)> = range
        .map(|m| Ok((m, betti_bm_bf(x, m, i, limits)?)))
        .collect::<Result<_>>()?;
    let claimed_from = (i as usize).max(m0);
    let stable_value = values.last().expect("nonempty range").1.clone();
    let constant_from_claim = values
        .iter()
        .filter(|(m, _)| *m >= claimed_from)
        .all(|(_, v)| *v == stable_value);
    let observed_onset = values
        .iter()
        .rev()
        .take_while(|(_, v)| *v == stable_value)
        .last()
        .map(|(m, _)| *m)
        .expect("last value equals itself");
    Ok(BfConstancy {
        space: x.name.clone(),
        degree: i,
        values,
        claimed_from,
        constant_from_claim,
        observed_onset,
        stable_value,
    })
}
