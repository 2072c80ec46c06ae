use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::perm::Permutation;
use super::stirling::factorial;
use crate::error::{Error, Result};

/// A partition of `m` stored as cycle-length multiplicities `(x_1, …, x_m)`.
///
/// The same value labels a conjugacy class of `S_m` (the cycle type) and a
/// Young diagram (rows given by [`CycleType::parts`]).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycleType {
    m: usize,
    // mult[d - 1] = x_d
    mult: Vec<usize>,
}

impl CycleType {
    /// Builds a cycle type from `(x_1, …, x_k)`; trailing entries may be omitted.
    pub fn from_mult(mult: &[usize]) -> Self {
        let m = mult.iter().enumerate().map(|(i, x)| (i + 1) * x).sum();
        let mut v = vec![0; m];
        for (i, x) in mult.iter().enumerate() {
            if *x > 0 {
                v[i] = *x;
            }
        }
        CycleType { m, mult: v }
    }

    /// Builds a cycle type from its parts in any order. Zero parts are rejected.
    pub fn from_parts(parts: &[usize]) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("partition parts must be positive"));
        }
        let m = parts.iter().sum();
        let mut mult = vec![0; m];
        for p in parts {
            mult[p - 1] += 1;
        }
        Ok(CycleType { m, mult })
    }

    /// The type `(1^m)` of the identity.
    pub fn identity(m: usize) -> Self {
        let mut mult = vec![0; m];
        if m > 0 {
            mult[0] = m;
        }
        CycleType { m, mult }
    }

    /// The type `(m)` of a full cycle.
    pub fn full_cycle(m: usize) -> Self {
        let mut mult = vec![0; m];
        if m > 0 {
            mult[m - 1] = 1;
        }
        CycleType { m, mult }
    }

    pub fn size(&self) -> usize {
        self.m
    }

    /// `x_d`, the number of cycles of length `d`.
    pub fn x(&self, d: usize) -> usize {
        if d == 0 || d > self.m {
            0
        } else {
            self.mult[d - 1]
        }
    }

    /// Lengths `d` with `x_d > 0`, increasing, paired with `x_d`.
    pub fn nonzero_mult(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.mult
            .iter()
            .enumerate()
            .filter(|(_, x)| **x > 0)
            .map(|(i, x)| (i + 1, *x))
    }

    /// Parts in decreasing order.
    pub fn parts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        for (d, x) in self.nonzero_mult().collect::<Vec<_>>().into_iter().rev() {
            out.extend(std::iter::repeat(d).take(x));
        }
        out
    }

    /// Number of parts (cycles).
    pub fn len(&self) -> usize {
        self.mult.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    pub fn is_identity(&self) -> bool {
        self.x(1) == self.m
    }

    /// `true` when the permutation sign `(-1)^{Σ (d-1) x_d}` is `-1`.
    pub fn is_odd(&self) -> bool {
        self.nonzero_mult().map(|(d, x)| (d - 1) * x).sum::<usize>() % 2 == 1
    }

    pub fn sign(&self) -> i64 {
        if self.is_odd() {
            -1
        } else {
            1
        }
    }

    /// Conjugate partition (transposed Young diagram).
    pub fn conjugate(&self) -> CycleType {
        let parts = self.parts();
        let first = parts.first().copied().unwrap_or(0);
        let conj: Vec<usize> = (1..=first)
            .map(|k| parts.iter().filter(|p| **p >= k).count())
            .collect();
        CycleType::from_parts(&conj).expect("conjugate parts are positive")
    }

    /// A permutation of this type built from consecutive cycles, longest first.
    pub fn representative(&self) -> Permutation {
        let mut images = vec![0; self.m];
        let mut start = 0;
        for d in self.parts() {
            for k in 0..d {
                images[start + k] = start + (k + 1) % d;
            }
            start += d;
        }
        Permutation::from_zero_based(images).expect("consecutive cycles form a bijection")
    }
}

impl Ord for CycleType {
    fn cmp(&self, other: &Self) -> Ordering {
        self.m
            .cmp(&other.m)
            .then_with(|| other.parts().cmp(&self.parts()))
    }
}

impl PartialOrd for CycleType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType({self})")
    }
}

/// Exponent notation `1^a,2^b,…`; the empty partition prints as `()`.
impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 0 {
            return write!(f, "()");
        }
        let items: Vec<String> = self.nonzero_mult().map(|(d, x)| format!("{d}^{x}")).collect();
        write!(f, "{}", items.join(","))
    }
}

/// Parses `1^a,2^b,…` (an omitted exponent means 1) or `()` for the empty
/// partition. Repeated lengths add up.
impl FromStr for CycleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "()" || s.is_empty() {
            return Ok(CycleType::identity(0));
        }
        let mut parts = Vec::new();
        for item in s.split(',') {
            let item = item.trim();
            let (d, x) = match item.split_once('^') {
                Some((d, x)) => (d.trim(), x.trim()),
                None => (item, "1"),
            };
            let d: usize = d
                .parse()
                .map_err(|_| Error::invalid(format!("bad cycle length {d:?} in {s:?}")))?;
            let x: usize = x
                .parse()
                .map_err(|_| Error::invalid(format!("bad multiplicity {x:?} in {s:?}")))?;
            if d == 0 {
                return Err(Error::invalid(format!("cycle length 0 in {s:?}")));
            }
            parts.extend(std::iter::repeat(d).take(x));
        }
        CycleType::from_parts(&parts)
    }
}

/// All partitions of `m`, optionally only those with exactly `len` parts.
///
/// Order is reverse lexicographic on the decreasing parts, so `(m)` comes
/// first and `(1^m)` last.
pub fn partitions(m: usize, len: Option<usize>) -> Vec<CycleType> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, len: Option<usize>, out: &mut Vec<CycleType>) {
        if rest == 0 {
            if len.map_or(true, |l| l == cur.len()) {
                out.push(CycleType::from_parts(cur).expect("positive parts"));
            }
            return;
        }
        if let Some(l) = len {
            // remaining slots must hold `rest` with parts ≤ max
            let slots = l.saturating_sub(cur.len());
            if slots == 0 || slots * max < rest {
                return;
            }
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, len, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), len, &mut out);
    out
}

/// `h_λ = m! / ∏_d (x_d! d^{x_d})`, the size of the conjugacy class.
pub fn class_size(lambda: &CycleType) -> BigInt {
    let mut denom = BigInt::from(1);
    for (d, x) in lambda.nonzero_mult() {
        denom *= factorial(x) * BigInt::from(d).pow(x as u32);
    }
    factorial(lambda.size()) / denom
}

/// `|centralizer| = m! / h_λ`.
pub fn centralizer_order(lambda: &CycleType) -> BigInt {
    let mut z = BigInt::from(1);
    for (d, x) in lambda.nonzero_mult() {
        z *= factorial(x) * BigInt::from(d).pow(x as u32);
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts_of(v: &[CycleType]) -> Vec<Vec<usize>> {
        v.iter().map(|c| c.parts()).collect()
    }

    #[test]
    fn partition_examples() {
        assert_eq!(parts_of(&partitions(3, None)), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(
            parts_of(&partitions(6, Some(2))),
            vec![vec![5, 1], vec![4, 2], vec![3, 3]]
        );
        assert_eq!(parts_of(&partitions(0, None)), vec![Vec::<usize>::new()]);
        let counts: Vec<usize> = (0..=12).map(|m| partitions(m, None).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(&CycleType::identity(3)), BigInt::from(1));
        assert_eq!(class_size(&CycleType::full_cycle(3)), BigInt::from(2));
        assert_eq!(class_size(&CycleType::from_parts(&[2, 1]).unwrap()), BigInt::from(3));
        for m in 0..=12 {
            let total: BigInt = partitions(m, None).iter().map(class_size).sum();
            assert_eq!(total, factorial(m), "m = {m}");
        }
    }

    #[test]
    fn parse_and_display() {
        let c: CycleType = "1^2,3".parse().unwrap();
        assert_eq!(c.parts(), vec![3, 1, 1]);
        assert_eq!(c.to_string(), "1^2,3^1");
        assert_eq!(c.to_string().parse::<CycleType>().unwrap(), c);
        assert!("0^2".parse::<CycleType>().is_err());
        assert!("a^2".parse::<CycleType>().is_err());
        assert_eq!("()".parse::<CycleType>().unwrap().size(), 0);
    }

    #[test]
    fn representative_has_its_type() {
        for m in 0..=8 {
            for c in partitions(m, None) {
                assert_eq!(c.representative().cycle_type(), c);
            }
        }
    }

    #[test]
    fn conjugate_is_involution() {
        for c in partitions(7, None) {
            assert_eq!(c.conjugate().conjugate(), c);
        }
        let c = CycleType::from_parts(&[3, 1]).unwrap();
        assert_eq!(c.conjugate().parts(), vec![2, 1, 1]);
    }
}
