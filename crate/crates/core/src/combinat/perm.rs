use std::fmt;

use super::partition::CycleType;
use crate::error::{Error, Result};

/// A bijection of `{1, …, m}`, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (0..m).collect(),
        }
    }

    /// From 0-based images; fails unless `images` is a bijection of `0..m`.
    pub fn from_zero_based(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &i in &images {
            if i >= m || seen[i] {
                return Err(Error::invalid(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// From 1-based images `[α(1), …, α(m)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let zero: Option<Vec<usize>> = images.iter().map(|i| i.checked_sub(1)).collect();
        let zero = zero.ok_or_else(|| Error::invalid("permutation images are 1-based"))?;
        Self::from_zero_based(zero)
    }

    /// From disjoint cycles over `{1, …, m}`, e.g. `[[1, 2, 3], [4, 5]]`.
    pub fn from_cycles(m: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..m).collect();
        let mut touched = vec![false; m];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > m {
                    return Err(Error::invalid(format!("point {p} outside 1..={m}")));
                }
                if touched[p - 1] {
                    return Err(Error::invalid(format!("point {p} repeated in cycles")));
                }
                touched[p - 1] = true;
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)`; commas also separate
    /// points. The empty string and `()` give the identity.
    pub fn parse_cycles(m: usize, s: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::invalid(format!("malformed cycle notation {s:?}")))?;
            let points: std::result::Result<Vec<usize>, _> = inner
                .0
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(str::parse)
                .collect();
            let points = points.map_err(|_| Error::invalid(format!("bad point in {s:?}")))?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = inner.1.trim_start();
        }
        Self::from_cycles(m, &cycles)
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size(), "composing permutations of different degree");
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// Disjoint cycles (0-based), each starting at its least point, ordered
    /// by that point. Fixed points are included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size()];
        let mut out = Vec::new();
        for start in 0..self.size() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.images[start];
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.images[j];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        CycleType::from_parts(&lens).expect("cycles are nonempty")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// 1-based cycle notation without fixed points; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}
