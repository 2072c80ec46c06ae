use std::fmt;

use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// A partition of `{1, …, m}` into nonempty blocks.
///
/// Stored as a restricted growth string: `labels[i]` is the block of the
/// 0-based point `i`, and blocks are numbered in order of their least
/// element. This is the canonical block order used everywhere.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    labels: Vec<usize>,
    num_blocks: usize,
}

impl SetPartition {
    /// From blocks of 1-based points in any order.
    pub fn from_blocks(m: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut owner = vec![usize::MAX; m];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::invalid("empty block in set partition"));
            }
            for &p in block {
                if p == 0 || p > m || owner[p - 1] != usize::MAX {
                    return Err(Error::invalid(format!("bad or repeated point {p}")));
                }
                owner[p - 1] = b;
            }
        }
        if owner.contains(&usize::MAX) {
            return Err(Error::invalid("blocks do not cover the ground set"));
        }
        Ok(Self::from_owner(&owner))
    }

    // Relabels arbitrary block ids into restricted growth form.
    fn from_owner(owner: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let labels: Vec<usize> = owner
            .iter()
            .map(|o| {
                let next = map.len();
                *map.entry(*o).or_insert(next)
            })
            .collect();
        SetPartition {
            labels,
            num_blocks: map.len(),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.labels.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.num_blocks
    }

    /// Block index of the 0-based point `i`.
    pub fn block_of(&self, i: usize) -> usize {
        self.labels[i]
    }

    /// Blocks of 0-based points, each sorted, ordered by least element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks];
        for (i, b) in self.labels.iter().enumerate() {
            out[*b].push(i);
        }
        out
    }

    /// When `alpha` permutes the blocks, the induced block permutation
    /// `β(k) = block containing α(min B_k)`; otherwise `None`.
    pub fn induced_permutation(&self, alpha: &Permutation) -> Option<Permutation> {
        assert_eq!(alpha.size(), self.ground_size(), "degree mismatch");
        let mut beta = vec![usize::MAX; self.num_blocks];
        for (i, &b) in self.labels.iter().enumerate() {
            let target = self.labels[alpha.apply(i)];
            if beta[b] == usize::MAX {
                beta[b] = target;
            } else if beta[b] != target {
                return None;
            }
        }
        // α surjective forces β surjective once it is well defined
        Some(Permutation::from_zero_based(beta).expect("induced map on blocks is a bijection"))
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetPartition({self})")
    }
}

/// Blocks joined by `|`, points 1-based; multi-digit points are
/// comma-separated inside a block.
impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.ground_size() > 9 { "," } else { "" };
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| b.iter().map(|p| (p + 1).to_string()).collect::<Vec<_>>().join(sep))
            .collect();
        write!(f, "{}", blocks.join("|"))
    }
}

/// Calls `visit` on every partition of `{1..m}` into exactly `l` blocks, as
/// restricted growth strings.
fn for_each_rgs(m: usize, l: usize, visit: &mut dyn FnMut(&[usize])) {
    fn rec(i: usize, used: usize, m: usize, l: usize, labels: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if i == m {
            if used == l {
                visit(labels);
            }
            return;
        }
        // not enough points left to open the missing blocks
        if l - used > m - i {
            return;
        }
        let top = if used < l { used + 1 } else { used };
        for b in 0..top {
            labels.push(b);
            rec(i + 1, used.max(b + 1), m, l, labels, visit);
            labels.pop();
        }
    }
    if l > m || (l == 0 && m > 0) {
        return;
    }
    rec(0, 0, m, l, &mut Vec::with_capacity(m), visit);
}

/// All partitions of `{1..m}` into exactly `l` blocks, in restricted growth
/// string order. Empty when `l > m`.
pub fn set_partitions(m: usize, l: usize, limits: &Limits) -> Result<Vec<SetPartition>> {
    limits.check_set_partitions(m)?;
    let mut out = Vec::new();
    for_each_rgs(m, l, &mut |labels| {
        out.push(SetPartition {
            labels: labels.to_vec(),
            num_blocks: l,
        })
    });
    Ok(out)
}

/// The `l`-block partitions stable under `alpha`, each with its induced block
/// permutation (blocks ordered by least element).
pub fn fixed_partitions(
    alpha: &Permutation,
    l: usize,
    limits: &Limits,
) -> Result<Vec<(SetPartition, Permutation)>> {
    let m = alpha.size();
    limits.check_set_partitions(m)?;
    let mut out = Vec::new();
    for_each_rgs(m, l, &mut |labels| {
        let p = SetPartition {
            labels: labels.to_vec(),
            num_blocks: l,
        };
        if let Some(beta) = p.induced_permutation(alpha) {
            out.push((p, beta));
        }
    });
    Ok(out)
}
