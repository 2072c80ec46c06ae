use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Which Stirling triangle to read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StirlingKind {
    /// `s(i, j)`, the coefficients of the falling factorial.
    FirstSigned,
    /// `|s(i, j)|`, permutations of `i` points with `j` cycles.
    FirstUnsigned,
    /// `S(i, j)`, partitions of an `i`-set into `j` blocks.
    Second,
}

// Rows 0..len of each triangle; row i has i + 1 entries.
static FIRST: RwLock<Vec<Vec<BigInt>>> = RwLock::new(Vec::new());
static SECOND: RwLock<Vec<Vec<BigInt>>> = RwLock::new(Vec::new());

fn grow(table: &RwLock<Vec<Vec<BigInt>>>, n: usize, kind: StirlingKind) {
    if table.read().expect("stirling table poisoned").len() > n {
        return;
    }
    let mut rows = table.write().expect("stirling table poisoned");
    while rows.len() <= n {
        let i = rows.len();
        let row: Vec<BigInt> = if i == 0 {
            vec![BigInt::one()]
        } else {
            let prev = &rows[i - 1];
            let at = |j: usize| prev.get(j).cloned().unwrap_or_default();
            (0..=i)
                .map(|j| {
                    let left = if j == 0 { BigInt::zero() } else { at(j - 1) };
                    match kind {
                        // s(i,j) = s(i-1,j-1) - (i-1) s(i-1,j)
                        StirlingKind::FirstSigned | StirlingKind::FirstUnsigned => {
                            left - BigInt::from(i - 1) * at(j)
                        }
                        // S(i,j) = S(i-1,j-1) + j S(i-1,j)
                        StirlingKind::Second => left + BigInt::from(j) * at(j),
                    }
                })
                .collect()
        };
        if kind == StirlingKind::Second {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(
                    *v,
                    stirling_second_explicit(i, j),
                    "recurrence and explicit formula disagree at S({i},{j})"
                );
            }
        }
        rows.push(row);
    }
}

/// Stirling number of the given kind; zero outside the triangle `j ≤ i`.
pub fn stirling(kind: StirlingKind, i: usize, j: usize) -> BigInt {
    if j > i {
        return BigInt::zero();
    }
    let table = match kind {
        StirlingKind::Second => &SECOND,
        _ => &FIRST,
    };
    let base = if kind == StirlingKind::FirstUnsigned {
        StirlingKind::FirstSigned
    } else {
        kind
    };
    grow(table, i, base);
    let v = table.read().expect("stirling table poisoned")[i][j].clone();
    if kind == StirlingKind::FirstUnsigned && (i - j) % 2 == 1 {
        -v
    } else {
        v
    }
}

/// `S(i, j) = (1/j!) Σ_k (-1)^{j-k} C(j,k) k^i`, computed without the table.
pub fn stirling_second_explicit(i: usize, j: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for k in 0..=j {
        let term = binomial(j, k) * BigInt::from(k).pow(i as u32);
        if (j - k) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc / factorial(j)
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(stirling(StirlingKind::Second, 6, 2), BigInt::from(31));
        assert_eq!(stirling(StirlingKind::Second, 6, 3), BigInt::from(90));
        assert_eq!(stirling(StirlingKind::FirstUnsigned, 4, 1), BigInt::from(6));
        assert_eq!(stirling(StirlingKind::FirstSigned, 4, 1), BigInt::from(-6));
        assert_eq!(stirling(StirlingKind::FirstSigned, 4, 2), BigInt::from(11));
        assert_eq!(stirling(StirlingKind::Second, 0, 0), BigInt::one());
        for i in 1..10 {
            assert!(stirling(StirlingKind::Second, i, 0).is_zero());
            assert!(stirling(StirlingKind::FirstSigned, i, 0).is_zero());
        }
        assert!(stirling(StirlingKind::Second, 3, 5).is_zero());
    }

    #[test]
    fn unsigned_first_kind_counts_permutations() {
        for i in 0..=10 {
            let total: BigInt = (0..=i).map(|j| stirling(StirlingKind::FirstUnsigned, i, j)).sum();
            assert_eq!(total, factorial(i));
        }
    }

    #[test]
    fn large_values_exceed_u64() {
        let v = stirling(StirlingKind::Second, 30, 10);
        assert_eq!(v, stirling_second_explicit(30, 10));
        assert!(v > BigInt::from(u64::MAX));
    }
}
