use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use crate::combinat::CycleType;
use crate::error::{Error, Result};

type Key = (Vec<usize>, Vec<usize>);

static MEMO: LazyLock<RwLock<HashMap<Key, i64>>> = LazyLock::new(|| RwLock::new(HashMap::new()));

/// Irreducible character `χ_λ(μ)` of `S_m` by the Murnaghan–Nakayama rule.
///
/// Border strips are removed on beta-sets: removing a `k`-strip moves a bead
/// from `b` to a free position `b - k`, with sign `(-1)^{beads strictly between}`.
pub fn mn_character(lambda: &CycleType, mu: &CycleType) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::invalid(format!(
            "character of a partition of {} at a class of S_{}",
            lambda.size(),
            mu.size()
        )));
    }
    Ok(mn_parts(&lambda.parts(), &mu.parts()))
}

// `lambda` decreasing; `mu` decreasing (its largest part is removed first).
fn mn_parts(lambda: &[usize], mu: &[usize]) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(v) = MEMO.read().expect("mn memo poisoned").get(&key) {
        return *v;
    }
    let n = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, p)| p + (n - 1 - i)).collect();
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let between = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let len = next.len();
        let parts: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(i, c)| c - (len - 1 - i))
            .filter(|p| *p > 0)
            .collect();
        let v = mn_parts(&parts, rest);
        total += if between % 2 == 0 { v } else { -v };
    }
    MEMO.write().expect("mn memo poisoned").insert(key, total);
    total
}

/// Dimension of the irreducible representation indexed by `lambda`, by the
/// hook length formula.
pub fn irrep_dimension(lambda: &CycleType) -> num_bigint::BigInt {
    let parts = lambda.parts();
    let conj = lambda.conjugate().parts();
    let mut hooks = num_bigint::BigInt::from(1);
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            hooks *= row - j + conj[j] - i - 1;
        }
    }
    crate::combinat::factorial(lambda.size()) / hooks
}
