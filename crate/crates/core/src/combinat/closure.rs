use std::collections::{BTreeMap, HashSet, VecDeque};

use super::partition::CycleType;
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// A finite subgroup of `S_m` summarized by how many elements it has of
/// each cycle type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupClasses {
    pub m: usize,
    pub order: u64,
    pub counts: BTreeMap<CycleType, u64>,
}

/// Closes `generators` under composition by breadth-first search.
pub fn subgroup_closure(generators: &[Permutation], m: usize, limits: &Limits) -> Result<SubgroupClasses> {
    if let Some(g) = generators.iter().find(|g| g.size() != m) {
        return Err(Error::invalid(format!("generator {g} is not in S_{m}")));
    }
    let id = Permutation::identity(m);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in generators {
            let q = g.compose(&p);
            if seen.insert(q.clone()) {
                if seen.len() as u64 > limits.closure_max_order {
                    return Err(Error::CapExceeded {
                        what: "subgroup closure order".into(),
                        limit: limits.closure_max_order,
                    });
                }
                queue.push_back(q);
            }
        }
    }
    let mut counts = BTreeMap::new();
    for p in &seen {
        *counts.entry(p.cycle_type()).or_insert(0) += 1;
    }
    Ok(SubgroupClasses {
        m,
        order: seen.len() as u64,
        counts,
    })
}

/// The cyclic group generated by the full cycle `(1 2 … m)`, without a search.
pub fn cyclic_group_classes(m: usize) -> Result<SubgroupClasses> {
    if m == 0 {
        return Err(Error::invalid("C_0 is not defined"));
    }
    let mut counts = BTreeMap::new();
    // σ^k has gcd(k, m) cycles of length m / gcd(k, m)
    for k in 0..m {
        let g = num_integer::gcd(k, m);
        let d = m / g;
        let mut mult = vec![0; d];
        mult[d - 1] = g;
        *counts.entry(CycleType::from_mult(&mult)).or_insert(0) += 1;
    }
    Ok(SubgroupClasses {
        m,
        order: m as u64,
        counts,
    })
}
