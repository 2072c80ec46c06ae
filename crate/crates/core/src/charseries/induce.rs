use std::collections::HashMap;

use crate::combinat::{fixed_partitions, CycleType};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::polyarith::LaurentPoly;

use super::ClassSeries;

/// `I_l^m`: the class function on `S_m` whose value at `α` sums `f` over the
/// `α`-stable `l`-block partitions of `{1..m}`, evaluated at the induced
/// block permutation. This is the character of `Δ_l`-type inductions, and
/// `I_m^m` is the identity.
pub fn induce_i(f: &ClassSeries, m: usize, limits: &Limits) -> Result<ClassSeries> {
    let l = f.degree();
    if l > m {
        return Err(Error::invalid(format!("cannot induce from S_{l} to S_{m}")));
    }
    if l == m {
        return Ok(f.clone());
    }
    if l == 0 {
        return Ok(ClassSeries::zero(m));
    }
    limits.check_set_partitions(m)?;
    ClassSeries::from_fn(m, |lambda| {
        let mut out = LaurentPoly::zero();
        let mut count: HashMap<CycleType, i64> = HashMap::new();
        for (_, beta) in fixed_partitions(&lambda.representative(), l, limits)? {
            *count.entry(beta.cycle_type()).or_insert(0) += 1;
        }
        for (t, n) in count {
            out += f[&t].scale(&n.into());
        }
        Ok(out)
    })
}

/// `Θ_l^m = (-1)^{m-l} Σ_σ (-1)^{|σ|} I(σ)` over the strictly decreasing
/// chains `σ: m = m_0 > m_1 > … > m_t = l` with `|σ| = t`, where `I(σ)`
/// composes the inductions along the chain. `Θ_m^m` is the identity and
/// `Θ_{m-1}^m = I_{m-1}^m`.
///
/// Evaluated by accumulating over chain endpoints instead of listing the
/// `2^{m-l-1}` chains; [`induce_theta_by_chains`] lists them.
pub fn induce_theta(f: &ClassSeries, m: usize, limits: &Limits) -> Result<ClassSeries> {
    let l = f.degree();
    if l > m {
        return Err(Error::invalid(format!("cannot induce from S_{l} to S_{m}")));
    }
    // g[k] = Σ over chains k > … > l of (-1)^{length} I(chain) f
    let mut g: Vec<ClassSeries> = vec![f.clone()];
    for k in (l + 1)..=m {
        let mut acc = ClassSeries::zero(k);
        for gj in &g {
            acc = acc.sub(&induce_i(gj, k, limits)?);
        }
        g.push(acc);
    }
    let top = g.pop().expect("nonempty");
    Ok(if (m - l) % 2 == 0 {
        top
    } else {
        top.scale(&(-1).into())
    })
}

/// [`induce_theta`] by explicit enumeration of all chains.
pub fn induce_theta_by_chains(f: &ClassSeries, m: usize, limits: &Limits) -> Result<ClassSeries> {
    let l = f.degree();
    if l > m {
        return Err(Error::invalid(format!("cannot induce from S_{l} to S_{m}")));
    }
    if m - l > limits.chain_max_gap {
        return Err(Error::CapExceeded {
            what: format!("chain enumeration from {l} to {m}"),
            limit: limits.chain_max_gap as u64,
        });
    }
    let mut out = ClassSeries::zero(m);
    if l == m {
        return Ok(f.clone());
    }
    // intermediate sizes l < k < m chosen by a bitmask
    let gap = m - l - 1;
    for mask in 0u64..(1 << gap) {
        let mut chain: Vec<usize> = (l + 1..m).filter(|k| mask >> (k - l - 1) & 1 == 1).collect();
        chain.push(m);
        let mut cur = f.clone();
        for &k in &chain {
            cur = induce_i(&cur, k, limits)?;
        }
        let t = chain.len();
        if (m - l + t) % 2 == 0 {
            out = out.add(&cur);
        } else {
            out = out.sub(&cur);
        }
    }
    Ok(out)
}
