//! Named invariant checks on the built-in fixtures, sized to run in a few
//! seconds. The CLI `selftest` command reports these one by one.

use num_bigint::BigInt;

use crate::charseries::{
    char_delta_le, char_fm_series, char_xm, poincare_bf, poincare_cf, poincare_sym_product, quotient_poincare,
    reconstruct_char_fm, sym_product_generating_function, tensor_trace_oracle, GradedDims,
};
use crate::combinat::{
    cyclic_group_classes, partitions, stirling, stirling_second_explicit, subgroup_closure, CycleType, Permutation,
    StirlingKind,
};
use crate::confspace::{fixtures, poincare_delta, poincare_ordinary, universal_poly};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::polyarith::{BiPoly, LaurentPoly};
use crate::repstab::{bf_constancy, mn_character, stability_report};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// Error message when the check could not run.
    pub detail: Option<String>,
}

type CheckFn = fn(&Limits) -> Result<bool>;

const CHECKS: &[(&str, CheckFn)] = &[
    ("universal_table_m6", universal_table),
    ("universal_eval_matches_delta", universal_eval),
    ("arnold_bf_c", arnold_bf),
    ("betti1_fm_c", betti1_fm),
    ("assembly_identity", assembly),
    ("oracle_triangle", oracle_triangle),
    ("macdonald_tensor_oracle", macdonald_oracle),
    ("cf_bf_vs_subgroup_average", cf_bf_averages),
    ("cf_prime_divisibility", cf_prime),
    ("stirling_inverse", stirling_inverse),
    ("mn_orthogonality", mn_orthogonality),
    ("stability_c_r3", stability),
    ("sym_product_generating_function", sym_products),
    ("hypothesis_refusal", refusal),
];

/// Runs every check, catching errors as failures.
pub fn run(limits: &Limits) -> Vec<Check> {
    CHECKS
        .iter()
        .map(|(name, f)| match f(limits) {
            Ok(passed) => Check {
                name,
                passed,
                detail: None,
            },
            Err(e) => Check {
                name,
                passed: false,
                detail: Some(e.to_string()),
            },
        })
        .collect()
}

/// The closed universal polynomials for `m = 6`, `ℓ = 1..=6`, as
/// `(coefficient, power of P, power of T)`.
pub fn universal_table_m6() -> Vec<BiPoly> {
    let rows: [&[(i64, u32, u32)]; 6] = [
        &[(1, 1, 0)],
        &[(31, 2, 0), (30, 1, 1)],
        &[(90, 3, 0), (239, 2, 1), (150, 1, 2)],
        &[(65, 4, 0), (300, 3, 1), (476, 2, 2), (240, 1, 3)],
        &[(15, 5, 0), (85, 4, 1), (225, 3, 2), (274, 2, 3), (120, 1, 4)],
        &[(1, 6, 0)],
    ];
    rows.iter()
        .map(|r| BiPoly::from_terms(r.iter().map(|&(c, p, t)| ((p, t), c))))
        .collect()
}

fn universal_table(_: &Limits) -> Result<bool> {
    for (l, expected) in (1..=6).zip(universal_table_m6()) {
        if universal_poly(l, 6, true)? != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

fn universal_eval(_: &Limits) -> Result<bool> {
    for x in fixtures::i_acyclic() {
        for m in 0..=6 {
            for l in 0..=m {
                for closed in [false, true] {
                    if universal_poly(l, m, closed)?.eval_p(&x.pc) != poincare_delta(&x, l, m, closed)? {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

// dual Betti numbers of BF_m(ℂ): 1 in degrees 0 and 1, nothing above
fn arnold_bf(limits: &Limits) -> Result<bool> {
    let c = fixtures::c();
    for i in 0..=4 {
        let r = bf_constancy(&c, i, 2..=8, limits)?;
        let want = BigInt::from(u8::from(i <= 1));
        if r.values.iter().any(|(_, v)| *v != want) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn betti1_fm(_: &Limits) -> Result<bool> {
    let c = fixtures::c();
    for m in 1..=10u32 {
        let p = poincare_ordinary(&c, m)?;
        if p.coeff(1) != BigInt::from(m * (m - 1) / 2) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn assembly(limits: &Limits) -> Result<bool> {
    for x in fixtures::i_acyclic() {
        for m in 1..=4 {
            for t in partitions(m, None) {
                if char_delta_le(&x, m, &t.representative(), limits)? != char_xm(&x, &t) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn oracle_triangle(limits: &Limits) -> Result<bool> {
    for x in fixtures::i_acyclic() {
        for m in 1..=4 {
            let direct = char_fm_series(&x, m, limits)?;
            if reconstruct_char_fm(&x, m, limits)? != direct {
                return Ok(false);
            }
            for (t, v) in direct.iter() {
                if crate::charseries::char_delta_oracle(&x, m, &t.representative(), limits)? != *v {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn macdonald_oracle(_: &Limits) -> Result<bool> {
    for dims in [vec![1], vec![0, 1], vec![0, 0, 1], vec![1, 1], vec![0, 1, 1], vec![0, 2, 0, 1]] {
        let g = GradedDims::new(dims);
        let dim = g.dims.len() as u32 - 1;
        let x = crate::confspace::SpaceSpec::new("graded", g.poincare(), dim, false, true, true)?;
        for m in 1..=4 {
            for t in partitions(m, None) {
                if tensor_trace_oracle(&g, &t)? != char_xm(&x, &t) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn cf_bf_averages(limits: &Limits) -> Result<bool> {
    for x in fixtures::i_acyclic() {
        for m in 1..=5 {
            let series = char_fm_series(&x, m, limits)?;
            if quotient_poincare(&series, &cyclic_group_classes(m)?)? != poincare_cf(&x, m)? {
                return Ok(false);
            }
            let gens = if m == 1 {
                vec![Permutation::identity(1)]
            } else {
                vec![
                    CycleType::full_cycle(m).representative(),
                    Permutation::parse_cycles(m, "(1 2)")?,
                ]
            };
            let sm = subgroup_closure(&gens, m, limits)?;
            if quotient_poincare(&series, &sm)? != poincare_bf(&x, m, limits)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn cf_prime(_: &Limits) -> Result<bool> {
    let pcs = [vec![0, 1], vec![0, 2, 1], vec![0, 1, 3, 0, 2], vec![0, 0, 0, 4, 1]];
    for coeffs in pcs {
        let dim = coeffs.len() as u32 - 1;
        let x = crate::confspace::SpaceSpec::new("probe", LaurentPoly::from_coeffs(coeffs), dim, true, true, true)?;
        for p in [2, 3, 5, 7] {
            poincare_cf(&x, p)?;
        }
    }
    Ok(true)
}

fn stirling_inverse(_: &Limits) -> Result<bool> {
    let n = 12;
    for i in 0..=n {
        for j in 0..=n {
            if stirling(StirlingKind::Second, i, j) != stirling_second_explicit(i, j) {
                return Ok(false);
            }
            let mut s = BigInt::from(0);
            for k in 0..=n {
                s += stirling(StirlingKind::FirstSigned, i, k) * stirling(StirlingKind::Second, k, j);
            }
            if s != BigInt::from(u8::from(i == j)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn mn_orthogonality(_: &Limits) -> Result<bool> {
    for m in 1..=6 {
        let ps = partitions(m, None);
        for a in &ps {
            for b in &ps {
                let mut s = BigInt::from(0);
                for mu in &ps {
                    s += crate::combinat::class_size(mu) * mn_character(a, mu)? * mn_character(b, mu)?;
                }
                let want = if a == b { crate::combinat::factorial(m) } else { BigInt::from(0) };
                if s != want {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn stability(limits: &Limits) -> Result<bool> {
    for i in 0..=1 {
        let c = stability_report(&fixtures::c(), i, 0, 1..=8, 4, limits)?;
        let r3 = stability_report(&fixtures::rd(3), i, 0, 1..=8, 4, limits)?;
        if !c.table.constant_from(4 * i as usize)
            || !c.table.monotone_from(i as usize)
            || !r3.table.constant_from(2 * i as usize)
        {
            return Ok(false);
        }
    }
    Ok(true)
}

fn sym_products(limits: &Limits) -> Result<bool> {
    for x in fixtures::i_acyclic() {
        for m in 1..=6 {
            // the symmetric route checks itself against the generating function
            match poincare_sym_product(&x, m, false, limits) {
                Ok(p) => {
                    if p != sym_product_generating_function(&x.pc, m)? {
                        return Ok(false);
                    }
                }
                Err(Error::Consistency(_)) => return Ok(false),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(true)
}

fn refusal(limits: &Limits) -> Result<bool> {
    let k = fixtures::klein_punctured();
    let id = Permutation::identity(3);
    let refused = |r: Result<()>| matches!(r, Err(Error::Hypothesis { flag: "i_acyclic", .. }));
    Ok(refused(crate::confspace::poincare_fm(&k, 3).map(drop))
        && refused(poincare_delta(&k, 2, 3, true).map(drop))
        && refused(char_fm_series(&k, 3, limits).map(drop))
        && refused(crate::charseries::char_delta_oracle(&k, 2, &id, limits).map(drop))
        && refused(poincare_cf(&k, 3).map(drop))
        && refused(poincare_bf(&k, 3, limits).map(drop))
        && refused(stability_report(&k, 1, 0, 1..=4, 4, limits).map(drop))
        && refused(bf_constancy(&k, 1, 1..=4, limits).map(drop)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass() {
        for c in run(&Limits::default()) {
            assert!(c.passed, "{} failed: {:?}", c.name, c.detail);
        }
    }
}
