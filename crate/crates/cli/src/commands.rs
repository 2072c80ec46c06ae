use std::ops::RangeInclusive;

use confcohom::charseries::{
    char_delta_le, char_delta_oracle, char_fm, char_fm_series, char_xm, char_xm_series, poincare_bf, poincare_cf,
    poincare_sym_product, quotient_poincare, reconstruct_char_fm, sym_product_generating_function,
    tensor_trace_oracle, GradedDims,
};
use confcohom::combinat::{cyclic_group_classes, factorial, partitions, subgroup_closure, CycleType, Permutation};
use confcohom::confspace::{
    euler_char_fm, fixtures, poincare_delta, poincare_fm, poincare_ordinary, universal_poly, SpaceSpec,
};
use confcohom::repstab::{bf_constancy, stability_report};
use confcohom::{selftest, LaurentPoly, Limits};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::args::{SeriesKind, Target};
use crate::document::{Check, Document, Payload};
use crate::error::CliError;
use crate::space::SpaceFile;

type Out = Result<Document, CliError>;

// subgroup closures beyond this size are skipped as cross-checks
const CLOSURE_CHECK_MAX_M: usize = 8;

fn to_u32(n: usize, what: &str) -> Result<u32, CliError> {
    u32::try_from(n).map_err(|_| CliError::Parse(format!("{what} = {n} is too large")))
}

fn need_l(l: Option<usize>, m: usize) -> Result<usize, CliError> {
    let l = l.ok_or_else(|| CliError::Parse("--l is required for this target".into()))?;
    if l > m {
        return Err(CliError::Parse(format!("--l {l} exceeds --m {m}")));
    }
    Ok(l)
}

fn space_input(x: &SpaceSpec) -> (&'static str, Value) {
    ("space", SpaceFile::from_spec(x).to_json())
}

fn nonneg(p: &LaurentPoly) -> Check {
    Check::new("nonnegative_coefficients", p.has_nonneg_coeffs())
}

/// Accepts `1^2,3^1` (multiplicities) or `(3,1,1)` (parts).
pub fn parse_cycle_type(s: &str, m: usize) -> Result<CycleType, CliError> {
    let s = s.trim();
    let t = if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        let parts: Vec<usize> = inner
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| CliError::Parse(format!("bad cycle type {s:?}")))?;
        CycleType::from_parts(&parts).map_err(|e| CliError::Parse(e.to_string()))?
    } else {
        s.parse::<CycleType>()
            .map_err(|e| CliError::Parse(format!("bad cycle type {s:?}: {e}")))?
    };
    if t.size() != m {
        return Err(CliError::Parse(format!("cycle type {t} has size {}, expected {m}", t.size())));
    }
    Ok(t)
}

/// `m0..m1` or `m0..=m1`, both inclusive.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, CliError> {
    let bad = || CliError::Parse(format!("bad range {s:?}; expected m0..m1"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

fn full_symmetric_group(m: usize, limits: &Limits) -> Result<confcohom::combinat::SubgroupClasses, CliError> {
    let gens = if m <= 1 {
        vec![Permutation::identity(m)]
    } else {
        vec![
            CycleType::full_cycle(m).representative(),
            Permutation::from_cycles(m, &[vec![1, 2]])?,
        ]
    };
    Ok(subgroup_closure(&gens, m, limits)?)
}

pub fn poincare(x: &SpaceSpec, target: Target, m: usize, l: Option<usize>, limits: &Limits) -> Out {
    let m32 = to_u32(m, "m")?;
    let mut checks = Vec::new();
    let mut inputs = vec![space_input(x), ("target", json!(format!("{target:?}").to_lowercase())), ("m", json!(m))];
    let result = match target {
        Target::Fm => {
            let p = poincare_fm(x, m32)?;
            let q = universal_poly(m32, m32, false)?.eval_p(&x.pc);
            checks.push(Check::new("universal_polynomial", q == p));
            if m <= limits.class_max_m {
                let id = char_fm(x, &CycleType::identity(m))?.negate_var();
                checks.push(Check::new("character_identity_entry", id == p));
            }
            checks.push(Check::new("euler_characteristic", p.value_at_minus_one() == euler_char_fm(x, m32)));
            p
        }
        Target::Delta | Target::DeltaLe => {
            let l = need_l(l, m)?;
            inputs.push(("l", json!(l)));
            let closed = target == Target::DeltaLe;
            let l32 = to_u32(l, "l")?;
            let p = poincare_delta(x, l32, m32, closed)?;
            let q = universal_poly(l32, m32, closed)?.eval_p(&x.pc);
            checks.push(Check::new("universal_polynomial", q == p));
            if m <= limits.set_partition_max_m {
                let id = Permutation::identity(m);
                let c = if closed {
                    char_delta_le(x, l, &id, limits)?
                } else {
                    char_delta_oracle(x, l, &id, limits)?
                };
                checks.push(Check::new("set_partition_oracle", c.negate_var() == p));
            }
            p
        }
        Target::Ordinary => {
            let p = poincare_ordinary(x, m32)?;
            let pc = poincare_fm(x, m32)?;
            checks.push(Check::new(
                "poincare_duality",
                p.dual(i64::from(m32) * i64::from(x.dim)) == pc,
            ));
            p
        }
        Target::Cf => {
            let p = poincare_cf(x, m)?;
            let series = char_fm_series(x, m, limits)?;
            let avg = quotient_poincare(&series, &cyclic_group_classes(m)?)?;
            checks.push(Check::new("cyclic_average", avg == p));
            p
        }
        Target::Bf => {
            let p = poincare_bf(x, m, limits)?;
            if m <= CLOSURE_CHECK_MAX_M {
                let series = char_fm_series(x, m, limits)?;
                let avg = quotient_poincare(&series, &full_symmetric_group(m, limits)?)?;
                checks.push(Check::new("subgroup_average", avg == p));
            }
            p
        }
        Target::Sym => {
            let p = poincare_sym_product(x, m, false, limits)?;
            let gf = sym_product_generating_function(&x.pc, m)?;
            checks.push(Check::new("generating_function", gf == p));
            p
        }
        Target::Cyc => {
            let p = poincare_sym_product(x, m, true, limits)?;
            if m >= 1 {
                let gens = [CycleType::full_cycle(m).representative()];
                let group = subgroup_closure(&gens, m, limits)?;
                let avg = quotient_poincare(&char_xm_series(x, m, limits)?, &group)?;
                checks.push(Check::new("closure_average", avg == p));
            }
            p
        }
    };
    checks.push(nonneg(&result));
    Ok(Document {
        command: "poincare",
        inputs,
        result: Payload::Poly(result),
        checks,
    })
}

fn entry(x: &SpaceSpec, kind: SeriesKind, l: usize, t: &CycleType, limits: &Limits) -> Result<LaurentPoly, CliError> {
    Ok(match kind {
        SeriesKind::Fm => char_fm(x, t)?,
        SeriesKind::Xm => char_xm(x, t),
        SeriesKind::Delta => char_delta_oracle(x, l, &t.representative(), limits)?,
        SeriesKind::DeltaLe => char_delta_le(x, l, &t.representative(), limits)?,
    })
}

fn small_graded(x: &SpaceSpec, m: usize) -> Option<GradedDims> {
    if m > 6 || x.pc.min_exp().is_some_and(|e| e < 0) {
        return None;
    }
    let top = x.pc.max_exp().unwrap_or(0);
    let dims: Option<Vec<u32>> = (0..=top).map(|k| u32::try_from(x.pc.coeff(k)).ok()).collect();
    dims.map(GradedDims::new).filter(|g| g.total() <= 4)
}

pub fn character(
    x: &SpaceSpec,
    m: usize,
    cycle_type: &str,
    kind: SeriesKind,
    l: Option<usize>,
    limits: &Limits,
) -> Out {
    let mut inputs = vec![
        space_input(x),
        ("m", json!(m)),
        ("cycle_type", json!(cycle_type)),
        ("series", json!(format!("{kind:?}").to_lowercase())),
    ];
    let l = match kind {
        SeriesKind::Delta | SeriesKind::DeltaLe => {
            let l = need_l(l, m)?;
            inputs.push(("l", json!(l)));
            l
        }
        _ => m,
    };
    // refuse before any enumeration when the series needs i-acyclicity
    if kind != SeriesKind::Xm && !x.i_acyclic {
        return Err(confcohom::Error::Hypothesis {
            space: x.name.clone(),
            flag: "i_acyclic",
        }
        .into());
    }
    let types: Vec<CycleType> = if cycle_type.trim() == "all" {
        if m > limits.class_max_m {
            return Err(confcohom::Error::CapExceeded {
                what: format!("character series with m = {m}"),
                limit: limits.class_max_m as u64,
            }
            .into());
        }
        partitions(m, None)
    } else {
        vec![parse_cycle_type(cycle_type, m)?]
    };
    let mut entries = Vec::with_capacity(types.len());
    for t in &types {
        entries.push((t.clone(), entry(x, kind, l, t, limits)?));
    }
    let mut checks = Vec::new();
    let oracle_ok = m <= limits.set_partition_max_m;
    match kind {
        SeriesKind::Fm => {
            if oracle_ok {
                let mut agree = true;
                for (t, v) in &entries {
                    agree &= char_delta_oracle(x, m, &t.representative(), limits)? == *v;
                }
                checks.push(Check::new("set_partition_oracle", agree));
            }
            if types.len() > 1 {
                if oracle_ok {
                    let rebuilt = reconstruct_char_fm(x, m, limits)?;
                    checks.push(Check::new(
                        "reconstruction_from_powers",
                        entries.iter().all(|(t, v)| rebuilt[t] == *v),
                    ));
                }
                let id = entries.iter().find(|(t, _)| t.is_identity()).map(|(_, v)| v.negate_var());
                checks.push(Check::new(
                    "identity_entry",
                    id == Some(poincare_fm(x, to_u32(m, "m")?)?),
                ));
            }
        }
        SeriesKind::Xm => {
            if x.i_acyclic && oracle_ok {
                let mut agree = true;
                for (t, v) in &entries {
                    agree &= char_delta_le(x, m, &t.representative(), limits)? == *v;
                }
                checks.push(Check::new("assembly_identity", agree));
            }
            if let Some(g) = small_graded(x, m) {
                let mut agree = true;
                for (t, v) in &entries {
                    agree &= tensor_trace_oracle(&g, t)? == *v;
                }
                checks.push(Check::new("tensor_trace_oracle", agree));
            }
        }
        SeriesKind::Delta | SeriesKind::DeltaLe => {
            if let Some((_, v)) = entries.iter().find(|(t, _)| t.is_identity()) {
                let p = poincare_delta(x, to_u32(l, "l")?, to_u32(m, "m")?, kind == SeriesKind::DeltaLe)?;
                checks.push(Check::new("identity_entry", v.negate_var() == p));
            }
        }
    }
    let result = if types.len() == 1 && cycle_type.trim() != "all" {
        Payload::Poly(entries.pop().expect("one entry").1)
    } else {
        Payload::Series(entries.into_iter().map(|(t, v)| (t.to_string(), v)).collect())
    };
    Ok(Document {
        command: "character",
        inputs,
        result,
        checks,
    })
}

pub fn universal(l: u32, m: u32, closed: bool) -> Out {
    let q = universal_poly(l, m, closed)?;
    let mut agree = true;
    for x in fixtures::i_acyclic() {
        agree &= q.eval_p(&x.pc) == poincare_delta(&x, l, m, closed)?;
    }
    Ok(Document {
        command: "universal",
        inputs: vec![("l", json!(l)), ("m", json!(m)), ("closed", json!(closed))],
        checks: vec![
            Check::new("homogeneous", q.is_homogeneous_of(l)),
            Check::new("evaluates_to_fixture_polynomials", agree),
        ],
        result: Payload::Bi(q),
    })
}

pub fn quotient(x: &SpaceSpec, m: usize, generators: &[String], limits: &Limits) -> Out {
    let series = char_fm_series(x, m, limits)?;
    let gens: Vec<Permutation> = if generators.is_empty() {
        vec![Permutation::identity(m)]
    } else {
        generators
            .iter()
            .map(|g| Permutation::parse_cycles(m, g))
            .collect::<Result<_, _>>()
            .map_err(|e| CliError::Parse(e.to_string()))?
    };
    let group = subgroup_closure(&gens, m, limits)?;
    let p = quotient_poincare(&series, &group)?;
    let mut checks = vec![nonneg(&p)];
    if group.order == 1 {
        checks.push(Check::new("matches_fm", p == poincare_fm(x, to_u32(m, "m")?)?));
    } else if m >= 1 && group == cyclic_group_classes(m)? {
        checks.push(Check::new("matches_cf", p == poincare_cf(x, m)?));
    } else if BigInt::from(group.order) == factorial(m) {
        checks.push(Check::new("matches_bf", p == poincare_bf(x, m, limits)?));
    }
    Ok(Document {
        command: "quotient",
        inputs: vec![
            space_input(x),
            ("m", json!(m)),
            ("generators", json!(generators)),
            ("subgroup_order", json!(group.order)),
        ],
        result: Payload::Poly(p),
        checks,
    })
}

pub fn stability(x: &SpaceSpec, i: u32, a: usize, range: &str, window: usize, limits: &Limits) -> Out {
    let r = parse_range(range)?;
    let report = stability_report(x, i, a, r, window, limits)?;
    let checks = vec![
        Check::new("monotone_from_bound", report.monotone_beyond_bound),
        Check::new("constant_from_stable_bound", report.constant_beyond_bound),
    ];
    Ok(Document {
        command: "stability",
        inputs: vec![
            space_input(x),
            ("i", json!(i)),
            ("a", json!(a)),
            ("range", json!(range)),
            ("window", json!(window)),
        ],
        result: Payload::Stability(report),
        checks,
    })
}

pub fn bf(x: &SpaceSpec, i: u32, range: &str, limits: &Limits) -> Out {
    let r = parse_range(range)?;
    let report = bf_constancy(x, i, r, limits)?;
    Ok(Document {
        command: "bf",
        inputs: vec![space_input(x), ("i", json!(i)), ("range", json!(range))],
        result: Payload::Bf(report),
        checks: Vec::new(),
    })
}

pub fn selftest(limits: &Limits) -> Out {
    let checks = selftest::run(limits)
        .into_iter()
        .map(|c| Check {
            name: c.name.to_string(),
            passed: c.passed,
            detail: c.detail,
        })
        .collect();
    Ok(Document {
        command: "selftest",
        inputs: Vec::new(),
        result: Payload::Empty,
        checks,
    })
}
