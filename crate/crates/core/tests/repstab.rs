use std::collections::BTreeMap;

use confcohom::charseries::{char_fm_series, induce_i, ClassSeries};
use confcohom::combinat::{partitions, CycleType};
use confcohom::confspace::{betti_bm, fixtures, SpaceSpec};
use confcohom::repstab::{
    bf_constancy, bm_series, bm_stratum_series, decompose, degree_character, irrep_dimension, mn_character,
    stability_report, PaddedPartition,
};
use confcohom::{LaurentPoly, Limits};
use num_bigint::BigInt;

fn constant_series(m: usize, f: impl Fn(&CycleType) -> i64) -> ClassSeries {
    ClassSeries::from_fn(m, |c| Ok(LaurentPoly::constant(f(c)))).unwrap()
}

fn two_row(m: usize, j: usize) -> PaddedPartition {
    let core = if j == 0 { vec![] } else { vec![j] };
    PaddedPartition::new(core, m).unwrap()
}

fn stable_fixtures() -> Vec<SpaceSpec> {
    fixtures::i_acyclic()
        .into_iter()
        .filter(|x| x.dim >= 2 && x.connected)
        .collect()
}

#[test]
fn second_orthogonality() {
    for m in 1..=6 {
        let ps = partitions(m, None);
        for mu in &ps {
            for nu in &ps {
                let s: i64 = ps
                    .iter()
                    .map(|l| mn_character(l, mu).unwrap() * mn_character(l, nu).unwrap())
                    .sum();
                let want = if mu == nu {
                    confcohom::combinat::centralizer_order(mu)
                } else {
                    BigInt::from(0)
                };
                assert_eq!(BigInt::from(s), want);
            }
        }
    }
}

#[test]
fn character_table_of_s4() {
    let l = |p: &[usize]| CycleType::from_parts(p).unwrap();
    // classes in the order 1^4, 2 1^2, 2^2, 3 1, 4
    let classes = [l(&[1, 1, 1, 1]), l(&[2, 1, 1]), l(&[2, 2]), l(&[3, 1]), l(&[4])];
    let row = |lambda: &[usize]| -> Vec<i64> {
        classes.iter().map(|c| mn_character(&l(lambda), c).unwrap()).collect()
    };
    assert_eq!(row(&[3, 1]), vec![3, 1, -1, 0, -1]);
    assert_eq!(row(&[2, 2]), vec![2, 0, 2, -1, 0]);
    assert_eq!(row(&[2, 1, 1]), vec![3, -1, -1, 0, 1]);
}

// I_{m-1}^m of the trivial character is induced from S_2 × S_{m-2}
#[test]
fn pieri_for_one_merged_pair() {
    let lim = Limits::default();
    for m in 2..=6 {
        let up = induce_i(&constant_series(m - 1, |_| 1), m, &lim).unwrap();
        let expected: BTreeMap<PaddedPartition, u64> = (0..=2.min(m - 2)).map(|j| (two_row(m, j), 1)).collect();
        assert_eq!(decompose(&up, 0, &lim).unwrap(), expected, "m = {m}");
    }
}

// permutation character on l-subsets: one box per column added to (l)
#[test]
fn pieri_for_young_subgroups() {
    let lim = Limits::default();
    for m in 1..=6 {
        for l in 0..=m {
            let subsets = constant_series(m, |c| {
                let mut counts = vec![0i64; m + 1];
                counts[0] = 1;
                for (d, x) in c.nonzero_mult() {
                    for _ in 0..x {
                        for k in (d..=m).rev() {
                            counts[k] += counts[k - d];
                        }
                    }
                }
                counts[l]
            });
            let expected: BTreeMap<PaddedPartition, u64> =
                (0..=l.min(m - l)).map(|j| (two_row(m, j), 1)).collect();
            assert_eq!(decompose(&subsets, 0, &lim).unwrap(), expected, "m = {m}, l = {l}");
        }
    }
}

// one trivial summand per orbit of l-block partitions, i.e. per partition of
// m into l parts; the module is not multiplicity free in general
#[test]
fn induced_trivial_has_one_invariant_per_block_shape() {
    let lim = Limits::default();
    for m in 1..=6 {
        for l in 1..=m {
            let up = induce_i(&constant_series(l, |_| 1), m, &lim).unwrap();
            let dec = decompose(&up, 0, &lim).unwrap();
            let triv = dec.get(&two_row(m, 0)).copied().unwrap_or(0);
            assert_eq!(triv as usize, partitions(m, Some(l)).len(), "m = {m}, l = {l}");
        }
    }
}

#[test]
fn dimension_bookkeeping() {
    let lim = Limits::default();
    for x in fixtures::i_acyclic() {
        for m in 1..=8 {
            let series = char_fm_series(&x, m, &lim).unwrap();
            let top = series.at_identity().max_exp().unwrap_or(0);
            for i in 0..=top {
                let dec = decompose(&series, i, &lim).unwrap();
                let dim: BigInt = dec
                    .iter()
                    .map(|(p, n)| BigInt::from(mn_character(&p.padded(), &CycleType::identity(m)).unwrap()) * *n)
                    .sum();
                let betti = degree_character(&series, i).remove(&CycleType::identity(m)).unwrap();
                assert_eq!(dim, betti, "{} m = {m} degree {i}", x.name);
                let by_hooks: BigInt = dec.iter().map(|(p, n)| irrep_dimension(&p.padded()) * *n).sum();
                assert_eq!(by_hooks, betti);
            }
        }
    }
}

#[test]
fn bm_conversion_matches_poincare_duality() {
    let lim = Limits::default();
    for x in fixtures::i_acyclic().into_iter().filter(|x| x.orientable) {
        for m in 1..=6 {
            let bm = bm_series(&char_fm_series(&x, m, &lim).unwrap(), x.dim);
            for i in 0..=(m as u32 * x.dim) {
                let from_series = degree_character(&bm, i64::from(i)).remove(&CycleType::identity(m)).unwrap();
                assert_eq!(from_series, betti_bm(&x, m as u32, i).unwrap());
            }
        }
    }
}

#[test]
fn stratum_zero_is_the_bm_series() {
    let lim = Limits::default();
    let x = fixtures::c();
    for m in 1..=5 {
        let direct = bm_series(&char_fm_series(&x, m, &lim).unwrap(), 2);
        assert_eq!(bm_stratum_series(&x, m, 0, &lim).unwrap(), direct);
    }
}

#[test]
fn monotonicity_respects_the_bound() {
    let lim = Limits::default();
    for x in stable_fixtures() {
        for a in 0..=1usize {
            for i in 0..=2u32 {
                let r = stability_report(&x, i, a, a.max(1)..=8, 4, &lim).unwrap();
                assert!(r.monotone_beyond_bound, "{} i = {i} a = {a}: {:?}", x.name, r.table.rows);
            }
        }
    }
}

#[test]
fn betti_numbers_become_polynomial_before_the_stable_bound() {
    let lim = Limits::default();
    for x in stable_fixtures() {
        for i in 1..=2u32 {
            let r = stability_report(&x, i, 0, 1..=10, 4, &lim).unwrap();
            let p = r
                .betti_polynomial
                .unwrap_or_else(|| panic!("{} i = {i}: {:?}", x.name, r.table.betti));
            assert!(p.start <= r.stable_bound.max(1), "{} i = {i}: {p:?}", x.name);
        }
    }
}

#[test]
fn plane_multiplicities() {
    let lim = Limits::default();
    let r = stability_report(&fixtures::c(), 1, 0, 1..=10, 4, &lim).unwrap();
    let ones_from = |k: usize| -> Vec<u64> { (1..=10).map(|m| u64::from(m >= k)).collect() };
    let expected = BTreeMap::from([(vec![], ones_from(2)), (vec![1], ones_from(3)), (vec![2], ones_from(4))]);
    assert_eq!(r.table.rows, expected);
    assert_eq!(r.observed_constant_onset, Some(4));
    assert!(r.consistent());
    let c2: Vec<BigInt> = (1..=10u32).map(|m| BigInt::from(m * (m - 1) / 2)).collect();
    assert_eq!(r.table.betti, c2);
}

#[test]
fn bf_betti_numbers_of_the_plane() {
    let lim = Limits::default();
    let c = fixtures::c();
    let r0 = bf_constancy(&c, 0, 1..=10, &lim).unwrap();
    assert!(r0.values.iter().all(|(_, v)| *v == BigInt::from(1)));
    assert!(r0.constant_from_claim);
    // BF_1 = ℂ has no H^1; the braid class appears from two points on
    let r1 = bf_constancy(&c, 1, 1..=10, &lim).unwrap();
    assert_eq!(r1.values[0].1, BigInt::from(0));
    assert!(r1.values[1..].iter().all(|(_, v)| *v == BigInt::from(1)));
    assert_eq!(r1.observed_onset, 2);
    assert!(!r1.constant_from_claim);
    for i in 2..=5 {
        let r = bf_constancy(&c, i, 1..=10, &lim).unwrap();
        assert!(r.values.iter().all(|(_, v)| *v == BigInt::from(0)));
    }
}

#[test]
fn bf_betti_one_of_punctured_planes() {
    let lim = Limits::default();
    for a in 1..=3u32 {
        let x = fixtures::c_minus_a(a);
        let r = bf_constancy(&x, 1, 1..=9, &lim).unwrap();
        assert_eq!(r.values[0].1, BigInt::from(a));
        assert_eq!(r.stable_value, BigInt::from(a + 1));
        assert_eq!(r.observed_onset, 2);
    }
    for i in 1..=3u32 {
        let r = bf_constancy(&fixtures::cstar(), i, 1..=9, &lim).unwrap();
        assert_eq!(r.observed_onset, i as usize + 1, "i = {i}");
    }
}

#[test]
fn three_space_has_nothing_in_low_bf_degrees() {
    let lim = Limits::default();
    for i in 1..=4 {
        let r = bf_constancy(&fixtures::rd(3), i, 1..=8, &lim).unwrap();
        assert!(r.values.iter().all(|(_, v)| *v == BigInt::from(0)), "i = {i}");
    }
}
