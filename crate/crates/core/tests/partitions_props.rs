use std::collections::BTreeSet;

use proptest::prelude::*;
use schurq_core::partitions::{
    bar_core, bar_quotient, bar_quotient_with_k, canonical_k, color, enumerate_added, Color, StrictPartition,
};

/// All strict partitions of `n`, generated independently of the library.
fn strict_of_size(n: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, below: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..below.min(rest + 1)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n + 1, &mut Vec::new(), &mut out);
    out
}

/// Brute-force `I^n_i(core)`: filter every strict partition of the right size.
fn brute_added(core: &[u32], i: u32, n: u32) -> BTreeSet<Vec<u32>> {
    let size = core.iter().sum::<u32>() + n;
    strict_of_size(size)
        .into_iter()
        .filter(|mu| {
            mu.len() >= core.len()
                && mu.iter().enumerate().all(|(r, &len)| {
                    let base = core.get(r).copied().unwrap_or(0);
                    base <= len && (base + 1..=len).all(|j| u32::from(j % 3 == 2) == i)
                })
        })
        .collect()
}

fn parts_set(v: &[StrictPartition]) -> BTreeSet<Vec<u32>> {
    v.iter().map(|p| p.parts().to_vec()).collect()
}

#[test]
fn enumeration_matches_brute_force() {
    for m in -4i64..=4 {
        let core = bar_core(m);
        for i in [Color::Zero, Color::One] {
            for n in 0..=4 {
                let got = enumerate_added(&core, i, n);
                assert_eq!(got.len(), parts_set(&got).len(), "duplicates at m={m}");
                assert_eq!(parts_set(&got), brute_added(core.parts(), i.index() as u32, n), "m={m} i={i} n={n}");
                for mu in &got {
                    assert_eq!(mu.size(), core.size() + n);
                    for (r, &len) in mu.parts().iter().enumerate() {
                        let base = core.parts().get(r).copied().unwrap_or(0);
                        assert!((base + 1..=len).all(|j| color(j) == i));
                    }
                }
            }
        }
    }
}

#[test]
fn successive_addability() {
    for m in -3i64..=3 {
        let core = bar_core(m);
        for i in [Color::Zero, Color::One] {
            for n in 1..=4 {
                let prev = parts_set(&enumerate_added(&core, i, n - 1));
                for mu in enumerate_added(&core, i, n) {
                    let parts = mu.parts();
                    // removing the last node of some row must land in the previous set
                    let reachable = (0..parts.len()).any(|r| {
                        let mut v = parts.to_vec();
                        v[r] -= 1;
                        v.retain(|&x| x > 0);
                        prev.contains(&v)
                    });
                    assert!(reachable, "{mu} at m={m} i={i} n={n}");
                }
            }
        }
    }
}

#[test]
fn color_one_additions_have_empty_first_quotient() {
    for m in 1i64..=4 {
        for n in 0..=4 {
            for mu in enumerate_added(&bar_core(m), Color::One, n) {
                assert!(bar_quotient(&mu).q0.is_empty(), "{mu}");
            }
        }
    }
}

#[test]
fn cores_have_empty_quotients() {
    for m in -6i64..=6 {
        let q = bar_quotient(&bar_core(m));
        assert!(q.q0.is_empty() && q.q1.is_empty(), "m={m}: {:?}", q);
    }
}

fn strict_partition() -> impl Strategy<Value = StrictPartition> {
    prop::collection::btree_set(1u32..30, 0..8)
        .prop_map(|s| StrictPartition::new(s.into_iter().rev().collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn quotient_independent_of_k(lam in strict_partition(), extra in 1u32..4) {
        let k = canonical_k(&lam);
        prop_assert_eq!(bar_quotient_with_k(&lam, k + extra).unwrap(), bar_quotient(&lam));
    }

    #[test]
    fn padding_round_trip(lam in strict_partition()) {
        let padded = lam.even_padded();
        prop_assert_eq!(padded.len() % 2, 0);
        prop_assert_eq!(StrictPartition::new(padded).unwrap(), lam.clone());
        prop_assert_eq!(lam.to_string().parse::<StrictPartition>().unwrap(), lam);
    }
}
