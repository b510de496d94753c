use num_traits::One;
use proptest::prelude::*;
use schurq_core::exactalg::Sqrt2Rational;
use schurq_core::fock::{
    beta_apply, canonical_depth, f_apply, normal_form_at, phi, phi_normal_word, AddedContext, BetaWord, BosonElement,
    FockVector,
};
use schurq_core::partitions::{Color, StrictPartition};

fn word() -> impl Strategy<Value = BetaWord> {
    prop::collection::btree_set(0u32..9, 0..5).prop_map(|s| BetaWord::new(s.into_iter().rev().collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn anticommutation(w in word(), m in -8i64..=8, n in -8i64..=8) {
        let v = FockVector::word(w);
        let mn = beta_apply(m, &beta_apply(n, &v));
        let nm = beta_apply(n, &beta_apply(m, &v));
        let central = if m + n == 0 { v.scale(&Sqrt2Rational::sign_pow(m)) } else { FockVector::zero() };
        prop_assert_eq!(mn.add(&nm), central);
    }
}

fn all_strict_with_top(top: u32) -> Vec<StrictPartition> {
    (0u32..1 << top)
        .map(|mask| {
            let parts: Vec<u32> = (1..=top).rev().filter(|j| mask & (1 << (j - 1)) != 0).collect();
            StrictPartition::new(parts).unwrap()
        })
        .collect()
}

/// Single-node additions of color `i` written out on the parts directly.
fn combinatorial_f(i: Color, lam: &StrictPartition) -> FockVector {
    let parts = lam.parts();
    let mut terms = Vec::new();
    let grow = |p: u32| match i {
        Color::One => p % 3 == 1,
        Color::Zero => p % 3 != 1,
    };
    for (r, &p) in parts.iter().enumerate() {
        if grow(p) && (r == 0 || parts[r - 1] != p + 1) {
            let mut mu = parts.to_vec();
            mu[r] += 1;
            terms.push((mu, Sqrt2Rational::one()));
        }
    }
    if i == Color::Zero && parts.last() != Some(&1) {
        let mut mu = parts.to_vec();
        mu.push(1);
        let c = if parts.len() % 2 == 1 { Sqrt2Rational::from_ratio(1, 2) } else { Sqrt2Rational::one() };
        terms.push((mu, c));
    }
    let scale = match i {
        Color::One => Sqrt2Rational::integer(2),
        Color::Zero => Sqrt2Rational::sqrt2(),
    };
    FockVector::from_terms(
        terms.into_iter().map(|(mu, c)| (BetaWord::of_partition(&StrictPartition::new(mu).unwrap()), &c * &scale)),
    )
}

#[test]
fn f_action_is_combinatorial() {
    for lam in all_strict_with_top(8) {
        for i in [Color::Zero, Color::One] {
            assert_eq!(f_apply(i, &FockVector::basis(&lam)), combinatorial_f(i, &lam), "f_{i} on {lam}");
        }
    }
}

#[test]
fn phi_supported_on_predicted_sector() {
    for i in [Color::Zero, Color::One] {
        for m in 0..=3 {
            for n in 0..=3 {
                let ctx = AddedContext { color: i, m, n };
                for lam in ctx.members() {
                    assert_eq!(phi(&FockVector::basis(&lam)).support(), vec![ctx.sector()], "{lam} in {ctx:?}");
                }
            }
        }
    }
}

#[test]
fn normal_form_independent_of_reference_depth() {
    for lam in all_strict_with_top(9) {
        let w = BetaWord::of_partition(&lam);
        let m0 = canonical_depth(lam.largest());
        let image = |m: i64| normal_form_at(&w, m).unwrap().map(|nw| phi_normal_word(&nw)).unwrap_or_default();
        let base: BosonElement = image(m0);
        for extra in 1..=3 {
            assert_eq!(image(m0 + extra), base, "{lam} at depth {}", m0 + extra);
        }
    }
}

#[test]
fn too_shallow_reference_is_an_error() {
    let w = BetaWord::of_partition(&StrictPartition::new(vec![8]).unwrap());
    assert!(normal_form_at(&w, 2).is_err());
    assert!(normal_form_at(&w, 3).is_ok());
}
