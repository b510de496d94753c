use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schurq_core::exactalg::{SparsePoly, Sqrt2Rational, Variable};
use schurq_core::partitions::{Partition, StrictPartition};
use schurq_core::symfunc::{
    bialternant_eval, h_poly, pfaffian, power_sum_specialize, q_poly, qq_pair, scalar_determinant, schur, schur_q,
    schur_q_indices, PolyMatrix,
};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn strict(parts: &[u32]) -> StrictPartition {
    StrictPartition::new(parts.to_vec()).unwrap()
}

#[test]
fn homogeneity_up_to_ten() {
    for w in 0..=10 {
        for p in Partition::all_of_size(w) {
            assert!(schur(&p).is_homogeneous_of(w as u64), "S_{p}");
            if p.parts().windows(2).all(|x| x[0] > x[1]) {
                let q = strict(p.parts());
                assert!(schur_q(&q).is_homogeneous_of(w as u64), "Q_{q}");
            }
        }
    }
}

#[test]
fn qq_antisymmetry() {
    for m in 0..=8 {
        for n in 0..=8 {
            assert_eq!(qq_pair(m, n), -&qq_pair(n, m), "({m},{n})");
        }
    }
}

#[test]
fn one_row_functions() {
    for n in 0..=8 {
        assert_eq!(schur(&Partition::new(vec![n]).unwrap()), h_poly(n));
        assert_eq!(schur_q(&StrictPartition::new(vec![n]).unwrap()), q_poly(n));
    }
}

#[test]
fn padding_rule_matches_three_row_expansion() {
    // Pf of the padded 4×4 matrix expanded along the zero row
    for parts in [[3u32, 2, 1], [5, 3, 1], [4, 2, 1], [6, 4, 3]] {
        let [a, b, c] = parts;
        let want = &(&qq_pair(a, b).mul(&q_poly(c)) - &qq_pair(a, c).mul(&q_poly(b))) + &qq_pair(b, c).mul(&q_poly(a));
        assert_eq!(schur_q(&strict(&parts)), want, "{parts:?}");
        assert_eq!(schur_q_indices(&[a, b, c, 0]).unwrap(), want);
    }
    assert!(schur_q_indices(&[3, 2, 1]).is_err());
}

/// Recursive scalar Pfaffian, independent of the library's memoized one.
fn scalar_pfaffian(a: &[Vec<Sqrt2Rational>]) -> Sqrt2Rational {
    let n = a.len();
    if n == 0 {
        return Sqrt2Rational::one();
    }
    let mut acc = Sqrt2Rational::zero();
    for j in 1..n {
        let keep: Vec<usize> = (1..n).filter(|&k| k != j).collect();
        let minor: Vec<Vec<_>> = keep.iter().map(|&r| keep.iter().map(|&c| a[r][c].clone()).collect()).collect();
        let term = &a[0][j] * &scalar_pfaffian(&minor);
        if j % 2 == 1 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

fn skew_matrix() -> impl Strategy<Value = Vec<Vec<Sqrt2Rational>>> {
    prop::sample::select(vec![2usize, 4, 6]).prop_flat_map(|d| {
        prop::collection::vec((-5i64..=5, 1i64..=3, -2i64..=2), d * (d - 1) / 2).prop_map(move |xs| {
            let mut m = vec![vec![Sqrt2Rational::zero(); d]; d];
            let mut it = xs.into_iter();
            for i in 0..d {
                for j in i + 1..d {
                    let (a, den, b) = it.next().unwrap();
                    let x = Sqrt2Rational::new(rat(a, den), rat(b, 1));
                    m[j][i] = -&x;
                    m[i][j] = x;
                }
            }
            m
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pfaffian_squares_to_determinant(m in skew_matrix()) {
        let d = m.len();
        let pm = PolyMatrix::from_fn(d, |i, j| SparsePoly::constant(m[i][j].clone()));
        let pf = pfaffian(&pm).unwrap();
        prop_assert_eq!(pf.clone(), SparsePoly::constant(scalar_pfaffian(&m)));
        prop_assert_eq!(pf.pow(2), SparsePoly::constant(scalar_determinant(m)));
    }
}

fn random_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<BigRational> {
    loop {
        let pt: Vec<BigRational> = (0..n).map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=6))).collect();
        if (0..n).all(|i| (i + 1..n).all(|j| pt[i] != pt[j])) {
            return pt;
        }
    }
}

fn z_point(pt: &[BigRational]) -> BTreeMap<Variable, Sqrt2Rational> {
    pt.iter().enumerate().map(|(k, x)| (Variable::z(k as u32 + 1), Sqrt2Rational::rational(x.clone()))).collect()
}

#[test]
fn jacobi_trudi_agrees_with_bialternant() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let points: Vec<_> = (0..5).map(|_| random_point(&mut rng, 3)).collect();
    for w in 0..=6 {
        for p in Partition::all_of_size(w).into_iter().filter(|p| p.len() <= 3) {
            let spec = power_sum_specialize(&schur(&p), 3).unwrap();
            for pt in &points {
                assert_eq!(spec.eval(&z_point(pt)).unwrap(), bialternant_eval(&p, pt).unwrap(), "S_{p} at {pt:?}");
            }
        }
    }
}

/// `Q_λ(x_1,…,x_N) = 2^ℓ/(N−ℓ)! Σ_{w ∈ S_N} w(x^λ Π_{i ≤ ℓ, i < j} (x_i+x_j)/(x_i−x_j))`.
fn q_by_symmetrization(lam: &[u32], x: &[BigRational]) -> BigRational {
    let n = x.len();
    let l = lam.len();
    let mut perms = vec![vec![]];
    for k in 0..n {
        perms = perms
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..=k).map(move |pos| {
                    let mut q = p.clone();
                    q.insert(pos, k);
                    q
                })
            })
            .collect();
    }
    let mut total = BigRational::zero();
    for w in perms {
        let y: Vec<&BigRational> = w.iter().map(|&i| &x[i]).collect();
        let mut term = BigRational::one();
        for (i, &e) in lam.iter().enumerate() {
            for _ in 0..e {
                term *= y[i];
            }
        }
        for i in 0..l {
            for j in i + 1..n {
                term *= (y[i] + y[j]) / (y[i] - y[j]);
            }
        }
        total += term;
    }
    let fact: i64 = (1..=(n - l) as i64).product();
    total * BigRational::from_integer((1i64 << l).into()) / BigRational::from_integer(fact.into())
}

#[test]
fn schur_q_matches_symmetrization_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for parts in [vec![1u32], vec![2], vec![2, 1], vec![3, 1], vec![3, 2, 1], vec![4, 2], vec![5, 2, 1]] {
        let q = schur_q(&strict(&parts));
        for _ in 0..3 {
            let x = random_point(&mut rng, 3);
            // s_k = 2 p_k(x) / k for odd k
            let at: BTreeMap<Variable, Sqrt2Rational> = (1..=12u32)
                .step_by(2)
                .map(|k| {
                    let pk: BigRational = x.iter().map(|xi| num_traits::pow(xi.clone(), k as usize)).sum();
                    (Variable::s(k), Sqrt2Rational::rational(pk * rat(2, k as i64)))
                })
                .collect();
            assert_eq!(q.eval(&at).unwrap(), Sqrt2Rational::rational(q_by_symmetrization(&parts, &x)), "{parts:?}");
        }
    }
}
