//! Symmetric-function algebra in the variables `t = (t1, t2, …)` and
//! `s = (s1, s3, …)`: complete functions `h_n(t)`, `q_n(s)`, Jacobi–Trudi
//! Schur functions, the pair functions `Q_{m,n}`, Pfaffian Schur
//! Q-functions, and the variable substitutions used by the identities.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{Family, SparsePoly, Sqrt2Rational, Variable};
use crate::partitions::{Partition, StrictPartition};

/// `h_0 … h_max` from `n·h_n = Σ_{k=1..n} k·t_k·h_{n−k}`.
pub fn h_polys(max: u32) -> Vec<SparsePoly> {
    complete_polys(max, Family::T)
}

/// `q_0 … q_max` from `n·q_n = Σ_{k odd ≤ n} k·s_k·q_{n−k}`.
pub fn q_polys(max: u32) -> Vec<SparsePoly> {
    complete_polys(max, Family::S)
}

fn complete_polys(max: u32, family: Family) -> Vec<SparsePoly> {
    let mut out = vec![SparsePoly::one()];
    for n in 1..=max {
        let mut acc = SparsePoly::zero();
        for k in 1..=n {
            if family == Family::S && k % 2 == 0 {
                continue;
            }
            let v = SparsePoly::var(Variable::new(family, k).expect("valid index"));
            let term = v.mul(&out[(n - k) as usize]);
            acc.add_assign_scaled(&term, &Sqrt2Rational::from_ratio(k as i64, n as i64));
        }
        out.push(acc);
    }
    out
}

pub fn h_poly(n: u32) -> SparsePoly {
    h_polys(n).pop().expect("non-empty")
}

pub fn q_poly(n: u32) -> SparsePoly {
    q_polys(n).pop().expect("non-empty")
}

/// Square matrix of polynomials, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    entries: Vec<SparsePoly>,
}

impl PolyMatrix {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> SparsePoly) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &SparsePoly {
        &self.entries[i * self.dim + j]
    }

    pub fn is_skew(&self) -> Option<(usize, usize)> {
        for i in 0..self.dim {
            for j in i..self.dim {
                if self.get(i, j) != &-self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// Determinant by Laplace expansion along the last row, memoized on the set
/// of columns still in play (`O(2^d · d)` polynomial products).
pub fn determinant(a: &PolyMatrix) -> SparsePoly {
    assert!(a.dim <= 24, "determinant: dimension {} too large for subset expansion", a.dim);
    let mut memo: HashMap<u32, SparsePoly> = HashMap::new();
    det_rec(a, (1u32 << a.dim) - 1, &mut memo)
}

fn det_rec(a: &PolyMatrix, cols: u32, memo: &mut HashMap<u32, SparsePoly>) -> SparsePoly {
    if cols == 0 {
        return SparsePoly::one();
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let row = cols.count_ones() as usize - 1;
    let mut acc = SparsePoly::zero();
    for c in 0..a.dim {
        if cols & (1 << c) == 0 || a.get(row, c).is_zero() {
            continue;
        }
        let above = (cols >> (c + 1)).count_ones();
        let minor = det_rec(a, cols & !(1 << c), memo);
        if minor.is_zero() {
            continue;
        }
        let sign = Sqrt2Rational::sign_pow(above as i64);
        acc.add_assign_scaled(&a.get(row, c).mul(&minor), &sign);
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Pfaffian of a skew-symmetric matrix of even dimension, by first-row
/// expansion memoized on the remaining index set.
pub fn pfaffian(a: &PolyMatrix) -> Result<SparsePoly> {
    if a.dim % 2 == 1 {
        return Err(Error::OddDimension(a.dim));
    }
    if let Some((i, j)) = a.is_skew() {
        return Err(Error::NotSkew(i, j));
    }
    assert!(a.dim <= 30, "pfaffian: dimension {} too large", a.dim);
    let mut memo = HashMap::new();
    let full = if a.dim == 0 { 0 } else { (1u32 << a.dim) - 1 };
    Ok(pf_rec(a, full, &mut memo))
}

fn pf_rec(a: &PolyMatrix, set: u32, memo: &mut HashMap<u32, SparsePoly>) -> SparsePoly {
    if set == 0 {
        return SparsePoly::one();
    }
    if let Some(p) = memo.get(&set) {
        return p.clone();
    }
    let first = set.trailing_zeros() as usize;
    let rest = set & !(1 << first);
    let mut acc = SparsePoly::zero();
    let mut pos = 0i64;
    for j in first + 1..a.dim {
        if rest & (1 << j) == 0 {
            continue;
        }
        pos += 1;
        if a.get(first, j).is_zero() {
            continue;
        }
        let sub = pf_rec(a, rest & !(1 << j), memo);
        acc.add_assign_scaled(&a.get(first, j).mul(&sub), &Sqrt2Rational::sign_pow(pos + 1));
    }
    memo.insert(set, acc.clone());
    acc
}

/// `S_λ(t) = det(h_{λ_i + j − i}(t))`.
pub fn schur(lambda: &Partition) -> SparsePoly {
    let d = lambda.len();
    if d == 0 {
        return SparsePoly::one();
    }
    let hs = h_polys(lambda.parts()[0] + d as u32);
    let m = PolyMatrix::from_fn(d, |i, j| {
        let idx = lambda.parts()[i] as i64 + j as i64 - i as i64;
        if idx < 0 {
            SparsePoly::zero()
        } else {
            hs[idx as usize].clone()
        }
    });
    determinant(&m)
}

fn qq_from(qs: &[SparsePoly], m: u32, n: u32) -> SparsePoly {
    if m == n {
        return SparsePoly::zero();
    }
    if m < n {
        return -&qq_from(qs, n, m);
    }
    let mut acc = qs[m as usize].mul(&qs[n as usize]);
    for i in 1..=n {
        let term = qs[(m + i) as usize].mul(&qs[(n - i) as usize]);
        acc.add_assign_scaled(&term, &Sqrt2Rational::integer(if i % 2 == 0 { 2 } else { -2 }));
    }
    acc
}

/// `Q_{m,n}(s)`, extended antisymmetrically to `m ≤ n`.
pub fn qq_pair(m: u32, n: u32) -> SparsePoly {
    qq_from(&q_polys(m + n), m, n)
}

/// Pfaffian of `(Q_{k_i,k_j})` for an arbitrary index list of even length.
pub fn schur_q_indices(indices: &[u32]) -> Result<SparsePoly> {
    let top: u32 = indices.iter().copied().max().unwrap_or(0);
    let qs = q_polys(2 * top);
    let m = PolyMatrix::from_fn(indices.len(), |i, j| qq_from(&qs, indices[i], indices[j]));
    pfaffian(&m)
}

/// `Q_λ(s)`; odd-length `λ` is padded with a single `0`.
pub fn schur_q(lambda: &StrictPartition) -> SparsePoly {
    schur_q_indices(&lambda.even_padded()).expect("padded Q-matrix is skew of even size")
}

fn substitute_with(
    p: &SparsePoly,
    mut image: impl FnMut(Variable) -> Result<Option<SparsePoly>>,
) -> Result<SparsePoly> {
    let mut map = BTreeMap::new();
    for v in p.variables() {
        if let Some(img) = image(v)? {
            map.insert(v, img);
        }
    }
    Ok(p.substitute(&map))
}

fn only_t(v: Variable) -> Result<()> {
    if v.family() == Family::T {
        Ok(())
    } else {
        Err(Error::UnexpectedVariable(v))
    }
}

/// `t_j ↦ 2·t_{2j}`, i.e. `S_ν(t) ↦ S_ν(2t^{(2)})`.
pub fn subst_2t2(p: &SparsePoly) -> Result<SparsePoly> {
    substitute_with(p, |v| {
        only_t(v)?;
        Ok(Some(SparsePoly::var(Variable::t(2 * v.index())).scale(&Sqrt2Rational::integer(2))))
    })
}

/// `t_j ↦ t_j − s_j` for odd `j`, leaving even `t_j` and all `s_j` alone.
pub fn subst_u(p: &SparsePoly) -> SparsePoly {
    substitute_with(p, |v| {
        Ok((v.family() == Family::T && v.index() % 2 == 1)
            .then(|| &SparsePoly::var(v) - &SparsePoly::var(Variable::s(v.index()))))
    })
    .expect("infallible")
}

/// `t_{2j} ↦ 0`, then the `u`-expansion of [`subst_u`].
pub fn subst_odd(p: &SparsePoly) -> SparsePoly {
    let killed = substitute_with(p, |v| Ok((v.family() == Family::T && v.index() % 2 == 0).then(SparsePoly::zero)))
        .expect("infallible");
    subst_u(&killed)
}

/// `s_j ↦ t_j − s_j`: evaluates a function of `s` at the odd
/// `u`-coordinates.
pub fn subst_s_to_u(p: &SparsePoly) -> SparsePoly {
    substitute_with(p, |v| {
        Ok((v.family() == Family::S).then(|| &SparsePoly::var(Variable::t(v.index())) - &SparsePoly::var(v)))
    })
    .expect("infallible")
}

/// `t_j ↦ (z_1^j + … + z_N^j)/j`.
pub fn power_sum_specialize(p: &SparsePoly, n_vars: u32) -> Result<SparsePoly> {
    substitute_with(p, |v| {
        only_t(v)?;
        let j = v.index();
        let mut sum = SparsePoly::zero();
        for k in 1..=n_vars {
            sum = &sum + &SparsePoly::var(Variable::z(k)).pow(j);
        }
        Ok(Some(sum.scale(&Sqrt2Rational::from_ratio(1, j as i64))))
    })
}

/// Determinant over Q(√2) by fraction-based Gaussian elimination.
pub fn scalar_determinant(mut rows: Vec<Vec<Sqrt2Rational>>) -> Sqrt2Rational {
    let d = rows.len();
    let mut det = Sqrt2Rational::one();
    for col in 0..d {
        let Some(pivot) = (col..d).find(|&r| !rows[r][col].is_zero()) else {
            return Sqrt2Rational::zero();
        };
        if pivot != col {
            rows.swap(pivot, col);
            det = -det;
        }
        let p = rows[col][col].clone();
        det = &det * &p;
        let inv = p.inv().expect("nonzero pivot");
        for r in col + 1..d {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] * &inv;
            for c in col..d {
                let delta = &factor * &rows[col][c];
                rows[r][c] -= &delta;
            }
        }
    }
    det
}

/// `S^λ(z) = det(z_i^{λ_j + N − j}) / det(z_i^{N − j})` at a rational point.
pub fn bialternant_eval(lambda: &Partition, point: &[BigRational]) -> Result<Sqrt2Rational> {
    let n = point.len();
    if lambda.len() > n {
        return Ok(Sqrt2Rational::zero());
    }
    let exps = |j: usize| lambda.parts().get(j).copied().unwrap_or(0) as usize + n - 1 - j;
    let power = |x: &BigRational, e: usize| -> Sqrt2Rational {
        let mut acc = BigRational::one();
        for _ in 0..e {
            acc *= x;
        }
        Sqrt2Rational::rational(acc)
    };
    let num: Vec<Vec<_>> = point.iter().map(|x| (0..n).map(|j| power(x, exps(j))).collect()).collect();
    let den: Vec<Vec<_>> = point.iter().map(|x| (0..n).map(|j| power(x, n - 1 - j)).collect()).collect();
    let den = scalar_determinant(den);
    if den.is_zero() {
        return Err(Error::VanishingVandermonde);
    }
    Ok(&scalar_determinant(num) * &den.inv()?)
}
