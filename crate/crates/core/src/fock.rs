//! Neutral-fermion Fock space and the boson-fermion correspondence.
//!
//! States are finite combinations of words `β_{w1} … β_{wr}|vac⟩` with
//! `w1 > … > wr ≥ 0`. The generators obey
//! `β_m β_n + β_n β_m = (−1)^m δ_{m+n,0}` and `β_n|vac⟩ = 0` for `n < 0`.
//! A strict partition `λ` labels the word on its even-length padded parts.
//!
//! Bosonization renames `φ_n = β_{3n}`, `ψ_n = β_{3n+1}`,
//! `ψ*_n = (−1)^{3n+1} β_{−3n−1}`, rewrites the vacuum as
//! `ψ_{−1} … ψ_{−m}|0,−m⟩` and straightens every word into the normal
//! form `φ_{j1}…φ_{ja} ψ_{i1}…ψ_{ir}|0,−m⟩`, whose image under `Φ` is a
//! product of a Schur Q-function and a Schur function.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{SparsePoly, Sqrt2Rational};
use crate::partitions::{self, bar_core, bar_quotient, epsilon, Color, Partition, StrictPartition};
use crate::symfunc::{schur, schur_q};

/// Strictly decreasing list of non-negative β indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct BetaWord(Vec<u32>);

impl BetaWord {
    pub fn new(indices: Vec<u32>) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidArgument(format!("{indices:?} is not strictly decreasing")));
        }
        Ok(Self(indices))
    }

    pub fn vacuum() -> Self {
        Self(Vec::new())
    }

    pub fn of_partition(lambda: &StrictPartition) -> Self {
        Self(lambda.even_padded())
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    /// The strict partition labelling this word, for even-length words.
    pub fn to_partition(&self) -> Option<StrictPartition> {
        self.0.len().is_multiple_of(2).then(|| StrictPartition::new(self.0.clone()).expect("strict word"))
    }
}

impl Ord for BetaWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for BetaWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BetaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_partition() {
            Some(p) if p.is_empty() => write!(f, "|vac⟩"),
            Some(p) => write!(f, "|{p}⟩"),
            None => {
                let inner: Vec<String> = self.0.iter().map(u32::to_string).collect();
                write!(f, "β[{}]|vac⟩", inner.join(","))
            }
        }
    }
}

/// Finite linear combination of basis words over Q(√2).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FockVector {
    terms: BTreeMap<BetaWord, Sqrt2Rational>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vacuum() -> Self {
        Self::word(BetaWord::vacuum())
    }

    pub fn word(w: BetaWord) -> Self {
        Self::from_terms([(w, Sqrt2Rational::one())])
    }

    /// The basis state `|λ⟩`.
    pub fn basis(lambda: &StrictPartition) -> Self {
        Self::word(BetaWord::of_partition(lambda))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (BetaWord, Sqrt2Rational)>) -> Self {
        let mut v = Self::zero();
        for (w, c) in terms {
            v.add_term(w, &c);
        }
        v
    }

    fn add_term(&mut self, w: BetaWord, c: &Sqrt2Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, x| !x.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BetaWord, &Sqrt2Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: &StrictPartition) -> Sqrt2Rational {
        self.terms.get(&BetaWord::of_partition(lambda)).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Sqrt2Rational) -> FockVector {
        FockVector::from_terms(self.terms.iter().map(|(w, x)| (w.clone(), x * c)))
    }

    pub fn add(&self, other: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    fn max_index(&self) -> u32 {
        self.terms.keys().filter_map(|w| w.0.first().copied()).max().unwrap_or(0)
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return writeln!(f, "0");
        }
        for (w, c) in &self.terms {
            writeln!(f, "{c} * {w}")?;
        }
        Ok(())
    }
}

/// `β_n` applied to one word: at most one word survives.
fn beta_on_word(n: i64, w: &[u32]) -> Option<(Sqrt2Rational, Vec<u32>)> {
    if n < 0 {
        let k = n.unsigned_abs() as u32;
        let p = w.iter().position(|&x| x == k)?;
        let mut out = w.to_vec();
        out.remove(p);
        return Some((Sqrt2Rational::sign_pow(p as i64 + n), out));
    }
    let n = n as u32;
    let above = w.iter().take_while(|&&x| x > n).count();
    let sign = Sqrt2Rational::sign_pow(above as i64);
    let mut out = w.to_vec();
    match w.get(above) {
        Some(&x) if x == n && n == 0 => {
            out.remove(above);
            Some((&sign * &Sqrt2Rational::from_ratio(1, 2), out))
        }
        Some(&x) if x == n => None,
        _ => {
            out.insert(above, n);
            Some((sign, out))
        }
    }
}

/// Left multiplication by `β_n`, straightened into the word basis.
pub fn beta_apply(n: i64, v: &FockVector) -> FockVector {
    FockVector::from_terms(
        v.terms.iter().filter_map(|(w, c)| beta_on_word(n, &w.0).map(|(k, out)| (BetaWord(out), c * &k))),
    )
}

fn bilinear(left: i64, right: i64, v: &FockVector) -> FockVector {
    beta_apply(left, &beta_apply(right, v))
}

/// `(−1)^i β_{i+1} β_{−i}` for `i > 0` (part `i` becomes `i+1`), and
/// `β_1 β_0` for `i = 0` (a part `1` is added).
pub fn single_node_action(i: u32, v: &FockVector) -> FockVector {
    if i == 0 {
        bilinear(1, 0, v)
    } else {
        bilinear(i as i64 + 1, -(i as i64), v).scale(&Sqrt2Rational::sign_pow(i as i64))
    }
}

/// The Chevalley lowering operator
/// `f_0 = √2 Σ_m (−1)^{m+1} β_{3m} β_{1−3m}` or
/// `f_1 = Σ_m (−1)^m β_{3m−1} β_{2−3m}`.
pub fn f_apply(i: Color, v: &FockVector) -> FockVector {
    // beyond this range the right factor annihilates every word
    let bound = v.max_index() as i64 / 3 + 2;
    let mut acc = FockVector::zero();
    for m in -bound..=bound {
        let term = match i {
            Color::Zero => bilinear(3 * m, 1 - 3 * m, v).scale(&Sqrt2Rational::sign_pow(m + 1)),
            Color::One => bilinear(3 * m - 1, 2 - 3 * m, v).scale(&Sqrt2Rational::sign_pow(m)),
        };
        acc = acc.add(&term);
    }
    match i {
        Color::Zero => acc.scale(&Sqrt2Rational::sqrt2()),
        Color::One => acc,
    }
}

/// `f_i^n v / n!`.
pub fn f_power_normalized(i: Color, n: u32, v: &FockVector) -> FockVector {
    let mut out = v.clone();
    let mut fact: i64 = 1;
    for k in 1..=n {
        out = f_apply(i, &out);
        fact *= k as i64;
    }
    out.scale(&Sqrt2Rational::from_ratio(1, fact))
}

/// A renamed fermion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fermion {
    Phi(i64),
    Psi(i64),
    PsiStar(i64),
}

/// `β_c` expressed as `±φ`, `±ψ` or `±ψ*`.
pub fn rename(c: i64) -> (i8, Fermion) {
    match c.rem_euclid(3) {
        0 => (1, Fermion::Phi(c / 3)),
        1 => (1, Fermion::Psi((c - 1).div_euclid(3))),
        _ => {
            let sign = if c.rem_euclid(2) == 0 { 1 } else { -1 };
            (sign, Fermion::PsiStar(-(c + 1).div_euclid(3)))
        }
    }
}

/// `coeff · φ_{j1}…φ_{ja} ψ_{i1}…ψ_{ir} |0, charge⟩` with decreasing indices,
/// `j_a ≥ 0` and `i_r ≥ charge`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalWord {
    pub phis: Vec<u32>,
    pub psis: Vec<i64>,
    pub charge: i64,
    pub coeff: Sqrt2Rational,
}

impl fmt::Display for NormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} *", self.coeff)?;
        for j in &self.phis {
            write!(f, " phi{j}")?;
        }
        for i in &self.psis {
            write!(f, " psi{i}")?;
        }
        write!(f, " |0,{}⟩", self.charge)
    }
}

#[derive(Debug, Clone)]
struct ChargedState {
    phis: Vec<u32>,
    psis: Vec<i64>,
    charge: i64,
}

impl ChargedState {
    /// Applies one renamed fermion on the left; `None` means the product
    /// vanishes.
    fn apply(&mut self, op: Fermion) -> Result<Option<Sqrt2Rational>> {
        let past_phis = Sqrt2Rational::sign_pow(self.phis.len() as i64);
        match op {
            Fermion::Phi(n) => {
                let (k, out) = match beta_on_word(n, &self.phis) {
                    Some(r) => r,
                    None => return Ok(None),
                };
                self.phis = out;
                Ok(Some(k))
            }
            Fermion::Psi(n) if n >= self.charge => {
                let above = self.psis.iter().take_while(|&&x| x > n).count();
                if self.psis.get(above) == Some(&n) {
                    return Ok(None);
                }
                self.psis.insert(above, n);
                Ok(Some(&past_phis * &Sqrt2Rational::sign_pow(above as i64)))
            }
            Fermion::Psi(_) => Ok(None),
            Fermion::PsiStar(n) if n >= self.charge => {
                let Some(p) = self.psis.iter().position(|&x| x == n) else {
                    return Ok(None);
                };
                self.psis.remove(p);
                Ok(Some(&past_phis * &Sqrt2Rational::sign_pow(p as i64)))
            }
            Fermion::PsiStar(_) => Err(Error::ChargeTooShallow(-self.charge)),
        }
    }
}

/// Smallest reference depth `m ≥ 1` used for a word with largest index `top`.
pub fn canonical_depth(top: u32) -> i64 {
    ((top as i64 + 1 + 2) / 3).max(1)
}

/// Normal form of `β_{w1}…β_{wr}|vac⟩` relative to `|0,−m⟩`.
pub fn normal_form_at(word: &BetaWord, m: i64) -> Result<Option<NormalWord>> {
    if m < 1 {
        return Err(Error::InvalidArgument(format!("reference depth must be positive, got {m}")));
    }
    let mut st = ChargedState { phis: Vec::new(), psis: Vec::new(), charge: -m };
    let mut coeff = Sqrt2Rational::one();
    // |vac⟩ = ψ_{−1} ψ_{−2} … ψ_{−m} |0,−m⟩, applied right to left
    let vacuum_block = (1..=m).rev().map(|j| (1i8, Fermion::Psi(-j)));
    let word_block = word.indices().iter().rev().map(|&c| rename(c as i64));
    for (sign, op) in vacuum_block.chain(word_block) {
        match st.apply(op)? {
            Some(k) => {
                coeff = &coeff * &k;
                if sign < 0 {
                    coeff = -coeff;
                }
            }
            None => return Ok(None),
        }
    }
    Ok(Some(NormalWord { phis: st.phis, psis: st.psis, charge: st.charge, coeff }))
}

/// Normal forms of the basis state `|λ⟩` at the canonical reference charge.
pub fn to_normal_words(lambda: &StrictPartition) -> Vec<NormalWord> {
    let word = BetaWord::of_partition(lambda);
    normal_form_at(&word, canonical_depth(lambda.largest()))
        .expect("canonical depth covers every ψ* index")
        .into_iter()
        .collect()
}

/// Element `Σ P_{σ,m}(t,s) θ^σ e^{mα}` of `C[t,s] ⊗ Z`, keyed by `(σ, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BosonElement {
    terms: BTreeMap<(u8, i64), SparsePoly>,
}

impl BosonElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(sigma: u8, charge: i64, p: SparsePoly) -> Self {
        let mut out = Self::zero();
        out.add_assign(sigma, charge, &p);
        out
    }

    pub fn add_assign(&mut self, sigma: u8, charge: i64, p: &SparsePoly) {
        let key = (sigma % 2, charge);
        let slot = self.terms.entry(key).or_default();
        *slot = &*slot + p;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &BosonElement) -> BosonElement {
        let mut out = self.clone();
        for (&(s, m), p) in &other.terms {
            out.add_assign(s, m, p);
        }
        out
    }

    pub fn scale(&self, c: &Sqrt2Rational) -> BosonElement {
        let mut out = Self::zero();
        for (&(s, m), p) in &self.terms {
            out.add_assign(s, m, &p.scale(c));
        }
        out
    }

    pub fn get(&self, sigma: u8, charge: i64) -> SparsePoly {
        self.terms.get(&(sigma, charge)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> Vec<(u8, i64)> {
        self.terms.keys().copied().collect()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u8, i64), &SparsePoly)> {
        self.terms.iter()
    }
}

impl fmt::Display for BosonElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return writeln!(f, "0");
        }
        for ((s, m), p) in &self.terms {
            writeln!(f, "({s}, {m}): {p}")?;
        }
        Ok(())
    }
}

/// `Φ(φ_{j1}…φ_{ja} ψ_{i1}…ψ_{ir}|0,c⟩) =
/// √2^{−a} Q_{(j)}(s) S_{(i−c)−δ_r}(t) θ^a e^{(c+r)α}`.
pub fn phi_normal_word(w: &NormalWord) -> BosonElement {
    let a = w.phis.len() as i64;
    let r = w.psis.len() as i64;
    let q_index = StrictPartition::new(w.phis.clone()).expect("φ indices are strict");
    let s_index: Vec<u32> =
        w.psis.iter().enumerate().map(|(j, &i)| (i - w.charge - (r - 1 - j as i64)) as u32).collect();
    let s_index = Partition::new(s_index).expect("normal form yields a partition");
    let poly = schur_q(&q_index).mul(&schur(&s_index));
    let coeff = &w.coeff * &Sqrt2Rational::sqrt2_pow(-a);
    BosonElement::single((a % 2) as u8, w.charge + r, poly.scale(&coeff))
}

/// The boson-fermion correspondence, computed through normal forms.
pub fn phi(v: &FockVector) -> BosonElement {
    let mut out = BosonElement::zero();
    for (w, c) in v.terms() {
        let depth = canonical_depth(w.indices().first().copied().unwrap_or(0));
        let nw = normal_form_at(w, depth).expect("canonical depth covers every ψ* index");
        if let Some(nw) = nw {
            out = out.add(&phi_normal_word(&nw).scale(c));
        }
    }
    out
}

/// Which set `I^n_i(c_{±m})` a partition is taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AddedContext {
    pub color: Color,
    pub m: u32,
    pub n: u32,
}

impl AddedContext {
    /// `c_m` for color 1, `c_{−m}` for color 0.
    pub fn core(&self) -> StrictPartition {
        match self.color {
            Color::One => bar_core(self.m as i64),
            Color::Zero => bar_core(-(self.m as i64)),
        }
    }

    pub fn members(&self) -> Vec<StrictPartition> {
        partitions::enumerate_added(&self.core(), self.color, self.n)
    }

    /// `(σ, charge)` on which `Φ(|λ⟩)` is supported.
    pub fn sector(&self) -> (u8, i64) {
        let (m, n) = (self.m as i64, self.n as i64);
        match self.color {
            Color::One => (epsilon(m) as u8, m - 2 * n),
            Color::Zero => (epsilon(n + m) as u8, n - m),
        }
    }
}

/// `Φ(|λ⟩)` from the closed formula in terms of the 3-bar quotient and the
/// statistics `f, g, h`, without any fermionic rewriting.
pub fn phi_closed_form(lambda: &StrictPartition, ctx: AddedContext) -> Result<BosonElement> {
    let core = ctx.core();
    if lambda.size() != core.size() + ctx.n || !partitions::is_added(&core, lambda, ctx.color) {
        return Err(Error::NotInAddedSet(lambda.to_string(), ctx.n, ctx.color.index(), core.to_string()));
    }
    let st = partitions::stats(lambda);
    let quotient = bar_quotient(lambda);
    let (sigma, charge) = ctx.sector();
    let m = ctx.m as i64;
    let (coeff, poly) = match ctx.color {
        Color::One => {
            let sign = Sqrt2Rational::sign_pow(st.f as i64 + m);
            (&sign * &Sqrt2Rational::sqrt2_pow(-(epsilon(m) as i64)), schur(&quotient.q1))
        }
        Color::Zero => {
            let sign = Sqrt2Rational::integer(partitions::delta0(lambda, ctx.m) as i64);
            (&sign * &Sqrt2Rational::sqrt2_pow(-(st.a as i64)), schur_q(&quotient.q0).mul(&schur(&quotient.q1)))
        }
    };
    Ok(BosonElement::single(sigma, charge, poly.scale(&coeff)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }
    fn ket(parts: &[u32]) -> FockVector {
        FockVector::basis(&sp(parts))
    }

    #[test]
    fn beta_examples() {
        assert!(beta_apply(-1, &FockVector::vacuum()).is_zero());
        let built = beta_apply(1, &beta_apply(0, &FockVector::vacuum()));
        assert_eq!(built, ket(&[1]));
        // β0 β1 β0 |vac⟩ = −β1 β0 β0 |vac⟩ = −½ β1|vac⟩
        let got = beta_apply(0, &ket(&[1]));
        let want = FockVector::from_terms([(BetaWord::new(vec![1]).unwrap(), Sqrt2Rational::from_ratio(-1, 2))]);
        assert_eq!(got, want);
        // β_{-n} β_n |vac⟩ = (−1)^n |vac⟩
        let v = beta_apply(-3, &beta_apply(3, &FockVector::vacuum()));
        assert_eq!(v, FockVector::vacuum().scale(&Sqrt2Rational::integer(-1)));
    }

    #[test]
    fn single_node_examples() {
        assert_eq!(single_node_action(4, &ket(&[4, 1])), ket(&[5, 1]));
        assert!(single_node_action(1, &ket(&[2, 1])).is_zero());
        assert_eq!(single_node_action(0, &ket(&[2])), ket(&[2, 1]).scale(&Sqrt2Rational::from_ratio(1, 2)));
        assert_eq!(single_node_action(0, &ket(&[3, 2])), ket(&[3, 2, 1]));
        assert!(single_node_action(0, &ket(&[3, 1])).is_zero());
    }

    #[test]
    fn f_examples() {
        assert_eq!(f_apply(Color::One, &ket(&[1])), ket(&[2]).scale(&Sqrt2Rational::integer(2)));
        assert_eq!(f_apply(Color::Zero, &FockVector::vacuum()), ket(&[1]).scale(&Sqrt2Rational::sqrt2()));
        assert!(f_apply(Color::One, &FockVector::vacuum()).is_zero());
        assert_eq!(f_power_normalized(Color::Zero, 0, &ket(&[5, 2])), ket(&[5, 2]));
    }

    #[test]
    fn f0_cubed_on_c_minus_3() {
        let v = f_power_normalized(Color::Zero, 3, &FockVector::basis(&bar_core(-3)));
        // three orderings of the steps 8→9→10 and 5→6, each weighted √2³, over 3!
        assert_eq!(v.coefficient(&sp(&[10, 6, 2])), Sqrt2Rational::sqrt2());
    }

    #[test]
    fn renaming() {
        assert_eq!(rename(20), (1, Fermion::PsiStar(-7)));
        assert_eq!(rename(7), (1, Fermion::Psi(2)));
        assert_eq!(rename(18), (1, Fermion::Phi(6)));
        assert_eq!(rename(8), (1, Fermion::PsiStar(-3)));
        assert_eq!(rename(5), (-1, Fermion::PsiStar(-2)));
        assert_eq!(rename(-2), (1, Fermion::Psi(-1)));
    }

    #[test]
    fn worked_normal_form() {
        let nf = to_normal_words(&sp(&[20, 18, 16, 12, 8, 7, 2]));
        assert_eq!(nf.len(), 1);
        let w = &nf[0];
        assert_eq!(w.charge, -7);
        assert_eq!(w.phis, vec![6, 4, 0]);
        assert_eq!(w.psis, vec![5, 2, -2, -4, -5, -6]);
        assert_eq!(w.coeff, Sqrt2Rational::one());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&FockVector::vacuum()), BosonElement::single(0, 0, SparsePoly::one()));
        assert_eq!(phi(&ket(&[4, 1])), BosonElement::single(0, 2, SparsePoly::one()));
        let minus_half_r2 = -Sqrt2Rational::sqrt2_pow(-1);
        assert_eq!(phi(&ket(&[2])), BosonElement::single(1, -1, SparsePoly::constant(minus_half_r2)));
        // √2 φ0 |vac⟩ ↦ θ
        let v = FockVector::word(BetaWord::new(vec![0]).unwrap()).scale(&Sqrt2Rational::sqrt2());
        assert_eq!(phi(&v), BosonElement::single(1, 0, SparsePoly::one()));
    }

    #[test]
    fn closed_form_examples() {
        let ctx = AddedContext { color: Color::Zero, m: 2, n: 2 };
        let lam = sp(&[7, 2]);
        assert_eq!(phi(&FockVector::basis(&lam)), phi_closed_form(&lam, ctx).unwrap());
        assert_eq!(phi_closed_form(&lam, ctx).unwrap().support(), vec![(0, 0)]);

        let ctx = AddedContext { color: Color::One, m: 4, n: 3 };
        let lam = sp(&[11, 8, 4, 2]);
        let got = phi_closed_form(&lam, ctx).unwrap();
        assert_eq!(got.support(), vec![(0, -2)]);
        assert_eq!(phi(&FockVector::basis(&lam)), got);

        let ctx = AddedContext { color: Color::Zero, m: 3, n: 3 };
        assert!(phi_closed_form(&sp(&[11, 8, 4, 2]), ctx).is_err());
    }
}
