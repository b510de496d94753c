use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::Sqrt2Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    T,
    S,
    Z,
}

/// A polynomial indeterminate `t_j`, `s_j` (odd `j` only) or `z_j`.
///
/// The derived order is the canonical variable order
/// `t1 < t2 < … < s1 < s3 < … < z1 < z2 < …`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable {
    family: Family,
    index: u32,
}

impl Variable {
    pub fn new(family: Family, index: u32) -> Result<Self> {
        if index == 0 {
            return Err(Error::InvalidArgument("variable indices start at 1".into()));
        }
        if family == Family::S && index.is_multiple_of(2) {
            return Err(Error::InvalidArgument(format!("s{index} does not exist; s-indices are odd")));
        }
        Ok(Self { family, index })
    }

    pub fn t(index: u32) -> Self {
        Self::new(Family::T, index).expect("invalid t index")
    }

    pub fn s(index: u32) -> Self {
        Self::new(Family::S, index).expect("invalid s index")
    }

    pub fn z(index: u32) -> Self {
        Self::new(Family::Z, index).expect("invalid z index")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    /// Grading weight: `t_j` and `s_j` weigh `j`, `z_j` weighs 1.
    pub fn weight(&self) -> u64 {
        match self.family {
            Family::T | Family::S => self.index as u64,
            Family::Z => 1,
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.family {
            Family::T => 't',
            Family::S => 's',
            Family::Z => 'z',
        };
        write!(f, "{c}{}", self.index)
    }
}

impl FromStr for Variable {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('t') => Family::T,
            Some('s') => Family::S,
            Some('z') => Family::Z,
            _ => return Err(Error::Parse(format!("bad variable `{s}`"))),
        };
        let index = chars.as_str().parse().map_err(|_| Error::Parse(format!("bad variable `{s}`")))?;
        Variable::new(family, index)
    }
}

/// A power product with positive exponents, stored sorted by variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Variable, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(v: Variable) -> Self {
        Self(vec![(v, 1)])
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (Variable, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (v, e) in powers {
            *map.entry(v).or_insert(0) += e;
        }
        Self(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn powers(&self) -> &[(Variable, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.0.iter().find(|(w, _)| *w == v).map_or(0, |&(_, e)| e)
    }

    pub fn weighted_degree(&self) -> u64 {
        self.0.iter().map(|(v, e)| v.weight() * *e as u64).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }
}

/// Canonical term order: higher weighted degree first, then lexicographic
/// with `t1` the most significant variable (larger exponent first).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.weighted_degree().cmp(&self.weighted_degree()).then_with(|| {
            for (x, y) in self.0.iter().zip(other.0.iter()) {
                let ord = x.0.cmp(&y.0).then_with(|| y.1.cmp(&x.1));
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            other.0.len().cmp(&self.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial over Q(√2). No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, Sqrt2Rational>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Sqrt2Rational::one())
    }

    pub fn constant(c: Sqrt2Rational) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn monomial(m: Monomial, c: Sqrt2Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn var(v: Variable) -> Self {
        Self::monomial(Monomial::var(v), Sqrt2Rational::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Sqrt2Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Sqrt2Rational> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_default() += &c;
        }
        Self::from_accumulator(acc)
    }

    fn from_accumulator(acc: HashMap<Monomial, Sqrt2Rational>) -> Self {
        Self { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
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

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Sqrt2Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Sqrt2Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Constant term, or `None` if the polynomial has non-constant terms.
    pub fn as_constant(&self) -> Option<Sqrt2Rational> {
        match self.terms.len() {
            0 => Some(Sqrt2Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn variables(&self) -> Vec<Variable> {
        let mut vars: Vec<Variable> = self.terms.keys().flat_map(|m| m.powers().iter().map(|(v, _)| *v)).collect();
        vars.sort();
        vars.dedup();
        vars
    }

    pub fn scale(&self, c: &Sqrt2Rational) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero();
        }
        Self { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        out.add_assign_scaled(other, &Sqrt2Rational::one());
        out
    }

    /// `self += c · other`.
    pub fn add_assign_scaled(&mut self, other: &SparsePoly, c: &Sqrt2Rational) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            let delta = x * c;
            match self.terms.get_mut(m) {
                Some(y) => {
                    *y += &delta;
                    if y.is_zero() {
                        self.terms.remove(m);
                    }
                }
                None => {
                    self.terms.insert(m.clone(), delta);
                }
            }
        }
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        if self.is_zero() || other.is_zero() {
            return SparsePoly::zero();
        }
        let mut acc: HashMap<Monomial, Sqrt2Rational> = HashMap::with_capacity(self.len() * other.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *acc.entry(m1.mul(m2)).or_default() += &(c1 * c2);
            }
        }
        Self::from_accumulator(acc)
    }

    pub fn pow(&self, mut e: u32) -> SparsePoly {
        let mut base = self.clone();
        let mut acc = SparsePoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Ring homomorphism sending each mapped variable to its image;
    /// unmapped variables pass through unchanged.
    pub fn substitute(&self, images: &BTreeMap<Variable, SparsePoly>) -> SparsePoly {
        let mut power_cache: HashMap<(Variable, u32), SparsePoly> = HashMap::new();
        let mut acc: HashMap<Monomial, Sqrt2Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut product = SparsePoly::constant(c.clone());
            for &(v, e) in m.powers() {
                match images.get(&v) {
                    Some(img) => {
                        let pw = power_cache.entry((v, e)).or_insert_with(|| img.pow(e));
                        product = product.mul(pw);
                    }
                    None => kept.push((v, e)),
                }
                if product.is_zero() {
                    break;
                }
            }
            let kept = Monomial(kept);
            for (pm, pc) in product.terms {
                *acc.entry(pm.mul(&kept)).or_default() += &pc;
            }
        }
        Self::from_accumulator(acc)
    }

    pub fn eval(&self, point: &BTreeMap<Variable, Sqrt2Rational>) -> Result<Sqrt2Rational> {
        let mut total = Sqrt2Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for &(v, e) in m.powers() {
                let x = point.get(&v).ok_or(Error::MissingVariable(v))?;
                term = &term * &x.pow(e);
            }
            total += &term;
        }
        Ok(total)
    }

    /// Maximum weighted degree over the support; `None` for the zero polynomial.
    pub fn weighted_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::weighted_degree).max()
    }

    /// True when every term has weighted degree exactly `w` (the zero
    /// polynomial is homogeneous of every weight).
    pub fn is_homogeneous_of(&self, w: u64) -> bool {
        self.terms.keys().all(|m| m.weighted_degree() == w)
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        SparsePoly::add(self, rhs)
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, &-Sqrt2Rational::one());
        out
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        SparsePoly::mul(self, rhs)
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.scale(&-Sqrt2Rational::one())
    }
}

impl From<Variable> for SparsePoly {
    fn from(v: Variable) -> Self {
        SparsePoly::var(v)
    }
}

/// Canonical text form, e.g. `1/2*t1^2 + t2` or `t1^2 - s1^2`.
impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative_rational();
            let mag = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for SparsePoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
