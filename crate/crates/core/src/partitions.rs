//! Strict-partition combinatorics for the 3-bar abacus: node colors,
//! 3-bar cores `c_m`, the sets `I^n_i(c_m)` of partitions obtained by
//! adding `n` nodes of one color, 3-bar quotients, and the statistics and
//! signs built on them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition with weakly decreasing positive parts (trailing zeros are
/// dropped on construction).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// The rectangle `(cols^rows)`.
    pub fn rectangle(rows: u32, cols: u32) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Self(vec![cols; rows as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    if parts.is_empty() {
        return write!(f, "()");
    }
    for (k, p) in parts.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() || s == "()" || s == "empty" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            let v: u32 = x.trim().parse().map_err(|_| Error::Parse(format!("bad part `{x}` in `{s}`")))?;
            if v == 0 {
                return Err(Error::Parse(format!("zero parts are not allowed in `{s}`")));
            }
            Ok(v)
        })
        .collect()
}

/// A strict partition in canonical zero-free form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StrictPartition(Vec<u32>);

impl StrictPartition {
    /// Accepts strictly decreasing parts; a single trailing zero (the
    /// even-length padding) is stripped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidArgument(format!("{parts:?} is not a strict partition")));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn largest(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Parts with a single `0` appended when the length is odd.
    pub fn even_padded(&self) -> Vec<u32> {
        let mut v = self.0.clone();
        if v.len() % 2 == 1 {
            v.push(0);
        }
        v
    }

    pub fn as_partition(&self) -> Partition {
        Partition(self.0.clone())
    }

    /// The trapezoid `(m, m-1, …, m-n+1)`.
    pub fn trapezoid(m: u32, n: u32) -> Result<Self> {
        if n > m + 1 {
            return Err(Error::InvalidArgument(format!("trapezoid needs m - n + 1 >= 0, got m={m}, n={n}")));
        }
        StrictPartition::new((0..n).map(|k| m - k).collect())
    }

    /// Does the diagram of `self` contain the diagram of `other`?
    pub fn contains(&self, other: &StrictPartition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }
}

/// Descending lexicographic order, e.g. `(7,2) < (6,3) < (6,2,1)`.
impl Ord for StrictPartition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for StrictPartition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl FromStr for StrictPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StrictPartition::new(parse_parts(s)?)
    }
}

/// Node color on the 3-bar abacus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Color {
    Zero,
    One,
}

impl Color {
    pub fn index(self) -> u8 {
        match self {
            Color::Zero => 0,
            Color::One => 1,
        }
    }
}

impl TryFrom<u8> for Color {
    type Error = Error;
    fn try_from(i: u8) -> Result<Self> {
        match i {
            0 => Ok(Color::Zero),
            1 => Ok(Color::One),
            _ => Err(Error::InvalidArgument(format!("color must be 0 or 1, got {i}"))),
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// Color of every node in column `j` (1-based).
pub fn color(j: u32) -> Color {
    assert!(j >= 1, "columns are 1-based");
    if j % 3 == 2 {
        Color::One
    } else {
        Color::Zero
    }
}

/// The 3-bar core `c_m`.
pub fn bar_core(m: i64) -> StrictPartition {
    let k = m.unsigned_abs() as u32;
    let offset = if m > 0 { 2 } else { 1 };
    StrictPartition((1..=k).rev().map(|j| 3 * j - offset).collect())
}

/// Is `mu` obtained from `core` by adding nodes of color `i` only?
pub fn is_added(core: &StrictPartition, mu: &StrictPartition, i: Color) -> bool {
    if !mu.contains(core) {
        return false;
    }
    mu.parts().iter().enumerate().all(|(row, &len)| {
        let base = core.parts().get(row).copied().unwrap_or(0);
        (base + 1..=len).all(|col| color(col) == i)
    })
}

/// The set `I^n_i(core)`: strict partitions containing `core`, with `n`
/// more nodes, all of color `i`. Sorted in descending lexicographic order.
pub fn enumerate_added(core: &StrictPartition, i: Color, n: u32) -> Vec<StrictPartition> {
    // Each existing row may be extended; new rows start at column 1 and hold
    // at most one node per new row before strictness is violated, so `n`
    // spare rows always suffice.
    let rows: Vec<u32> = core.parts().iter().copied().chain(std::iter::repeat_n(0, n as usize)).collect();
    let mut out = Vec::new();
    let mut cur = rows.clone();
    distribute(&rows, 0, n, i, &mut cur, &mut out);
    out.sort();
    out.dedup();
    out
}

fn distribute(base: &[u32], row: usize, left: u32, i: Color, cur: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
    if row == base.len() {
        if left == 0 {
            let positive: Vec<u32> = cur.iter().copied().filter(|&p| p > 0).collect();
            // zero rows must trail and positive rows must stay strict
            let trailing = cur.iter().skip_while(|&&p| p > 0).all(|&p| p == 0);
            if trailing && positive.windows(2).all(|w| w[0] > w[1]) {
                out.push(StrictPartition(positive));
            }
        }
        return;
    }
    let mut r = 0;
    loop {
        cur[row] = base[row] + r;
        distribute(base, row + 1, left - r, i, cur, out);
        if r == left || color(base[row] + r + 1) != i {
            break;
        }
        r += 1;
    }
    cur[row] = base[row];
}

/// Parts of the even-length padded view, split by residue mod 3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidueSplit {
    pub p0: Vec<u32>,
    pub p1: Vec<u32>,
    pub p2: Vec<u32>,
}

pub fn residue_split(lambda: &StrictPartition) -> ResidueSplit {
    let mut split = ResidueSplit { p0: Vec::new(), p1: Vec::new(), p2: Vec::new() };
    for p in lambda.even_padded() {
        match p % 3 {
            0 => split.p0.push(p),
            1 => split.p1.push(p),
            _ => split.p2.push(p),
        }
    }
    split
}

/// The 3-bar quotient `(λ[0], λ[1])`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BarQuotient {
    pub q0: StrictPartition,
    pub q1: Partition,
}

/// Smallest admissible `k` for the `λ[1]` construction.
pub fn canonical_k(lambda: &StrictPartition) -> u32 {
    let split = residue_split(lambda);
    let top = split.p2.first().copied().unwrap_or(0);
    if split.p2.is_empty() {
        1
    } else {
        (top + 1).div_ceil(3).max(1)
    }
}

pub fn bar_quotient(lambda: &StrictPartition) -> BarQuotient {
    bar_quotient_with_k(lambda, canonical_k(lambda)).expect("canonical k is admissible")
}

/// `λ[1]` built from the bead sequence `M(k, λ)`; `k` must satisfy
/// `3k ≥ λ⁽²⁾₁ + 1`.
pub fn bar_quotient_with_k(lambda: &StrictPartition, k: u32) -> Result<BarQuotient> {
    let split = residue_split(lambda);
    if let Some(&top) = split.p2.first() {
        if 3 * k < top + 1 {
            return Err(Error::InvalidArgument(format!("k = {k} is below ({top}+1)/3")));
        }
    }
    let q0 = StrictPartition::new(split.p0.iter().map(|p| p / 3).collect())?;

    let removed: Vec<i64> = split.p2.iter().map(|&p| -((p as i64 + 1) / 3)).collect();
    let beads: Vec<i64> = split
        .p1
        .iter()
        .map(|&p| (p as i64 - 1) / 3)
        .chain((1..=k as i64).map(|j| -j).filter(|b| !removed.contains(b)))
        .collect();
    let shift = split.p1.len() as i64 - split.p2.len() as i64;
    let q1: Vec<u32> = beads
        .iter()
        .enumerate()
        .map(|(idx, &b)| {
            let v = b - (shift - 1 - idx as i64);
            debug_assert!(v >= 0, "negative entry in λ[1]");
            v as u32
        })
        .collect();
    Ok(BarQuotient { q0, q1: Partition::new(q1)? })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Stats {
    /// Sum of the parts `≡ 2 (mod 3)`.
    pub f: u32,
    /// Number of pairs `(i, j)` with `λ⁽¹⁾_j > λ⁽⁰⁾_i`, zero pad included.
    pub g: u32,
    /// Number of parts `≡ 2 (mod 3)`.
    pub h: u32,
    /// Number of parts `≡ 0 (mod 3)` in the padded view (the number of
    /// neutral fermions in the normal form of `|λ⟩`).
    pub a: u32,
    /// Parity of the number of positive parts.
    pub eps_len: u32,
}

pub fn stats(lambda: &StrictPartition) -> Stats {
    let split = residue_split(lambda);
    let g = split.p0.iter().map(|&z| split.p1.iter().filter(|&&o| o > z).count() as u32).sum();
    Stats {
        f: split.p2.iter().sum(),
        g,
        h: split.p2.len() as u32,
        a: split.p0.len() as u32,
        eps_len: (lambda.len() % 2) as u32,
    }
}

/// `ε_m`: 1 for odd `m`, 0 for even.
pub fn epsilon(m: i64) -> u32 {
    m.rem_euclid(2) as u32
}

fn sign(e: u64) -> i8 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `δ₁(λ) = (−1)^{f(λ) + C(n,2)}` for `λ ∈ I^n_1(c_m)`.
pub fn delta1(lambda: &StrictPartition, n: u32) -> i8 {
    let n = n as u64;
    sign(stats(lambda).f as u64 + n * n.saturating_sub(1) / 2)
}

/// `δ₀(λ)` for `λ ∈ I^n_0(c_{-m})`.
pub fn delta0(lambda: &StrictPartition, m: u32) -> i8 {
    let st = stats(lambda);
    let e = st.f + st.g + if m % 2 == 1 { st.h } else { 0 };
    sign(e as u64)
}
