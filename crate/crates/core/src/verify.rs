//! Exact verification of the Schur-function identities and of the
//! fermionic propositions behind them, over a configurable parameter grid.
//!
//! Every check returns a [`CheckResult`]; [`run_suite`] evaluates a whole
//! grid, in parallel when the `parallel` feature is enabled, and reports in
//! deterministic parameter order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{SparsePoly, Sqrt2Rational, Variable};
use crate::fock::{self, AddedContext, BetaWord, BosonElement, FockVector};
use crate::partitions::{self, bar_core, bar_quotient, enumerate_added, epsilon, Color, Partition, StrictPartition};
use crate::symfunc::{self, PolyMatrix};

/// Outcome of one exact check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub params: BTreeMap<String, i64>,
    pub passed: bool,
    pub lhs_rendering: String,
    pub rhs_rendering: String,
    pub elapsed_ms: u64,
}

impl CheckResult {
    fn new(name: &str, params: &[(&str, i64)], lhs: String, rhs: String, passed: bool, start: Instant) -> Self {
        Self {
            name: name.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            passed,
            lhs_rendering: lhs,
            rhs_rendering: rhs,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }

    fn compare<T: PartialEq + fmt::Display>(
        name: &str,
        params: &[(&str, i64)],
        lhs: &T,
        rhs: &T,
        start: Instant,
    ) -> Self {
        Self::new(name, params, lhs.to_string(), rhs.to_string(), lhs == rhs, start)
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} [{}] ({} ms)", self.name, params.join(" "), self.elapsed_ms)
    }
}

/// A selectable group of checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    Main1,
    Main2,
    Trapezoid,
    Prop44,
    Prop51,
    PhiConsistency,
    SymfuncProps,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Main1,
        Family::Main2,
        Family::Trapezoid,
        Family::Prop44,
        Family::Prop51,
        Family::PhiConsistency,
        Family::SymfuncProps,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Main1 => "main1",
            Family::Main2 => "main2",
            Family::Trapezoid => "trapezoid",
            Family::Prop44 => "prop44",
            Family::Prop51 => "prop51",
            Family::PhiConsistency => "phi-consistency",
            Family::SymfuncProps => "symfunc-props",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check family {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub max_m: u32,
    pub max_n: u32,
    pub families: Vec<Family>,
}

impl SuiteConfig {
    pub fn all(max_m: u32, max_n: u32) -> Self {
        Self { max_m, max_n, families: Family::ALL.to_vec() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

fn schur_sum_rendering(terms: &[(i8, Partition)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (sign, p)) in terms.iter().enumerate() {
        let body = format!("S_{{{p}}}");
        match (k, *sign < 0) {
            (0, false) => out.push_str(&body),
            (0, true) => out.push_str(&format!("-{body}")),
            (_, false) => out.push_str(&format!(" + {body}")),
            (_, true) => out.push_str(&format!(" - {body}")),
        }
    }
    out
}

/// Signed terms `δ_1(μ) S_{μ[1]}` of the left-hand side of the first identity,
/// ordered by `μ[1]` ascending.
pub fn main1_terms(m: u32, n: u32) -> Result<Vec<(i8, Partition)>> {
    if n > m {
        return Err(Error::InvalidArgument(format!("main1 needs n <= m, got m={m}, n={n}")));
    }
    let mut terms: Vec<(i8, Partition)> = enumerate_added(&bar_core(m as i64), Color::One, n)
        .iter()
        .map(|mu| (partitions::delta1(mu, n), bar_quotient(mu).q1))
        .collect();
    terms.sort_by(|a, b| a.1.parts().cmp(b.1.parts()));
    Ok(terms)
}

/// `Σ_{μ ∈ I^n_1(c_m)} δ_1(μ) S_{μ[1]}(t) = S_{(n^{m−n})}(2t^{(2)})`.
pub fn check_main1(m: u32, n: u32) -> Result<CheckResult> {
    let start = Instant::now();
    let terms = main1_terms(m, n)?;
    let mut lhs = SparsePoly::zero();
    for (sign, p) in &terms {
        lhs.add_assign_scaled(&symfunc::schur(p), &Sqrt2Rational::integer(*sign as i64));
    }
    let rhs = symfunc::subst_2t2(&symfunc::schur(&Partition::rectangle(m - n, n)))?;
    let params = [("m", m as i64), ("n", n as i64)];
    let mut result = CheckResult::compare("main1", &params, &lhs, &rhs, start);
    result.lhs_rendering = format!("{} = {}", schur_sum_rendering(&terms), result.lhs_rendering);
    Ok(result)
}

/// `(δ_0(μ), μ[0], μ[1])` for every `μ ∈ I^n_0(c_{−m})`.
fn signed_quotients(m: u32, n: u32) -> Vec<(i8, StrictPartition, Partition)> {
    enumerate_added(&bar_core(-(m as i64)), Color::Zero, n)
        .iter()
        .map(|mu| {
            let q = bar_quotient(mu);
            (partitions::delta0(mu, m), q.q0, q.q1)
        })
        .collect()
}

/// The `μ[0] = ∅` terms summed after applying `subst` to each `S_{μ[1]}`.
fn empty_q0_sum(m: u32, n: u32, subst: fn(&SparsePoly) -> SparsePoly) -> SparsePoly {
    let mut out = SparsePoly::zero();
    for (sign, q0, q1) in signed_quotients(m, n) {
        if q0.is_empty() {
            out.add_assign_scaled(&subst(&symfunc::schur(&q1)), &Sqrt2Rational::integer(sign as i64));
        }
    }
    out
}

/// `Σ_{μ ∈ I^n_0(c_{−m})} δ_0(μ) Q_{μ[0]}(s) S_{μ[1]}(t) =
/// Σ_{μ[0] = ∅} δ_0(μ) S_{μ[1]}(u)` with `u_j = t_j − s_j`.
pub fn check_main2(m: u32, n: u32) -> Result<CheckResult> {
    let start = Instant::now();
    let mut lhs = SparsePoly::zero();
    for (sign, q0, q1) in signed_quotients(m, n) {
        let term = symfunc::schur_q(&q0).mul(&symfunc::schur(&q1));
        lhs.add_assign_scaled(&term, &Sqrt2Rational::integer(sign as i64));
    }
    let rhs = empty_q0_sum(m, n, symfunc::subst_u);
    let params = [("m", m as i64), ("n", n as i64)];
    Ok(CheckResult::compare("main2", &params, &lhs, &rhs, start))
}

/// `Q_{Δ(m,n)}(u) = (−1)^{(m+1)(m+2n)/2} Σ_{μ[0] = ∅} δ_0(μ) S^{odd}_{μ[1]}(u)`.
pub fn check_trapezoid(m: u32, n: u32) -> Result<CheckResult> {
    let start = Instant::now();
    let delta = StrictPartition::trapezoid(m, n)?;
    let lhs = symfunc::subst_s_to_u(&symfunc::schur_q(&delta));
    let (mi, ni) = (m as i64, n as i64);
    let global = Sqrt2Rational::sign_pow((mi + 1) * (mi + 2 * ni) / 2);
    let rhs = empty_q0_sum(m, n, symfunc::subst_odd).scale(&global);
    let params = [("m", mi), ("n", ni)];
    Ok(CheckResult::compare("trapezoid", &params, &lhs, &rhs, start))
}

/// The combinatorial value of `f_i^n/n! |c⟩`, with `c = c_m` for `i = 1`
/// and `c = c_{−m}` for `i = 0`.
pub fn prop44_rhs(i: Color, m: u32, n: u32) -> FockVector {
    let ctx = AddedContext { color: i, m, n };
    let members = ctx.members();
    match i {
        Color::One => {
            let c = Sqrt2Rational::integer(1i64 << n);
            FockVector::from_terms(members.into_iter().map(|mu| (BetaWord::of_partition(&mu), c.clone())))
        }
        Color::Zero => {
            let eps = epsilon(m as i64) as i64;
            FockVector::from_terms(members.into_iter().map(|mu| {
                let a = partitions::stats(&mu).a as i64;
                (BetaWord::of_partition(&mu), Sqrt2Rational::sqrt2_pow(a - eps))
            }))
        }
    }
}

pub fn check_prop44(i: Color, m: u32, n: u32) -> CheckResult {
    let start = Instant::now();
    let ctx = AddedContext { color: i, m, n };
    let lhs = fock::f_power_normalized(i, n, &FockVector::basis(&ctx.core()));
    let rhs = prop44_rhs(i, m, n);
    let params = [("i", i.index() as i64), ("m", m as i64), ("n", n as i64)];
    CheckResult::compare("prop44", &params, &lhs, &rhs, start)
}

/// `Φ(|c_m⟩) = (−1)^m √2^{−ε_m} θ^{ε_m} e^{mα}` and
/// `Φ(|c_{−m}⟩) = (−1)^{C(m,2)+m} √2^{−ε_m} θ^{ε_m} e^{−mα}`.
pub fn check_prop51(m: u32) -> Result<CheckResult> {
    if m == 0 {
        return Err(Error::InvalidArgument("prop51 needs m >= 1".into()));
    }
    let start = Instant::now();
    let mi = m as i64;
    let eps = epsilon(mi);
    let scale = Sqrt2Rational::sqrt2_pow(-(eps as i64));
    let expected = |sign: i64, charge: i64| {
        BosonElement::single(eps as u8, charge, SparsePoly::constant(&Sqrt2Rational::sign_pow(sign) * &scale))
    };
    let lhs = (fock::phi(&FockVector::basis(&bar_core(mi))), fock::phi(&FockVector::basis(&bar_core(-mi))));
    let rhs = (expected(mi, mi), expected(mi * (mi - 1) / 2 + mi, -mi));
    let render = |p: &(BosonElement, BosonElement)| {
        format!("c_m -> {}; c_-m -> {}", p.0.to_string().trim(), p.1.to_string().trim())
    };
    let params = [("m", mi)];
    Ok(CheckResult::new("prop51", &params, render(&lhs), render(&rhs), lhs == rhs, start))
}

/// `phi(|λ⟩) = phi_closed_form(λ)` for every `λ ∈ I^n_i(c_{±m})`.
pub fn check_phi_consistency(i: Color, m: u32, n: u32) -> CheckResult {
    let start = Instant::now();
    let ctx = AddedContext { color: i, m, n };
    let mut failures = Vec::new();
    let members = ctx.members();
    for lam in &members {
        let oracle = fock::phi(&FockVector::basis(lam));
        match fock::phi_closed_form(lam, ctx) {
            Ok(closed) if closed == oracle => {}
            Ok(closed) => {
                failures.push(format!("{lam}: {} vs {}", oracle.to_string().trim(), closed.to_string().trim()))
            }
            Err(e) => failures.push(format!("{lam}: {e}")),
        }
    }
    let params = [("i", i.index() as i64), ("m", m as i64), ("n", n as i64)];
    let lhs = format!("{} states checked", members.len());
    let rhs = if failures.is_empty() { "all match".to_string() } else { failures.join("; ") };
    CheckResult::new("phi-consistency", &params, lhs, rhs, failures.is_empty(), start)
}

/// The worked normal form `+φ6 φ4 φ0 ψ5 ψ2 ψ−2 ψ−4 ψ−5 ψ−6 |0,−7⟩` of
/// `|(20,18,16,12,8,7,2)⟩`, together with its closed-form image.
pub fn check_worked_normal_form() -> CheckResult {
    let start = Instant::now();
    let lam = StrictPartition::new(vec![20, 18, 16, 12, 8, 7, 2]).expect("strict");
    let got = fock::to_normal_words(&lam);
    let want = fock::NormalWord {
        phis: vec![6, 4, 0],
        psis: vec![5, 2, -2, -4, -5, -6],
        charge: -7,
        coeff: Sqrt2Rational::one(),
    };
    let ctx = AddedContext { color: Color::Zero, m: 7, n: 6 };
    let closed_ok = fock::phi_closed_form(&lam, ctx).map(|c| c == fock::phi(&FockVector::basis(&lam)));
    let passed = got.as_slice() == std::slice::from_ref(&want) && closed_ok == Ok(true);
    let lhs: Vec<String> = got.iter().map(ToString::to_string).collect();
    CheckResult::new("normal-form-example", &[("m", 7), ("n", 6)], lhs.join("; "), want.to_string(), passed, start)
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=7).into())
}

/// Homogeneity of `S_λ` and `Q_λ` for `|λ| ≤ max_weight`.
pub fn check_homogeneity(max_weight: u32) -> CheckResult {
    let start = Instant::now();
    let mut bad = Vec::new();
    for w in 0..=max_weight {
        for p in Partition::all_of_size(w) {
            if !symfunc::schur(&p).is_homogeneous_of(w as u64) {
                bad.push(format!("S_{{{p}}}"));
            }
            if p.parts().windows(2).all(|x| x[0] > x[1]) {
                let strict = StrictPartition::new(p.parts().to_vec()).expect("strict");
                if !symfunc::schur_q(&strict).is_homogeneous_of(w as u64) {
                    bad.push(format!("Q_{{{strict}}}"));
                }
            }
        }
    }
    let rhs = if bad.is_empty() { "all homogeneous".into() } else { bad.join(", ") };
    CheckResult::new(
        "homogeneity",
        &[("max_weight", max_weight as i64)],
        "weights checked".into(),
        rhs,
        bad.is_empty(),
        start,
    )
}

/// `Q_{m,n} = −Q_{n,m}` for `m, n ≤ max`.
pub fn check_qq_antisymmetry(max: u32) -> CheckResult {
    let start = Instant::now();
    let mut bad = Vec::new();
    for m in 0..=max {
        for n in 0..=max {
            if symfunc::qq_pair(m, n) != -&symfunc::qq_pair(n, m) {
                bad.push(format!("({m},{n})"));
            }
        }
    }
    let rhs = if bad.is_empty() { "antisymmetric".into() } else { bad.join(", ") };
    CheckResult::new("qq-antisymmetry", &[("max", max as i64)], "pairs checked".into(), rhs, bad.is_empty(), start)
}

/// `Pf(A)² = det(A)` on seeded random skew matrices of dimension 2, 4, 6, 8,
/// and on the symbolic Q-function matrices of `(3,2,1)` and `(4,3,2,1)`.
pub fn check_pfaffian_squares(seed: u64) -> CheckResult {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for dim in [2usize, 4, 6, 8] {
        for _ in 0..3 {
            let mut rows = vec![vec![Sqrt2Rational::default(); dim]; dim];
            for i in 0..dim {
                for j in i + 1..dim {
                    let x = Sqrt2Rational::rational(random_rational(&mut rng));
                    rows[j][i] = -&x;
                    rows[i][j] = x;
                }
            }
            let a = PolyMatrix::from_fn(dim, |i, j| SparsePoly::constant(rows[i][j].clone()));
            let pf = symfunc::pfaffian(&a).expect("skew, even");
            let det = symfunc::scalar_determinant(rows);
            if pf.pow(2) != SparsePoly::constant(det) {
                bad.push(format!("random dim {dim}"));
            }
        }
    }
    for parts in [vec![3u32, 2, 1, 0], vec![4, 3, 2, 1]] {
        let a = PolyMatrix::from_fn(4, |i, j| symfunc::qq_pair(parts[i], parts[j]));
        let pf = symfunc::pfaffian(&a).expect("skew, even");
        if pf.pow(2) != symfunc::determinant(&a) {
            bad.push(format!("symbolic {parts:?}"));
        }
    }
    let rhs = if bad.is_empty() { "Pf^2 = det".into() } else { bad.join(", ") };
    CheckResult::new("pfaffian-square", &[("seed", seed as i64)], "matrices checked".into(), rhs, bad.is_empty(), start)
}

/// Jacobi–Trudi `S_λ` specialized to `N` variables against the bialternant
/// at `points` seeded random rational points, for `|λ| ≤ max_weight`, `ℓ(λ) ≤ N`.
pub fn check_jacobi_trudi_bialternant(max_weight: u32, n_vars: u32, points: usize, seed: u64) -> CheckResult {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples: Vec<Vec<BigRational>> = (0..points)
        .map(|_| loop {
            let pt: Vec<BigRational> = (0..n_vars).map(|_| random_rational(&mut rng)).collect();
            let distinct = (0..pt.len()).all(|i| (i + 1..pt.len()).all(|j| pt[i] != pt[j]));
            if distinct {
                break pt;
            }
        })
        .collect();
    let mut bad = Vec::new();
    let mut count = 0;
    for w in 0..=max_weight {
        for p in Partition::all_of_size(w).into_iter().filter(|p| p.len() <= n_vars as usize) {
            let spec = symfunc::power_sum_specialize(&symfunc::schur(&p), n_vars).expect("t-only polynomial");
            for pt in &samples {
                count += 1;
                let at: BTreeMap<Variable, Sqrt2Rational> = pt
                    .iter()
                    .enumerate()
                    .map(|(k, x)| (Variable::z(k as u32 + 1), Sqrt2Rational::rational(x.clone())))
                    .collect();
                let jt = spec.eval(&at);
                let bi = symfunc::bialternant_eval(&p, pt);
                if jt.is_err() || bi.is_err() || jt != bi {
                    bad.push(format!("S_{{{p}}}"));
                    break;
                }
            }
        }
    }
    let params =
        [("max_weight", max_weight as i64), ("vars", n_vars as i64), ("points", points as i64), ("seed", seed as i64)];
    let rhs = if bad.is_empty() { "all agree".into() } else { bad.join(", ") };
    CheckResult::new("jacobi-trudi-bialternant", &params, format!("{count} evaluations"), rhs, bad.is_empty(), start)
}

const SYMFUNC_SEED: u64 = 0x5c4u64;

#[derive(Debug, Clone, Copy)]
enum Job {
    Main1(u32, u32),
    Main2(u32, u32),
    Trapezoid(u32, u32),
    Prop44(Color, u32, u32),
    Prop51(u32),
    Phi(Color, u32, u32),
    NormalFormExample,
    Homogeneity,
    Antisymmetry,
    PfaffianSquare,
    JacobiTrudi,
}

impl Job {
    fn run(self) -> CheckResult {
        let res = match self {
            Job::Main1(m, n) => check_main1(m, n),
            Job::Main2(m, n) => check_main2(m, n),
            Job::Trapezoid(m, n) => check_trapezoid(m, n),
            Job::Prop44(i, m, n) => Ok(check_prop44(i, m, n)),
            Job::Prop51(m) => check_prop51(m),
            Job::Phi(i, m, n) => Ok(check_phi_consistency(i, m, n)),
            Job::NormalFormExample => Ok(check_worked_normal_form()),
            Job::Homogeneity => Ok(check_homogeneity(10)),
            Job::Antisymmetry => Ok(check_qq_antisymmetry(8)),
            Job::PfaffianSquare => Ok(check_pfaffian_squares(SYMFUNC_SEED)),
            Job::JacobiTrudi => Ok(check_jacobi_trudi_bialternant(6, 3, 5, SYMFUNC_SEED)),
        };
        res.unwrap_or_else(|e| {
            CheckResult::new(&format!("{self:?}"), &[], e.to_string(), String::new(), false, Instant::now())
        })
    }
}

fn jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let mut families = cfg.families.clone();
    families.sort();
    families.dedup();
    let (mm, mn) = (cfg.max_m, cfg.max_n);
    let mut out = Vec::new();
    for fam in families {
        match fam {
            Family::Main1 => {
                for m in 0..=mm {
                    for n in 0..=m.min(mn) {
                        out.push(Job::Main1(m, n));
                    }
                }
            }
            Family::Main2 => {
                for m in 0..=mm {
                    for n in 0..=mn {
                        out.push(Job::Main2(m, n));
                    }
                }
            }
            Family::Trapezoid => {
                for m in 0..=mm {
                    for n in 0..=mn.min(m + 1) {
                        out.push(Job::Trapezoid(m, n));
                    }
                }
            }
            Family::Prop44 => {
                for i in [Color::Zero, Color::One] {
                    for m in 0..=mm {
                        for n in 0..=mn {
                            out.push(Job::Prop44(i, m, n));
                        }
                    }
                }
            }
            Family::Prop51 => out.extend((1..=mm).map(Job::Prop51)),
            Family::PhiConsistency => {
                for i in [Color::Zero, Color::One] {
                    for m in 0..=mm {
                        for n in 0..=mn {
                            out.push(Job::Phi(i, m, n));
                        }
                    }
                }
                out.push(Job::NormalFormExample);
            }
            Family::SymfuncProps => {
                out.extend([Job::Homogeneity, Job::Antisymmetry, Job::PfaffianSquare, Job::JacobiTrudi]);
            }
        }
    }
    out
}

/// Runs the configured grid with the default execution mode.
pub fn run_suite(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let mode = if cfg!(feature = "parallel") { Execution::Parallel } else { Execution::Sequential };
    run_suite_with(cfg, mode)
}

/// Runs the configured grid; `Parallel` falls back to sequential execution
/// when the crate is built without the `parallel` feature.
pub fn run_suite_with(cfg: &SuiteConfig, mode: Execution) -> Vec<CheckResult> {
    let jobs = jobs(cfg);
    match mode {
        Execution::Sequential => jobs.into_iter().map(Job::run).collect(),
        Execution::Parallel => run_parallel(jobs),
    }
}

#[cfg(feature = "parallel")]
fn run_parallel(jobs: Vec<Job>) -> Vec<CheckResult> {
    use rayon::prelude::*;
    // indexed parallel map keeps the input order
    jobs.into_par_iter().map(Job::run).collect()
}

#[cfg(not(feature = "parallel"))]
fn run_parallel(jobs: Vec<Job>) -> Vec<CheckResult> {
    jobs.into_iter().map(Job::run).collect()
}

pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn main1_worked_instance() {
        let terms = main1_terms(4, 2).unwrap();
        let want = vec![
            (1, p(&[2, 2, 2, 2])),
            (-1, p(&[3, 2, 2, 1])),
            (1, p(&[3, 3, 1, 1])),
            (1, p(&[4, 2, 2])),
            (-1, p(&[4, 3, 1])),
            (1, p(&[4, 4])),
        ];
        assert_eq!(terms, want);
        assert!(check_main1(4, 2).unwrap().passed);
        assert!(check_main1(1, 2).is_err());
    }

    #[test]
    fn small_checks() {
        assert!(check_main1(3, 1).unwrap().passed);
        assert!(check_main2(1, 1).unwrap().passed);
        assert!(check_main2(2, 2).unwrap().passed);
        assert!(check_trapezoid(2, 2).unwrap().passed);
        assert!(check_trapezoid(1, 3).is_err());
        assert!(check_prop44(Color::One, 1, 1).passed);
        assert!(check_prop44(Color::Zero, 3, 3).passed);
        assert!(check_prop51(1).unwrap().passed);
        assert!(check_phi_consistency(Color::One, 4, 3).passed);
        assert!(check_worked_normal_form().passed);
    }

    #[test]
    fn suite_shapes() {
        assert!(run_suite(&SuiteConfig { max_m: 3, max_n: 3, families: vec![] }).is_empty());
        let r = run_suite(&SuiteConfig { max_m: 0, max_n: 0, families: vec![Family::Main1] });
        assert_eq!(r.len(), 1);
        assert!(r[0].passed);
        assert_eq!("phi-consistency".parse::<Family>().unwrap(), Family::PhiConsistency);
    }
}
