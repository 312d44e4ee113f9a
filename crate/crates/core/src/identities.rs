//! Executable verification of the coefficient identities over ranges of `n`.
//!
//! Each check takes a single `n`, recomputes everything it needs from
//! scratch (no state is shared across `n`), and returns a pass/fail record
//! with a greppable counterexample string on failure:
//!
//! - `lemma1` — the divisor-count pair `(γ⁺, γ⁻)` has zero product and its
//!   difference reproduces the closed-form coefficient, for every offset.
//! - `lemma2` — for each opposite-parity divisor pair `{k, 2n/k}` of `2n`
//!   (with `k` the smaller element) and each `λ ∈ {−1, 1}`: an offset
//!   `i ∈ [0..n]` solving `k(k + 2i + λ(−1)^{n+k+i})/2 = n` exists iff the
//!   odd element `u` of the pair satisfies `u ≡ λ (mod 4)`.
//! - `prop1_pos` / `prop1_neg` — the positive and negative coefficient
//!   masses of `Γ_n` equal `4·d_{1,4}(n)` and `−4·d_{3,4}(n)`.
//! - `qanalogue` — `Γ_n(1)` equals the brute-force lattice count `r₂(n)`.
//! - `theorem1` — nonnegativity of `Γ_n` ⇔ a hypotenuse witness
//!   `n = 2^k·z` exists ⇔ `d_{3,4}(n) = 0`; the witness is recorded.
//! - `structural` — sparse construction matches the dense formulas,
//!   palindromy, degree `2n`, coefficient ranges, and `C_n(1) = 0`.
//!
//! [`verify_range`] runs any subset over `[lo..hi]`, optionally on a rayon
//! pool; reports come back in ascending `n` order whatever the parallelism,
//! so rendered output is byte-identical across job counts.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::ntheory::{divisor_count_mod, divisors, hypotenuse_witness, r2_bruteforce};
use crate::qpoly::{
    build_c, build_gamma, c_coefficient, gamma_coefficient, sign_of_parity, signed_counts,
};
use crate::{Error, Result};

/// The fixed set of named checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckName {
    Lemma1,
    Lemma2,
    Prop1Pos,
    Prop1Neg,
    QAnalogue,
    Theorem1,
    Structural,
}

impl CheckName {
    /// Every check, in canonical reporting order.
    pub const ALL: [CheckName; 7] = [
        CheckName::Lemma1,
        CheckName::Lemma2,
        CheckName::Prop1Pos,
        CheckName::Prop1Neg,
        CheckName::QAnalogue,
        CheckName::Theorem1,
        CheckName::Structural,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Lemma1 => "lemma1",
            CheckName::Lemma2 => "lemma2",
            CheckName::Prop1Pos => "prop1_pos",
            CheckName::Prop1Neg => "prop1_neg",
            CheckName::QAnalogue => "qanalogue",
            CheckName::Theorem1 => "theorem1",
            CheckName::Structural => "structural",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

/// Outcome of one named check at one `n`. A failed check always carries a
/// counterexample detail; a passed `theorem1` in the nonnegative case
/// carries the witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    name: CheckName,
    passed: bool,
    detail: Option<String>,
}

impl CheckResult {
    pub fn pass(name: CheckName) -> Self {
        CheckResult { name, passed: true, detail: None }
    }

    pub fn pass_with_detail(name: CheckName, detail: String) -> Self {
        CheckResult { name, passed: true, detail: Some(detail) }
    }

    pub fn fail(name: CheckName, detail: String) -> Self {
        CheckResult { name, passed: false, detail: Some(detail) }
    }

    pub fn name(&self) -> CheckName {
        self.name
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn detail(&self) -> Option<&str> {
        self.detail.as_deref()
    }
}

/// All selected check outcomes for one `n`, in canonical check order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub n: u64,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

/// Pass/fail tally for one check over a range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckCounts {
    pub name: CheckName,
    pub passed: u64,
    pub failed: u64,
}

/// Aggregate tallies for a [`verify_range`] run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationSummary {
    /// Number of `n` values examined.
    pub total: u64,
    /// Number of `n` values for which every selected check passed.
    pub fully_passed: u64,
    /// Per-check tallies in canonical order.
    pub counts: Vec<CheckCounts>,
}

impl VerificationSummary {
    pub fn all_passed(&self) -> bool {
        self.counts.iter().all(|c| c.failed == 0)
    }
}

/// `γ⁺·γ⁻ = 0` and `γ⁺ − γ⁻ = γ_{n,i}` for every offset `i ∈ [0..n]`,
/// with the two sides computed by independent routes (divisor enumeration
/// vs. the closed-form quadratic solve).
pub fn check_lemma1(n: u64) -> CheckResult {
    assert!(n >= 1);
    let divs = divisors(2 * n);
    for i in 0..=n {
        let pair = signed_counts(n, i, &divs);
        if pair.plus() * pair.minus() != 0 {
            return CheckResult::fail(
                CheckName::Lemma1,
                format!("n={n} i={i} expected=0 got={}", pair.plus() * pair.minus()),
            );
        }
        let expected = gamma_coefficient(n, i).expect("i <= n");
        if pair.net() != expected {
            return CheckResult::fail(
                CheckName::Lemma1,
                format!("n={n} i={i} expected={expected} got={}", pair.net()),
            );
        }
    }
    CheckResult::pass(CheckName::Lemma1)
}

/// Does `k(k + 2i + λ(−1)^{n+k+i})/2 = n` hold literally?
fn eq3_holds(n: u64, k: u64, i: u64, lambda: i64) -> bool {
    let sign = sign_of_parity(n, k, i) * lambda;
    let base = k as u128 + 2 * i as u128;
    let adjusted = if sign == 1 { base + 1 } else { base - 1 };
    k as u128 * adjusted == 2 * n as u128
}

/// Is there an `i ∈ [0..n]` satisfying the equation above?
///
/// Substituting `t = n + k + i` turns the equation into
/// `2t + λ(−1)^t = u + v + 2n`, which admits at most one candidate `t` per
/// parity class; each in-range candidate is mapped back to `i` and verified
/// by direct substitution, so this is an O(1) replacement for scanning all
/// `i` with identical answers.
fn offset_exists(n: u64, k: u64, u: u64, lambda: i64) -> bool {
    let v = (2 * n / u) as i128;
    let total = u as i128 + v + 2 * n as i128;
    // total is odd (u odd, v and 2n even), so total ∓ λ is always even
    for (numerator, want_odd_t) in [(total - lambda as i128, false), (total + lambda as i128, true)]
    {
        debug_assert_eq!(numerator % 2, 0);
        let t = numerator / 2;
        if (t.rem_euclid(2) == 1) != want_odd_t {
            continue;
        }
        let t_min = n as i128 + k as i128;
        if (t_min..=t_min + n as i128).contains(&t) {
            let i = (t - t_min) as u64;
            if eq3_holds(n, k, i, lambda) {
                return true;
            }
        }
    }
    false
}

/// For each opposite-parity divisor pair of `2n` (taking `k` as the smaller
/// element, which is what makes the offset nonnegative) and each
/// `λ ∈ {−1, 1}`: a solving offset exists iff `u ≡ λ (mod 4)`, where `u` is
/// the odd element of the pair.
pub fn check_lemma2(n: u64) -> CheckResult {
    assert!(n >= 1);
    let two_n = 2 * n;
    for k in divisors(two_n) {
        let quot = two_n / k;
        if k % 2 == quot % 2 || k > quot {
            continue;
        }
        let u = if k % 2 == 1 { k } else { quot };
        for lambda in [1i64, -1] {
            let exists = offset_exists(n, k, u, lambda);
            let congruent = u % 4 == lambda.rem_euclid(4) as u64;
            if exists != congruent {
                return CheckResult::fail(
                    CheckName::Lemma2,
                    format!("n={n} k={k} lambda={lambda} expected={congruent} got={exists}"),
                );
            }
        }
    }
    CheckResult::pass(CheckName::Lemma2)
}

/// Positive mass of `Γ_n` is `4·d_{1,4}(n)` and negative mass is
/// `−4·d_{3,4}(n)`; returned as the `(prop1_pos, prop1_neg)` pair.
pub fn check_prop1(n: u64) -> (CheckResult, CheckResult) {
    assert!(n >= 1);
    let gamma = build_gamma(n).expect("n >= 1");
    let expected_pos = 4 * divisor_count_mod(n, 1, 4);
    let got_pos = gamma.positive_sum();
    let pos = if got_pos == expected_pos {
        CheckResult::pass(CheckName::Prop1Pos)
    } else {
        CheckResult::fail(
            CheckName::Prop1Pos,
            format!("n={n} expected={expected_pos} got={got_pos}"),
        )
    };
    let expected_neg = -4 * divisor_count_mod(n, 3, 4) as i64;
    let got_neg = gamma.negative_sum();
    let neg = if got_neg == expected_neg {
        CheckResult::pass(CheckName::Prop1Neg)
    } else {
        CheckResult::fail(
            CheckName::Prop1Neg,
            format!("n={n} expected={expected_neg} got={got_neg}"),
        )
    };
    (pos, neg)
}

/// `Γ_n(1)` equals the brute-force lattice count `r₂(n)`.
pub fn check_qanalogue(n: u64) -> CheckResult {
    assert!(n >= 1);
    let got = build_gamma(n).expect("n >= 1").evaluate(1);
    let expected = BigInt::from(r2_bruteforce(n));
    if got == expected {
        CheckResult::pass(CheckName::QAnalogue)
    } else {
        CheckResult::fail(CheckName::QAnalogue, format!("n={n} expected={expected} got={got}"))
    }
}

/// Three-way equivalence: `Γ_n` nonnegative ⇔ hypotenuse witness exists ⇔
/// no divisor of `n` is `≡ 3 (mod 4)`. Records the witness on the
/// nonnegative side.
pub fn check_theorem1(n: u64) -> CheckResult {
    assert!(n >= 1);
    let nonneg = build_gamma(n).expect("n >= 1").is_nonnegative();
    let witness = hypotenuse_witness(n);
    let d34_zero = divisor_count_mod(n, 3, 4) == 0;
    if nonneg != witness.is_some() || nonneg != d34_zero {
        return CheckResult::fail(
            CheckName::Theorem1,
            format!(
                "n={n} nonneg={nonneg} witness_present={} d34_zero={d34_zero}",
                witness.is_some()
            ),
        );
    }
    match witness {
        Some(w) => CheckResult::pass_with_detail(
            CheckName::Theorem1,
            format!("witness x={} y={} z={} k={}", w.x(), w.y(), w.z(), w.k()),
        ),
        None => CheckResult::pass(CheckName::Theorem1),
    }
}

/// Sparse construction equals the dense formulas at every offset for both
/// kinds, plus palindromy, degree `2n` with leading coefficient 1,
/// coefficient ranges, the divisor bound on stored offsets, and
/// `C_n(1) = 0`.
pub fn check_structural(n: u64) -> CheckResult {
    assert!(n >= 1);
    let fail = |detail: String| CheckResult::fail(CheckName::Structural, detail);
    let c = build_c(n).expect("n >= 1");
    let gamma = build_gamma(n).expect("n >= 1");
    for i in 0..=n {
        let expected = c_coefficient(n, i).expect("i <= n");
        let got = c.coefficient(i as i64);
        if got != expected {
            return fail(format!("n={n} i={i} expected={expected} got={got}"));
        }
        let expected = gamma_coefficient(n, i).expect("i <= n");
        let got = gamma.coefficient(i as i64);
        if got != expected {
            return fail(format!("n={n} i={i} expected={expected} got={got}"));
        }
    }
    for poly in [&c, &gamma] {
        if poly.degree() != 2 * n || poly.coefficient_at_exponent(2 * n) != 1 {
            return fail(format!(
                "n={n} expected=degree {} leading 1 got={}",
                2 * n,
                poly.coefficient_at_exponent(2 * n)
            ));
        }
        for (e, coeff) in poly.dense_terms() {
            let mirrored = poly.coefficient_at_exponent(2 * n - e);
            if coeff != mirrored {
                return fail(format!("n={n} i={e} expected={coeff} got={mirrored}"));
            }
            if !(coeff == 1 || coeff == -1 || coeff == 2 || coeff == -2)
                || (e != n && coeff.unsigned_abs() != 1)
            {
                return fail(format!("n={n} i={e} expected=coefficient in range got={coeff}"));
            }
        }
        let stored_above_center = poly.offsets().filter(|&(i, _)| i >= 1).count();
        let bound = divisors(2 * n).len();
        if stored_above_center > bound {
            return fail(format!("n={n} expected=at most {bound} offsets got={stored_above_center}"));
        }
    }
    let at_one = c.evaluate(1);
    if at_one != BigInt::from(0) {
        return fail(format!("n={n} expected=0 got={at_one}"));
    }
    CheckResult::pass(CheckName::Structural)
}

fn run_checks(n: u64, selected: &[CheckName]) -> VerificationReport {
    let mut checks = Vec::with_capacity(selected.len());
    let mut prop1: Option<(CheckResult, CheckResult)> = None;
    for &name in selected {
        let result = match name {
            CheckName::Lemma1 => check_lemma1(n),
            CheckName::Lemma2 => check_lemma2(n),
            CheckName::Prop1Pos => prop1.get_or_insert_with(|| check_prop1(n)).0.clone(),
            CheckName::Prop1Neg => prop1.get_or_insert_with(|| check_prop1(n)).1.clone(),
            CheckName::QAnalogue => check_qanalogue(n),
            CheckName::Theorem1 => check_theorem1(n),
            CheckName::Structural => check_structural(n),
        };
        checks.push(result);
    }
    VerificationReport { n, checks }
}

/// Run the selected checks for every `n` in `[lo..hi]`.
///
/// `jobs` is the worker count; any value produces identical reports, in
/// ascending `n` order. Rejects `lo = 0`, `lo > hi`, and an empty check set.
/// Duplicate names are collapsed and the canonical check order is imposed.
pub fn verify_range(
    lo: u64,
    hi: u64,
    checks: &[CheckName],
    jobs: usize,
) -> Result<(Vec<VerificationReport>, VerificationSummary)> {
    if lo == 0 || lo > hi {
        return Err(Error::InvalidRange { lo, hi });
    }
    if checks.is_empty() {
        return Err(Error::NoChecksSelected);
    }
    assert!(jobs >= 1, "verify_range: jobs must be >= 1");
    let selected: Vec<CheckName> = CheckName::ALL
        .into_iter()
        .filter(|name| checks.contains(name))
        .collect();

    let reports: Vec<VerificationReport> = if jobs == 1 {
        (lo..=hi).map(|n| run_checks(n, &selected)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("failed to build verification thread pool");
        pool.install(|| {
            (lo..=hi)
                .into_par_iter()
                .map(|n| run_checks(n, &selected))
                .collect()
        })
    };

    let mut counts: Vec<CheckCounts> = selected
        .iter()
        .map(|&name| CheckCounts { name, passed: 0, failed: 0 })
        .collect();
    let mut fully_passed = 0;
    for report in &reports {
        for (slot, check) in counts.iter_mut().zip(&report.checks) {
            debug_assert_eq!(slot.name, check.name());
            if check.passed() {
                slot.passed += 1;
            } else {
                slot.failed += 1;
            }
        }
        if report.all_passed() {
            fully_passed += 1;
        }
    }
    let summary = VerificationSummary {
        total: hi - lo + 1,
        fully_passed,
        counts,
    };
    Ok((reports, summary))
}
