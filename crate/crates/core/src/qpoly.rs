//! Sparse construction of `C_n(q)` and `Γ_n(q)` from the explicit coefficient
//! formulas, with arbitrary-precision evaluation.
//!
//! Both polynomials are palindromic of degree `2n` and are stored centered:
//! only offsets `0 <= i <= n` with nonzero coefficient are kept, the mirror
//! offset `-i` being implicit. Writing `c_{n,i}` for the coefficient of
//! `q^{n+i}` in `C_n(q)`:
//!
//! - `c_{n,0} = 2(-1)^k` if `n = k(k+1)/2` for some `k >= 1`, else `0`;
//! - for `i >= 1`, `c_{n,i} = (-1)^k` if `n = k(k+2i+1)/2` has a solution
//!   `k >= 1`, `(-1)^{k-1}` if `n = k(k+2i-1)/2` does, else `0`.
//!
//! `Γ_n(q) = C_n(-q)` has coefficients `γ_{n,i} = (-1)^{n+i} c_{n,i}`, and
//! `γ_{n,i}` also equals `γ⁺_{n,i} - γ⁻_{n,i}` where the two terms count
//! divisors `k` of `2n` with `k(k + 2i ± (-1)^{n+k+i})/2 = n`; that second
//! route is computed independently by [`gamma_signed`] so the two can be
//! checked against each other.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Pow;

use crate::ntheory::divisors;
use crate::{Error, Result};

/// Which polynomial family a [`CenteredPolynomial`] belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyKind {
    C,
    Gamma,
}

impl PolyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            PolyKind::C => "C",
            PolyKind::Gamma => "Gamma",
        }
    }
}

impl fmt::Display for PolyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `(-1)^e` from the parity of a sum computed overflow-free: the parity of
/// `a + b + c` is the XOR of the individual parities.
pub(crate) fn sign_of_parity(a: u64, b: u64, c: u64) -> i64 {
    if (a ^ b ^ c) & 1 == 0 {
        1
    } else {
        -1
    }
}

/// Positive `k` with `k(k + b) = 2n`, if one exists.
///
/// `k` is the positive root of `k² + bk - 2n = 0`, found by an exactness
/// check on the discriminant; no floating point.
fn solve_k(n: u64, b: u128) -> Option<u64> {
    let d = b * b + 8 * n as u128;
    let s = d.isqrt();
    if s * s != d {
        return None;
    }
    // s > b since d > b² for n >= 1, and s - b is even exactly when a root exists
    let num = s - b;
    if num == 0 || !num.is_multiple_of(2) {
        return None;
    }
    Some((num / 2) as u64)
}

fn check_args(n: u64, i: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    if i > n {
        return Err(Error::OffsetOutOfRange { offset: i, center: n });
    }
    Ok(())
}

/// Coefficient of `q^{n+i}` (equivalently `q^{n-i}`) in `C_n(q)`, straight
/// from the case formulas. This is the dense route the sparse construction
/// is verified against.
pub fn c_coefficient(n: u64, i: u64) -> Result<i64> {
    check_args(n, i)?;
    if i == 0 {
        return Ok(match solve_k(n, 1) {
            Some(k) => 2 * sign_of_parity(k, 0, 0),
            None => 0,
        });
    }
    let plus = solve_k(n, 2 * i as u128 + 1);
    let minus = solve_k(n, 2 * i as u128 - 1);
    debug_assert!(
        plus.is_none() || minus.is_none(),
        "coefficient case formulas overlap at n={n} i={i}"
    );
    Ok(match (plus, minus) {
        (Some(k), _) => sign_of_parity(k, 0, 0),
        (_, Some(k)) => -sign_of_parity(k, 0, 0),
        (None, None) => 0,
    })
}

/// Coefficient of `q^{n+i}` in `Γ_n(q)`: `(-1)^{n+i} c_{n,i}`.
pub fn gamma_coefficient(n: u64, i: u64) -> Result<i64> {
    Ok(sign_of_parity(n, i, 0) * c_coefficient(n, i)?)
}

/// The pair `(γ⁺_{n,i}, γ⁻_{n,i})` of nonnegative divisor counts whose
/// difference gives `γ_{n,i}` and whose product is zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedCoefficientPair {
    plus: u64,
    minus: u64,
}

impl SignedCoefficientPair {
    pub fn plus(&self) -> u64 {
        self.plus
    }

    pub fn minus(&self) -> u64 {
        self.minus
    }

    /// `plus - minus`, the signed coefficient the pair decomposes.
    pub fn net(&self) -> i64 {
        self.plus as i64 - self.minus as i64
    }
}

/// Count divisors `k` of `2n` satisfying `k(k + 2i + (-1)^{n+k+i})/2 = n`
/// (the `plus` count) and the same with `-(-1)^{n+k+i}` (the `minus` count).
///
/// Enumerates divisors directly; shares no code path with
/// [`gamma_coefficient`], which is the point — the two routes are compared
/// by the `lemma1` check.
pub fn gamma_signed(n: u64, i: u64) -> Result<SignedCoefficientPair> {
    check_args(n, i)?;
    Ok(signed_counts(n, i, &divisors(2 * n)))
}

pub(crate) fn signed_counts(n: u64, i: u64, divisors_2n: &[u64]) -> SignedCoefficientPair {
    let target = 2 * n as u128;
    let mut plus = 0;
    let mut minus = 0;
    for &k in divisors_2n {
        let base = k as u128 + 2 * i as u128; // k + 2i, with the ±1 applied below
        let sign_positive = sign_of_parity(n, k, i) == 1;
        let (with_plus, with_minus) = if sign_positive {
            (k as u128 * (base + 1), k as u128 * (base - 1))
        } else {
            (k as u128 * (base - 1), k as u128 * (base + 1))
        };
        if with_plus == target {
            plus += 1;
        }
        if with_minus == target {
            minus += 1;
        }
    }
    SignedCoefficientPair { plus, minus }
}

/// A palindromic integer polynomial of degree `2n` stored as sparse offsets
/// around the center exponent `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenteredPolynomial {
    kind: PolyKind,
    center: u64,
    coeffs: BTreeMap<u64, i64>,
}

impl CenteredPolynomial {
    pub fn kind(&self) -> PolyKind {
        self.kind
    }

    /// The center exponent `n`.
    pub fn center(&self) -> u64 {
        self.center
    }

    /// Total degree, always `2n`.
    pub fn degree(&self) -> u64 {
        2 * self.center
    }

    /// Coefficient at signed offset `i` from the center; palindromy makes
    /// this `coefficient(-i)` as well. Zero outside `-n..=n`.
    pub fn coefficient(&self, offset: i64) -> i64 {
        self.coeffs.get(&offset.unsigned_abs()).copied().unwrap_or(0)
    }

    /// Coefficient of `q^exponent` in the dense expansion, zero outside
    /// `0..=2n`.
    pub fn coefficient_at_exponent(&self, exponent: u64) -> i64 {
        if exponent > self.degree() {
            return 0;
        }
        let offset = exponent.abs_diff(self.center);
        self.coeffs.get(&offset).copied().unwrap_or(0)
    }

    /// Stored `(offset, coefficient)` records, ascending offset, offsets
    /// `0..=n` only (the mirror side is implicit).
    pub fn offsets(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.coeffs.iter().map(|(&i, &c)| (i, c))
    }

    /// Nonzero `(exponent, coefficient)` records of the dense expansion,
    /// ascending exponent over `0..=2n`.
    pub fn dense_terms(&self) -> Vec<(u64, i64)> {
        let mut terms = Vec::with_capacity(2 * self.coeffs.len());
        for (&i, &c) in self.coeffs.iter().rev() {
            terms.push((self.center - i, c));
        }
        for (&i, &c) in self.coeffs.iter() {
            if i > 0 {
                terms.push((self.center + i, c));
            }
        }
        terms
    }

    /// Exact value at an integer `q`, in arbitrary precision.
    pub fn evaluate(&self, q: i64) -> BigInt {
        let qb = BigInt::from(q);
        let mut total = BigInt::from(0);
        for (&i, &c) in &self.coeffs {
            let mut term = Pow::pow(&qb, self.center + i);
            if i > 0 {
                term += Pow::pow(&qb, self.center - i);
            }
            total += c * term;
        }
        total
    }

    /// Sum of the positive coefficients of the dense expansion (each offset
    /// `i != 0` contributes twice, the center once).
    pub fn positive_sum(&self) -> u64 {
        self.coeffs
            .iter()
            .filter(|&(_, &c)| c > 0)
            .map(|(&i, &c)| c as u64 * if i == 0 { 1 } else { 2 })
            .sum()
    }

    /// Sum of the negative coefficients of the dense expansion; nonpositive.
    pub fn negative_sum(&self) -> i64 {
        self.coeffs
            .iter()
            .filter(|&(_, &c)| c < 0)
            .map(|(&i, &c)| c * if i == 0 { 1 } else { 2 })
            .sum()
    }

    /// True iff no stored coefficient is negative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c > 0)
    }

    /// Construction-time checks: degree 2n with leading coefficient 1,
    /// coefficients in {-2,-1,1,2} with the center entry in {-2,2}, and at
    /// most d(2n) nonzero offsets above the center.
    fn assert_invariants(&self, divisor_count_2n: usize) {
        assert_eq!(
            self.coeffs.get(&self.center),
            Some(&1),
            "{}_{} must have leading coefficient 1",
            self.kind,
            self.center
        );
        for (&i, &c) in &self.coeffs {
            assert!(i <= self.center);
            if i == 0 {
                assert!(c == 2 || c == -2, "center coefficient {c} out of range");
            } else {
                assert!(c == 1 || c == -1, "offset {i} coefficient {c} out of range");
            }
        }
        let above_center = self.coeffs.range(1..).count();
        assert!(above_center <= divisor_count_2n);
    }
}

impl fmt::Display for CenteredPolynomial {
    /// Dense rendering in descending powers with explicit signs, e.g.
    /// `q^4 - q^3 - q + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn term(f: &mut fmt::Formatter<'_>, magnitude: u64, exponent: u64) -> fmt::Result {
            match (magnitude, exponent) {
                (m, 0) => write!(f, "{m}"),
                (1, 1) => write!(f, "q"),
                (m, 1) => write!(f, "{m}q"),
                (1, e) => write!(f, "q^{e}"),
                (m, e) => write!(f, "{m}q^{e}"),
            }
        }
        for (idx, &(e, c)) in self.dense_terms().iter().rev().enumerate() {
            if idx == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            term(f, c.unsigned_abs(), e)?;
        }
        Ok(())
    }
}

/// Build `C_n(q)` sparsely in `O(d(2n))` coefficient insertions.
///
/// Every solution of `n = k(k + 2i ± 1)/2` has `k` dividing `2n`, so for
/// each divisor `k` and each sign `s` the candidate offset is
/// `i = (2n/k - k - s)/2`; when that is a nonnegative integer the term
/// contributes `(-1)^k` (for `s = +1`) or `(-1)^{k-1}` (for `s = -1`). The
/// two contributions landing on offset 0 always agree in sign, producing
/// the center value `2(-1)^k`.
pub fn build_c(n: u64) -> Result<CenteredPolynomial> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let two_n = 2 * n;
    let divs = divisors(two_n);
    let mut coeffs: BTreeMap<u64, i64> = BTreeMap::new();
    for &k in &divs {
        let quot = two_n / k;
        for s in [1i128, -1] {
            let num = quot as i128 - k as i128 - s;
            if num >= 0 && num % 2 == 0 {
                let i = (num / 2) as u64;
                let sign = sign_of_parity(k, 0, 0);
                let contribution = if s == 1 { sign } else { -sign };
                *coeffs.entry(i).or_insert(0) += contribution;
            }
        }
    }
    let poly = CenteredPolynomial {
        kind: PolyKind::C,
        center: n,
        coeffs,
    };
    poly.assert_invariants(divs.len());
    Ok(poly)
}

/// Build `Γ_n(q) = C_n(-q)`: offset `i` carries `(-1)^{n+i}` times the
/// corresponding coefficient of `C_n(q)`, making the leading coefficient
/// `+1` for every `n`.
pub fn build_gamma(n: u64) -> Result<CenteredPolynomial> {
    let c = build_c(n)?;
    let divisor_count = divisors(2 * n).len();
    let coeffs = c
        .coeffs
        .into_iter()
        .map(|(i, v)| (i, sign_of_parity(n, i, 0) * v))
        .collect();
    let poly = CenteredPolynomial {
        kind: PolyKind::Gamma,
        center: n,
        coeffs,
    };
    poly.assert_invariants(divisor_count);
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ntheory::r2_bruteforce;

    fn dense(p: &CenteredPolynomial) -> Vec<i64> {
        (0..=p.degree()).map(|e| p.coefficient_at_exponent(e)).collect()
    }

    #[test]
    fn c_coefficient_examples() {
        assert_eq!(c_coefficient(1, 0).unwrap(), -2);
        assert_eq!(c_coefficient(1, 1).unwrap(), 1);
        assert_eq!(c_coefficient(2, 1).unwrap(), -1);
        assert_eq!(c_coefficient(2, 0).unwrap(), 0);
        assert_eq!(c_coefficient(3, 0).unwrap(), 2);
    }

    #[test]
    fn coefficient_domain_errors() {
        assert_eq!(c_coefficient(0, 0), Err(Error::ZeroArgument));
        assert_eq!(
            c_coefficient(3, 4),
            Err(Error::OffsetOutOfRange { offset: 4, center: 3 })
        );
        assert_eq!(gamma_coefficient(0, 0), Err(Error::ZeroArgument));
        assert!(gamma_signed(2, 3).is_err());
        assert_eq!(build_c(0), Err(Error::ZeroArgument));
        assert_eq!(build_gamma(0), Err(Error::ZeroArgument));
    }

    #[test]
    fn gamma_coefficient_examples() {
        assert_eq!(gamma_coefficient(1, 0).unwrap(), 2);
        assert_eq!(gamma_coefficient(1, 1).unwrap(), 1);
        assert_eq!(gamma_coefficient(3, 0).unwrap(), -2);
    }

    #[test]
    fn gamma_signed_examples() {
        let p = gamma_signed(1, 1).unwrap();
        assert_eq!((p.plus(), p.minus()), (1, 0));
        let p = gamma_signed(3, 0).unwrap();
        assert_eq!((p.plus(), p.minus()), (0, 2));
        let p = gamma_signed(2, 2).unwrap();
        assert_eq!((p.plus(), p.minus()), (1, 0));
    }

    #[test]
    fn golden_polynomials() {
        // C_1 = q² - 2q + 1, C_2 = q⁴ - q³ - q + 1,
        // C_3 = q⁶ - q⁵ - q⁴ + 2q³ - q² - q + 1
        assert_eq!(dense(&build_c(1).unwrap()), vec![1, -2, 1]);
        assert_eq!(dense(&build_c(2).unwrap()), vec![1, -1, 0, -1, 1]);
        assert_eq!(dense(&build_c(3).unwrap()), vec![1, -1, -1, 2, -1, -1, 1]);

        assert_eq!(dense(&build_gamma(1).unwrap()), vec![1, 2, 1]);
        assert_eq!(dense(&build_gamma(2).unwrap()), vec![1, 1, 0, 1, 1]);
        assert_eq!(dense(&build_gamma(3).unwrap()), vec![1, 1, -1, -2, -1, 1, 1]);
    }

    #[test]
    fn display_golden_fixtures() {
        assert_eq!(build_c(1).unwrap().to_string(), "q^2 - 2q + 1");
        assert_eq!(build_c(2).unwrap().to_string(), "q^4 - q^3 - q + 1");
        assert_eq!(build_gamma(1).unwrap().to_string(), "q^2 + 2q + 1");
        assert_eq!(build_gamma(2).unwrap().to_string(), "q^4 + q^3 + q + 1");
        assert_eq!(
            build_gamma(3).unwrap().to_string(),
            "q^6 + q^5 - q^4 - 2q^3 - q^2 + q + 1"
        );
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(build_gamma(1).unwrap().evaluate(1), BigInt::from(4));
        assert_eq!(build_gamma(3).unwrap().evaluate(1), BigInt::from(0));
        assert_eq!(build_c(2).unwrap().evaluate(1), BigInt::from(0));
        assert_eq!(build_gamma(2).unwrap().evaluate(2), BigInt::from(27));
        // Γ_n(q) = C_n(-q) by construction
        for n in 1..=40 {
            for q in -5..=5 {
                assert_eq!(
                    build_gamma(n).unwrap().evaluate(q),
                    build_c(n).unwrap().evaluate(-q),
                    "n={n} q={q}"
                );
            }
        }
    }

    #[test]
    fn evaluate_exceeds_machine_width() {
        // Γ_40(10) has 81 decimal digits (frozen from an independent bignum run)
        let v = build_gamma(40).unwrap().evaluate(10);
        let expected: BigInt =
            "110000000000000000000000000000000011000000000110000000000000000000000000000000011"
                .parse()
                .unwrap();
        assert_eq!(v, expected);
        assert_eq!(build_c(5).unwrap().evaluate(-3), BigInt::from(81760));
    }

    #[test]
    fn sum_examples() {
        let g1 = build_gamma(1).unwrap();
        assert_eq!((g1.positive_sum(), g1.negative_sum()), (4, 0));
        let g3 = build_gamma(3).unwrap();
        assert_eq!((g3.positive_sum(), g3.negative_sum()), (4, -4));
        assert!(build_gamma(2).unwrap().is_nonnegative());
        assert!(!g3.is_nonnegative());
    }

    #[test]
    fn sparse_matches_dense_formula() {
        for n in 1..=300 {
            let c = build_c(n).unwrap();
            let g = build_gamma(n).unwrap();
            for i in 0..=n {
                assert_eq!(c.coefficient(i as i64), c_coefficient(n, i).unwrap(), "C n={n} i={i}");
                assert_eq!(
                    g.coefficient(i as i64),
                    gamma_coefficient(n, i).unwrap(),
                    "Gamma n={n} i={i}"
                );
            }
        }
    }

    #[test]
    fn palindromy_and_q1_mass() {
        for n in 1..=300 {
            let c = build_c(n).unwrap();
            for e in 0..=c.degree() {
                assert_eq!(
                    c.coefficient_at_exponent(e),
                    c.coefficient_at_exponent(c.degree() - e)
                );
            }
            assert_eq!(c.evaluate(1), BigInt::from(0), "C_{n}(1)");
            let g = build_gamma(n).unwrap();
            assert_eq!(g.evaluate(1), BigInt::from(r2_bruteforce(n)), "Gamma_{n}(1)");
        }
    }

    #[test]
    fn dense_terms_ascending_nonzero() {
        let g = build_gamma(2).unwrap();
        assert_eq!(g.dense_terms(), vec![(0, 1), (1, 1), (3, 1), (4, 1)]);
        let c = build_c(1).unwrap();
        assert_eq!(c.dense_terms(), vec![(0, 1), (1, -2), (2, 1)]);
    }
}
