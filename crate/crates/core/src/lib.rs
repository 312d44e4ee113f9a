//! Kassel–Reutenauer q-analogue of the sum-of-two-squares counting function.
//!
//! For every integer `n >= 1` the polynomial `C_n(q)` of degree `2n` has
//! coefficients given by explicit case formulas over solutions of
//! `n = k(k + 2i ± 1)/2`, and its signed variant `Γ_n(q) := C_n(-q)`
//! satisfies `Γ_n(1) = r₂(n)`, the number of ways to write `n` as an
//! ordered sum of two integer squares (signs counted).
//!
//! This crate constructs both polynomials sparsely in `O(d(2n))` coefficient
//! insertions, and ships an executable verification surface for the
//! identities tying their coefficients to mod-4 divisor counts and to
//! primitive Pythagorean triples:
//!
//! - [`qpoly`] — sparse centered polynomials, coefficient formulas,
//!   arbitrary-precision evaluation.
//! - [`ntheory`] — factorization, divisor counts, the brute-force `r₂`
//!   oracle, and primitive-triple machinery.
//! - [`identities`] — per-`n` checks (`lemma1`, `lemma2`, `prop1_pos`,
//!   `prop1_neg`, `qanalogue`, `theorem1`, `structural`) and a parallel
//!   range verifier with deterministic output.

pub mod identities;
pub mod ntheory;
pub mod qpoly;

pub use identities::{
    check_lemma1, check_lemma2, check_prop1, check_qanalogue, check_structural, check_theorem1,
    verify_range, CheckCounts, CheckName, CheckResult, VerificationReport, VerificationSummary,
};
pub use ntheory::{
    divisor_count_mod, divisors, factorize, generate_primitive_triples,
    has_no_prime_factor_3_mod4, hypotenuse_witness, is_primitive_triple, r2_bruteforce,
    Factorization, TripleWitness,
};
pub use qpoly::{
    build_c, build_gamma, c_coefficient, gamma_coefficient, gamma_signed, CenteredPolynomial,
    PolyKind, SignedCoefficientPair,
};

/// Errors for operations with explicit domain contracts.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An operation defined only for positive integers received 0.
    #[error("argument must be a positive integer")]
    ZeroArgument,
    /// A coefficient offset outside `0..=n`.
    #[error("offset {offset} exceeds center {center}")]
    OffsetOutOfRange { offset: u64, center: u64 },
    /// A triple failing `x² + y² = z²` or `gcd(x, y, z) = 1`.
    #[error("({x}, {y}, {z}) is not a primitive Pythagorean triple")]
    NotPrimitiveTriple { x: u64, y: u64, z: u64 },
    /// A verification range with `lo = 0` or `lo > hi`.
    #[error("invalid range {lo}..{hi}: need 1 <= lo <= hi")]
    InvalidRange { lo: u64, hi: u64 },
    /// `verify_range` called with an empty check set.
    #[error("no checks selected")]
    NoChecksSelected,
    /// An unrecognized check name.
    #[error("unknown check name `{0}` (valid: lemma1, lemma2, prop1_pos, prop1_neg, qanalogue, theorem1, structural)")]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
