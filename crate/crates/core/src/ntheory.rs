//! Integer arithmetic substrate: factorization, divisor enumeration, mod-class
//! divisor counts, the brute-force sum-of-two-squares oracle, and primitive
//! Pythagorean triple classification.

use crate::{Error, Result};

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

fn is_perfect_square(n: u64) -> Option<u64> {
    let s = n.isqrt();
    (s * s == n).then_some(s)
}

/// Prime factorization of a positive integer as ordered `(prime, exponent)`
/// pairs. `factorize(1)` has an empty factor list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// The factored value.
    pub fn value(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs with primes strictly increasing.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Number of divisors, `∏ (e + 1)`.
    pub fn divisor_count(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| e as u64 + 1).product()
    }
}

/// Factor `n` by deterministic trial division up to `√n`.
///
/// Intended range is `1 ..= 2^62`; desk-scale verification ranges stay far
/// below that. Returns [`Error::ZeroArgument`] for `n = 0`.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut push = |p: u64, rest: &mut u64| {
        let mut e = 0u32;
        while (*rest).is_multiple_of(p) {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(2, &mut rest);
    let mut p = 3;
    while p * p <= rest {
        push(p, &mut rest);
        p += 2;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

/// All divisors of `n >= 1`, ascending.
///
/// Collected directly by trial division so the result is independent of
/// [`factorize`]; the two are cross-validated in tests.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors: n must be >= 1");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `d_{a,m}(n)`: the number of divisors of `n` congruent to `a` mod `m`.
pub fn divisor_count_mod(n: u64, a: u64, m: u64) -> u64 {
    assert!(m >= 1 && a < m, "divisor_count_mod: need 0 <= a < m");
    divisors(n).iter().filter(|&&d| d % m == a).count() as u64
}

/// Count integer pairs `(x, y)` with `x² + y² = n`, both signs and both
/// orders, by direct enumeration over `|x| <= √n`.
///
/// This is the independent oracle for the q-analogue identity; it touches no
/// polynomial code. `r2_bruteforce(0) = 1` (the single pair `(0, 0)`).
pub fn r2_bruteforce(n: u64) -> u64 {
    let s = n.isqrt() as i64;
    let mut count = 0;
    for x in -s..=s {
        let r = n - (x * x) as u64;
        if let Some(y) = is_perfect_square(r) {
            count += if y == 0 { 1 } else { 2 };
        }
    }
    count
}

/// True iff every prime factor `p` of `n` satisfies `p ≢ 3 (mod 4)`.
pub fn has_no_prime_factor_3_mod4(n: u64) -> bool {
    assert!(n >= 1);
    factorize(n)
        .expect("n >= 1")
        .factors()
        .iter()
        .all(|&(p, _)| p % 4 != 3)
}

/// True iff `x² + y² = z²` and `gcd(x, y, z) = 1`. The degenerate triples
/// `(1, 0, 1)` and `(0, 1, 1)` count as primitive.
pub fn is_primitive_triple(x: u64, y: u64, z: u64) -> bool {
    let (x, y, z) = (x as u128, y as u128, z as u128);
    x * x + y * y == z * z && gcd(gcd(x as u64, y as u64), z as u64) == 1
}

/// A primitive Pythagorean triple `(x, y, z)` plus the 2-adic exponent `k`
/// witnessing `n = 2^k · z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TripleWitness {
    x: u64,
    y: u64,
    z: u64,
    k: u32,
}

impl TripleWitness {
    /// Build a witness, rejecting triples that are not primitive Pythagorean.
    pub fn new(x: u64, y: u64, z: u64, k: u32) -> Result<Self> {
        if !is_primitive_triple(x, y, z) {
            return Err(Error::NotPrimitiveTriple { x, y, z });
        }
        Ok(TripleWitness { x, y, z, k })
    }

    pub fn x(&self) -> u64 {
        self.x
    }

    pub fn y(&self) -> u64 {
        self.y
    }

    pub fn z(&self) -> u64 {
        self.z
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// The integer `2^k · z` this witness decomposes.
    pub fn witnessed_value(&self) -> u64 {
        (1u64 << self.k) * self.z
    }
}

/// Witness `n = 2^k · z` with `z` a primitive hypotenuse, if one exists.
///
/// `k` is the 2-adic valuation of `n`. The odd part `z` is a primitive
/// hypotenuse iff `z = 1` (witnessed by the degenerate `(1, 0, 1)`) or every
/// prime factor of `z` is `≡ 1 (mod 4)`; in the latter case the legs come
/// from the Euclid parametrization `x = m² − t²`, `y = 2mt`, `z = m² + t²`
/// at the smallest admissible `m`.
pub fn hypotenuse_witness(n: u64) -> Option<TripleWitness> {
    assert!(n >= 1);
    let k = n.trailing_zeros();
    let z = n >> k;
    if z == 1 {
        return Some(TripleWitness::new(1, 0, 1, k).expect("degenerate triple"));
    }
    if !has_no_prime_factor_3_mod4(z) {
        return None;
    }
    let mut m = 2;
    while m * m < z {
        if let Some(t) = is_perfect_square(z - m * m) {
            // z odd forces m, t to have opposite parity; coprimality makes
            // the triple primitive.
            if (1..m).contains(&t) && gcd(m, t) == 1 {
                let w = TripleWitness::new(m * m - t * t, 2 * m * t, z, k)
                    .expect("Euclid parametrization yields a primitive triple");
                return Some(w);
            }
        }
        m += 1;
    }
    unreachable!("odd z with all prime factors 1 mod 4 is a sum of two coprime squares");
}

/// All primitive Pythagorean triples with hypotenuse `z <= z_limit`, each
/// exactly once, sorted by `(z, x)`.
///
/// Nondegenerate triples are emitted in Euclid form (`x` odd, `y` even); the
/// two degenerate orientations `(0, 1, 1)` and `(1, 0, 1)` are both included.
/// All witnesses carry `k = 0`.
pub fn generate_primitive_triples(z_limit: u64) -> Vec<TripleWitness> {
    let mut out = Vec::new();
    if z_limit >= 1 {
        out.push(TripleWitness::new(0, 1, 1, 0).expect("degenerate triple"));
        out.push(TripleWitness::new(1, 0, 1, 0).expect("degenerate triple"));
    }
    let mut m = 2;
    while m * m < z_limit {
        for t in 1..m {
            if (m + t) % 2 == 1 && gcd(m, t) == 1 {
                let z = m * m + t * t;
                if z <= z_limit {
                    let w = TripleWitness::new(m * m - t * t, 2 * m * t, z, 0)
                        .expect("Euclid parametrization yields a primitive triple");
                    out.push(w);
                }
            }
        }
        m += 1;
    }
    out.sort_by_key(|w| (w.z, w.x));
    out
}
