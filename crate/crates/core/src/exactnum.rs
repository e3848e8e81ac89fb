//! Exact integer and rational helpers: trial-division factorization,
//! square-free parts, the Legendre symbol and the three-square theorem.
//!
//! Rationals are [`num_rational::BigRational`], which is always stored in
//! lowest terms with a positive denominator. Factorization is plain trial
//! division and is only meant for the small norms and tangent parts this
//! crate works with; anything above [`FACTOR_LIMIT`] is rejected.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Largest integer accepted by [`factorize`].
pub const FACTOR_LIMIT: u64 = 1_000_000_000_000;

/// Builds the rational `num/den`, normalized.
///
/// Panics if `den == 0`.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Prime factorization `n = prod p^e`, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Primes that occur to an odd power.
    pub fn odd_primes_of_squarefree(&self) -> Vec<u64> {
        self.factors
            .iter()
            .filter(|&&(_, e)| e % 2 == 1)
            .map(|&(p, _)| p)
            .collect()
    }

    /// Multiplies the factorization back out.
    pub fn value(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, &(p, e)| acc * BigUint::from(p).pow(e))
    }
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    if n > FACTOR_LIMIT {
        return Err(Error::TooLarge {
            what: "factorization input",
            value: n.to_string(),
            bound: FACTOR_LIMIT.to_string(),
        });
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut push = |p: u64, rest: &mut u64| {
        let mut e = 0;
        while *rest % p == 0 {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(2, &mut rest);
    push(3, &mut rest);
    let mut d = 5;
    while d * d <= rest {
        push(d, &mut rest);
        push(d + 2, &mut rest);
        d += 6;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { factors })
}

/// Factorizes an arbitrary-precision integer, subject to [`FACTOR_LIMIT`].
pub fn factorize_big(n: &BigUint) -> Result<Factorization> {
    match n.to_u64() {
        Some(v) => factorize(v),
        None => Err(Error::TooLarge {
            what: "factorization input",
            value: n.to_string(),
            bound: FACTOR_LIMIT.to_string(),
        }),
    }
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d: u64 = 5;
    while d.checked_mul(d).is_some_and(|sq| sq <= n) {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

fn require_positive(x: &Rational) -> Result<()> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositive(x.to_string()))
    }
}

/// Sorted primes of the square-free part of a positive rational, i.e. the
/// primes with odd exponent in `numerator * denominator`.
pub fn squarefree_primes(x: &Rational) -> Result<Vec<u64>> {
    require_positive(x)?;
    let num = factorize_big(x.numer().magnitude())?;
    let den = factorize_big(x.denom().magnitude())?;
    // numerator and denominator are coprime, so their prime sets are disjoint
    let mut primes = num.odd_primes_of_squarefree();
    primes.extend(den.odd_primes_of_squarefree());
    primes.sort_unstable();
    Ok(primes)
}

/// The least positive integer `N` such that `x / N` is the square of a
/// rational.
pub fn squarefree_part(x: &Rational) -> Result<BigUint> {
    Ok(squarefree_primes(x)?
        .into_iter()
        .fold(BigUint::one(), |acc, p| acc * p))
}

/// Square-free part of a positive integer.
pub fn squarefree_part_int(n: u64) -> Result<u64> {
    Ok(factorize(n)?
        .odd_primes_of_squarefree()
        .into_iter()
        .product())
}

/// True iff `x >= 0` is the square of a rational.
pub fn is_rational_square(x: &Rational) -> bool {
    if x.is_negative() {
        return false;
    }
    is_perfect_square(x.numer().magnitude()) && is_perfect_square(x.denom().magnitude())
}

pub fn is_perfect_square(n: &BigUint) -> bool {
    let r = n.sqrt();
    &(&r * &r) == n
}

/// Square root of a rational square, `None` if `x` is not one.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if !is_rational_square(x) {
        return None;
    }
    let n = BigInt::from_biguint(Sign::Plus, x.numer().magnitude().sqrt());
    let d = BigInt::from_biguint(Sign::Plus, x.denom().magnitude().sqrt());
    Some(Rational::new(n, d))
}

/// Legendre symbol `(u/p)` for an odd prime `p`.
pub fn legendre(u: &BigInt, p: u64) -> Result<i8> {
    if p % 2 == 0 || !is_prime(p) {
        return Err(Error::NotOddPrime(p.to_string()));
    }
    Ok(legendre_unchecked(u, p))
}

/// Legendre symbol via Euler's criterion; `p` must be an odd prime.
pub(crate) fn legendre_unchecked(u: &BigInt, p: u64) -> i8 {
    let r = u
        .mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue below p");
    legendre_u64(r, p)
}

pub(crate) fn legendre_u64(u: u64, p: u64) -> i8 {
    let u = u % p;
    if u == 0 {
        return 0;
    }
    match pow_mod(u, (p - 1) / 2, p) {
        1 => 1,
        x if x == p - 1 => -1,
        other => unreachable!("Euler criterion gave {other} mod {p}; modulus is not prime"),
    }
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m = m as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Three-square theorem: `n` is a sum of three integer squares iff it is not
/// of the form `4^k (8m + 7)`.
pub fn is_three_square(n: u64) -> bool {
    if n == 0 {
        return true;
    }
    let mut m = n;
    while m % 4 == 0 {
        m /= 4;
    }
    m % 8 != 7
}

pub fn is_three_square_big(n: &BigUint) -> bool {
    if n.is_zero() {
        return true;
    }
    let four = BigUint::from(4u32);
    let mut m = n.clone();
    while (&m % &four).is_zero() {
        m /= &four;
    }
    m % 8u32 != BigUint::from(7u32)
}

/// `n = r^2 + s^2 + t^2` with `r >= s >= t >= 0`, the first such triple in
/// lexicographically descending order, or `None` when `n` has no
/// representation.
pub fn three_square_decomp(n: u64) -> Option<(u64, u64, u64)> {
    if !is_three_square(n) {
        return None;
    }
    let mut r = n.sqrt();
    loop {
        let rest = n - r * r;
        // r is the largest part, so r^2 >= n/3
        if 3 * r * r < n {
            break;
        }
        let mut s = rest.sqrt().min(r);
        loop {
            let rest2 = rest - s * s;
            if 2 * s * s < rest {
                break;
            }
            let t = rest2.sqrt();
            if t * t == rest2 && t <= s {
                return Some((r, s, t));
            }
            if s == 0 {
                break;
            }
            s -= 1;
        }
        if r == 0 {
            break;
        }
        r -= 1;
    }
    unreachable!("three-square theorem guarantees a representation of {n}")
}

/// True iff the positive rational `x` is a sum of three rational squares,
/// i.e. its square-free part is not `7 mod 8`.
pub fn is_rational_three_square(x: &Rational) -> Result<bool> {
    let sf = squarefree_part(x)?;
    Ok(sf % 8u32 != BigUint::from(7u32))
}

/// `p`-adic valuation of a nonzero integer together with its `p`-free part.
pub(crate) fn split_valuation(n: &BigInt, p: u64) -> (i64, BigInt) {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut v = 0;
    let mut rest = n.clone();
    loop {
        let (q, r) = rest.div_rem(&p);
        if !r.is_zero() {
            break;
        }
        rest = q;
        v += 1;
    }
    (v, rest)
}

/// Converts a nonnegative big integer to `u64` or reports it as too large.
pub(crate) fn to_u64(n: &BigInt, what: &'static str) -> Result<u64> {
    n.to_u64().ok_or_else(|| Error::TooLarge {
        what,
        value: n.to_string(),
        bound: u64::MAX.to_string(),
    })
}
