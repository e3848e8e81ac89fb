//! Closed-form descriptions of three-dimensional membership.
//!
//! Both classifiers evaluate to the same answer as
//! [`hilbert_criterion`](crate::angleset::hilbert_criterion) on the inputs they
//! cover. The first fixes the shape of `|a|^2` and reads conditions off the
//! square-free part of `tan^2`; the second swaps the roles.

use num_bigint::BigInt;

use crate::angleset::SquarefreeShape;
use crate::error::{Error, Result};
use crate::exactnum::{is_rational_three_square, is_three_square, legendre_u64, Rational};

fn check_inputs(norm2: u64, tan2: &Rational) -> Result<()> {
    if norm2 == 0 {
        return Err(Error::ZeroInput);
    }
    if !is_three_square(norm2) {
        return Err(Error::NotThreeSquare(norm2.to_string()));
    }
    if !is_rational_three_square(tan2)? {
        return Err(Error::OutsideTheta { dim: 3 });
    }
    Ok(())
}

fn count_3_mod_4(primes: &[u64]) -> usize {
    primes.iter().filter(|&&p| p % 4 == 3).count()
}

/// `(r/q) = (-1)^((r-1)/2)` for every `r`.
fn residues_match_sign(primes: &[u64], q: u64) -> bool {
    primes.iter().all(|&r| {
        let expected = if r % 4 == 1 { 1 } else { -1 };
        legendre_u64(r, q) == expected
    })
}

/// Conditions shared by both classifiers once the fixed side has odd prime
/// square-free part `q`. `has_two` and `others` describe the other side with
/// `q` removed.
fn single_prime_case(q: u64, has_two: bool, others: &[u64], literal: bool) -> bool {
    let odd_count = count_3_mod_4(others) % 2 == 1;
    match q % 8 {
        3 => has_two && others.iter().all(|&r| legendre_u64(r, q) == 1),
        1 => residues_match_sign(others, q) && !odd_count,
        5 => {
            residues_match_sign(others, q)
                && ((!has_two && !odd_count) || (has_two && odd_count && !literal))
        }
        _ => unreachable!("q = 7 mod 8 is excluded by the three-square check"),
    }
}

/// Membership for `|a|^2` whose square-free part is 1, 2 or an odd prime.
pub fn classify_by_norm(norm2: u64, tan2: &Rational) -> Result<bool> {
    check_inputs(norm2, tan2)?;
    let a = SquarefreeShape::of(&Rational::from_integer(BigInt::from(norm2)))?;
    let t = SquarefreeShape::of(tan2)?;
    match (a.has_two, a.odd.as_slice()) {
        (false, []) => Ok(t.odd.iter().all(|&p| p % 4 == 1)),
        (true, []) => Ok(t.odd.iter().all(|&p| p % 8 == 1 || p % 8 == 3)),
        (false, [q]) => {
            let others: Vec<u64> = t.odd.iter().copied().filter(|p| p != q).collect();
            Ok(single_prime_case(*q, t.has_two, &others, false))
        }
        _ => Err(Error::UncoveredForm(format!(
            "square-free part of |a|^2 is {}, expected 1, 2 or an odd prime",
            a.value()
        ))),
    }
}

/// How to read the second alternative of the `p = 5 mod 8` case of the
/// tangent-side classifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TangentReading {
    /// Two divides `|a|^2` and an odd number of the remaining primes are
    /// `3 mod 4`.
    #[default]
    Corrected,
    /// Reads the second alternative as asking for half of an odd product to be
    /// odd, which never holds, so only the first alternative survives.
    Literal,
}

/// Membership for `tan^2` whose square-free part is 1, 2 or an odd prime.
pub fn classify_by_tangent(norm2: u64, tan2: &Rational) -> Result<bool> {
    classify_by_tangent_with(norm2, tan2, TangentReading::Corrected)
}

pub fn classify_by_tangent_with(
    norm2: u64,
    tan2: &Rational,
    reading: TangentReading,
) -> Result<bool> {
    check_inputs(norm2, tan2)?;
    let a = SquarefreeShape::of(&Rational::from_integer(BigInt::from(norm2)))?;
    let t = SquarefreeShape::of(tan2)?;
    match (t.has_two, t.odd.as_slice()) {
        (false, []) => Ok(a.odd.iter().all(|&q| q % 4 == 1)),
        (true, []) => Ok(a.odd.iter().all(|&q| q % 8 == 1 || q % 8 == 3)),
        (false, [p]) => {
            let others: Vec<u64> = a.odd.iter().copied().filter(|q| q != p).collect();
            let literal = reading == TangentReading::Literal;
            Ok(single_prime_case(*p, a.has_two, &others, literal))
        }
        _ => Err(Error::UncoveredForm(format!(
            "square-free part of tan^2 is {}, expected 1, 2 or an odd prime",
            t.value()
        ))),
    }
}
