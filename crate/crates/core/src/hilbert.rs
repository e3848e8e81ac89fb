//! Hilbert symbols `(a, b)_v` of nonzero rationals at every place of `Q`.
//!
//! Write `a = p^alpha * a1 / a2` and `b = p^beta * b1 / b2` with
//! `p` not dividing `a1 a2 b1 b2`. Then for odd `p`
//!
//! ```text
//! (a, b)_p = (-1)^(alpha beta (p-1)/2) * (a1 a2 / p)^beta * (b1 b2 / p)^alpha
//! ```
//!
//! and for `p = 2`, with `u = a1 a2`, `w = b1 b2`,
//!
//! ```text
//! (a, b)_2 = (-1)^((u-1)(w-1)/4 + alpha (w^2-1)/8 + beta (u^2-1)/8)
//! ```
//!
//! At infinity the symbol is `-1` exactly when both arguments are negative.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{factorize_big, is_prime, legendre_unchecked, split_valuation, Rational};

/// A place of `Q`: a finite prime or the real place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Prime(u64),
    Infinity,
}

impl Place {
    /// Validated constructor for a finite place.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Place::Prime(p))
        } else {
            Err(Error::NotPrime(p.to_string()))
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Prime(p) => write!(f, "{p}"),
            Place::Infinity => f.write_str("inf"),
        }
    }
}

/// Value of a Hilbert symbol; never zero for nonzero arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymbolValue {
    Plus,
    Minus,
}

impl SymbolValue {
    pub fn from_sign_exponent(odd: bool) -> Self {
        if odd {
            SymbolValue::Minus
        } else {
            SymbolValue::Plus
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            SymbolValue::Plus => 1,
            SymbolValue::Minus => -1,
        }
    }

    pub fn is_plus(self) -> bool {
        self == SymbolValue::Plus
    }
}

impl Mul for SymbolValue {
    type Output = SymbolValue;

    fn mul(self, rhs: Self) -> Self {
        SymbolValue::from_sign_exponent(self != rhs)
    }
}

impl std::iter::Product for SymbolValue {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(SymbolValue::Plus, |acc, x| acc * x)
    }
}

impl fmt::Display for SymbolValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_i8())
    }
}

impl Serialize for SymbolValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i8(self.as_i8())
    }
}

/// `x = p^v * unit` with the unit given as `numerator * denominator`
/// (same square class as `numerator / denominator`).
struct LocalSplit {
    valuation: i64,
    unit: BigInt,
}

fn local_split(x: &Rational, p: u64) -> LocalSplit {
    let (vn, n) = split_valuation(x.numer(), p);
    let (vd, d) = split_valuation(x.denom(), p);
    LocalSplit {
        valuation: vn - vd,
        unit: n * d,
    }
}

fn require_nonzero(x: &Rational) -> Result<()> {
    if x.is_zero() {
        Err(Error::ZeroRational)
    } else {
        Ok(())
    }
}

/// `(a, b)_v` for nonzero rationals.
pub fn hilbert_symbol(a: &Rational, b: &Rational, place: Place) -> Result<SymbolValue> {
    require_nonzero(a)?;
    require_nonzero(b)?;
    if let Place::Prime(p) = place {
        if !is_prime(p) {
            return Err(Error::NotPrime(p.to_string()));
        }
    }
    Ok(symbol_unchecked(a, b, place))
}

/// Same as [`hilbert_symbol`] but trusts that `a, b != 0` and that a finite
/// place carries a prime.
pub(crate) fn symbol_unchecked(a: &Rational, b: &Rational, place: Place) -> SymbolValue {
    match place {
        Place::Infinity => SymbolValue::from_sign_exponent(a.is_negative() && b.is_negative()),
        Place::Prime(2) => symbol_at_two(a, b),
        Place::Prime(p) => symbol_at_odd(a, b, p),
    }
}

fn symbol_at_odd(a: &Rational, b: &Rational, p: u64) -> SymbolValue {
    let sa = local_split(a, p);
    let sb = local_split(b, p);
    let alpha_odd = sa.valuation.rem_euclid(2) == 1;
    let beta_odd = sb.valuation.rem_euclid(2) == 1;

    let mut minus = alpha_odd && beta_odd && (p % 4 == 3);
    if beta_odd && legendre_unchecked(&sa.unit, p) == -1 {
        minus = !minus;
    }
    if alpha_odd && legendre_unchecked(&sb.unit, p) == -1 {
        minus = !minus;
    }
    SymbolValue::from_sign_exponent(minus)
}

fn residue_mod8(n: &BigInt) -> u32 {
    n.mod_floor(&BigInt::from(8))
        .to_u32()
        .expect("residue below 8")
}

fn symbol_at_two(a: &Rational, b: &Rational) -> SymbolValue {
    let sa = local_split(a, 2);
    let sb = local_split(b, 2);
    let u = residue_mod8(&sa.unit);
    let w = residue_mod8(&sb.unit);
    // epsilon(x) = (x-1)/2 mod 2, omega(x) = (x^2-1)/8 mod 2 for odd x
    let eps = |x: u32| (x % 4 == 3) as u32;
    let omega = |x: u32| (x == 3 || x == 5) as u32;
    let alpha = sa.valuation.rem_euclid(2) as u32;
    let beta = sb.valuation.rem_euclid(2) as u32;
    let exponent = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
    SymbolValue::from_sign_exponent(exponent % 2 == 1)
}

/// Places where `(a, b)_v` can differ from `+1`: infinity, 2, and the odd
/// primes dividing a numerator or denominator of `a` or `b`.
pub fn support_places(a: &Rational, b: &Rational) -> Result<Vec<Place>> {
    require_nonzero(a)?;
    require_nonzero(b)?;
    let mut primes = vec![2u64];
    for x in [a.numer(), a.denom(), b.numer(), b.denom()] {
        primes.extend(factorize_big(x.magnitude())?.primes());
    }
    primes.sort_unstable();
    primes.dedup();
    let mut places: Vec<Place> = primes.into_iter().map(Place::Prime).collect();
    places.push(Place::Infinity);
    Ok(places)
}

/// Evaluates `prod_v (a, b)_v` over the support and reports whether it is
/// `+1`, as the product formula demands.
pub fn hilbert_product_check(a: &Rational, b: &Rational) -> Result<bool> {
    let places = support_places(a, b)?;
    let product: SymbolValue = places
        .into_iter()
        .map(|v| symbol_unchecked(a, b, v))
        .product();
    Ok(product.is_plus())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat_int, rational};
    use proptest::prelude::*;

    fn sym(a: i64, b: i64, v: Place) -> i8 {
        hilbert_symbol(&rat_int(a), &rat_int(b), v).unwrap().as_i8()
    }

    /// Local solvability oracle: does `a x^2 + b y^2 = z^2` have a primitive
    /// solution modulo `m`? For arguments of valuation at most one, `m = p^2`
    /// (odd `p`) or `m = 64` (`p = 2`) decides solvability over `Q_p`.
    fn has_primitive_zero(a: i64, b: i64, p: i64, m: i64) -> bool {
        for x in 0..m {
            for y in 0..m {
                let lhs = (a * x * x + b * y * y).rem_euclid(m);
                for z in 0..m {
                    if (x % p != 0 || y % p != 0 || z % p != 0) && (z * z).rem_euclid(m) == lhs {
                        return true;
                    }
                }
            }
        }
        false
    }

    #[test]
    fn spec_examples() {
        assert_eq!(sym(3, 3, Place::Prime(3)), -1);
        assert_eq!(sym(2, 5, Place::Prime(5)), -1);
        assert_eq!(sym(3, 3, Place::Prime(2)), -1);
        assert_eq!(sym(3, 3, Place::Infinity), 1);
        assert_eq!(sym(-1, -1, Place::Infinity), -1);
        assert_eq!(sym(-1, -1, Place::Prime(2)), -1);
        assert_eq!(sym(7, 49, Place::Prime(7)), 1);
    }

    #[test]
    fn product_check_examples() {
        assert!(hilbert_product_check(&rat_int(3), &rat_int(3)).unwrap());
        assert!(hilbert_product_check(&rat_int(-1), &rat_int(-1)).unwrap());
        assert!(hilbert_product_check(&rat_int(5), &rat_int(7)).unwrap());
        let places = support_places(&rat_int(5), &rat_int(7)).unwrap();
        assert_eq!(
            places,
            vec![
                Place::Prime(2),
                Place::Prime(5),
                Place::Prime(7),
                Place::Infinity
            ]
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            hilbert_symbol(&rat_int(0), &rat_int(3), Place::Infinity),
            Err(Error::ZeroRational)
        );
        assert!(matches!(
            hilbert_symbol(&rat_int(2), &rat_int(3), Place::Prime(9)),
            Err(Error::NotPrime(_))
        ));
        assert!(Place::prime(15).is_err());
        assert_eq!(Place::prime(13).unwrap(), Place::Prime(13));
    }

    #[test]
    fn symbol_matches_local_solvability() {
        for p in [2i64, 3, 5, 7] {
            let modulus = if p == 2 { 64 } else { p * p };
            let units: Vec<i64> = if p == 2 {
                vec![1, 3, 5, 7]
            } else {
                (1..p).collect()
            };
            let mut vals = vec![];
            for u in units {
                vals.extend([u, u * p, -u, -u * p]);
            }
            for &a in &vals {
                for &b in &vals {
                    let expected = if has_primitive_zero(a, b, p, modulus) {
                        1
                    } else {
                        -1
                    };
                    assert_eq!(sym(a, b, Place::Prime(p as u64)), expected, "({a},{b})_{p}");
                }
            }
        }
    }

    #[test]
    fn p_p_values() {
        for p in (3..200u64).filter(|&p| is_prime(p)) {
            let expected = if p % 4 == 1 { 1 } else { -1 };
            assert_eq!(sym(p as i64, p as i64, Place::Prime(p)), expected);
        }
        assert_eq!(sym(2, 2, Place::Prime(2)), 1);
    }

    fn nonzero_rational() -> impl Strategy<Value = Rational> {
        (1i64..3000, 1i64..3000, any::<bool>())
            .prop_map(|(n, d, neg)| rational(if neg { -n } else { n }, d))
    }

    fn place_for(a: &Rational, b: &Rational, pick: usize) -> Place {
        let places = support_places(a, b).unwrap();
        places[pick % places.len()]
    }

    proptest! {
        #[test]
        fn symmetric(a in nonzero_rational(), b in nonzero_rational(), pick in 0usize..16) {
            let v = place_for(&a, &b, pick);
            prop_assert_eq!(hilbert_symbol(&a, &b, v).unwrap(), hilbert_symbol(&b, &a, v).unwrap());
        }

        #[test]
        fn bimultiplicative(a in nonzero_rational(), b in nonzero_rational(), c in nonzero_rational(), pick in 0usize..16) {
            let bc = &b * &c;
            let v = place_for(&a, &bc, pick);
            let lhs = hilbert_symbol(&a, &bc, v).unwrap();
            let rhs = hilbert_symbol(&a, &b, v).unwrap() * hilbert_symbol(&a, &c, v).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn steinberg_relation(a in nonzero_rational(), pick in 0usize..16) {
            let one_minus = rat_int(1) - &a;
            prop_assume!(!one_minus.is_zero());
            let v = place_for(&a, &one_minus, pick);
            prop_assert!(hilbert_symbol(&a, &one_minus, v).unwrap().is_plus());
        }

        #[test]
        fn square_insensitive(a in nonzero_rational(), b in nonzero_rational(), k in nonzero_rational(), pick in 0usize..16) {
            let ak = &a * &k * &k;
            let v = place_for(&ak, &b, pick);
            prop_assert_eq!(hilbert_symbol(&ak, &b, v).unwrap(), hilbert_symbol(&a, &b, v).unwrap());
        }

        #[test]
        fn product_formula(a in nonzero_rational(), b in nonzero_rational()) {
            prop_assert!(hilbert_product_check(&a, &b).unwrap());
        }
    }
}
