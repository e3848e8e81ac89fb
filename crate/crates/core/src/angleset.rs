//! Membership of angles in the lattice angle sets.
//!
//! `theta_n_contains` answers whether an angle occurs between *some* pair of
//! integer vectors in dimension `n`. `theta_n_of_a_contains` fixes one of the
//! two vectors. Outside dimension three the two questions have the same
//! answer; in dimension three the answer depends on `|a|^2` and is decided by
//! a product of three Hilbert symbols at each odd prime:
//!
//! ```text
//! (N, N)_p (N, t)_p (t, t)_p = 1      for N = |a|^2, t = tan^2(theta)
//! ```
//!
//! Only primes dividing the square-free parts of `N` or `t` can violate it.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::Serialize;

use crate::angle::AngleClass;
use crate::error::{Error, Result};
use crate::exactnum::{
    is_rational_square, is_rational_three_square, is_three_square, legendre_u64, squarefree_primes,
    three_square_decomp, to_u64, Rational,
};
use crate::hilbert::{symbol_unchecked, Place, SymbolValue};
use crate::vector::IntVec;
use crate::witness::{perpendicular, witness_for_angle, SearchBudget};

/// Upper end of the norm scan in [`excluded_vector`].
pub const EXCLUDED_VECTOR_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    HilbertCriterion,
    Construction,
    Oracle,
}

/// The failing odd prime and the three symbol factors
/// `[(N,N)_p, (N,t)_p, (t,t)_p]`, whose product is `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExclusionCert {
    pub prime: u64,
    pub symbols: [SymbolValue; 3],
}

impl ExclusionCert {
    pub fn product(&self) -> SymbolValue {
        self.symbols.iter().copied().product()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Witness { vector: IntVec },
    Exclusion(ExclusionCert),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub member: bool,
    pub method: Method,
    pub certificate: Option<Certificate>,
}

impl Verdict {
    pub fn witness(&self) -> Option<&IntVec> {
        match &self.certificate {
            Some(Certificate::Witness { vector }) => Some(vector),
            _ => None,
        }
    }

    pub fn exclusion(&self) -> Option<&ExclusionCert> {
        match &self.certificate {
            Some(Certificate::Exclusion(cert)) => Some(cert),
            _ => None,
        }
    }
}

/// Whether `angle` occurs between two integer vectors of dimension `n`.
pub fn theta_n_contains(n: usize, angle: &AngleClass) -> Result<bool> {
    if n < 2 {
        return Err(Error::BadDimension {
            got: n,
            expected: ">= 2",
        });
    }
    let tan2 = match angle {
        AngleClass::Oblique { tan2, .. } => tan2,
        _ => return Ok(true),
    };
    match n {
        2 => Ok(is_rational_square(tan2)),
        3 | 4 => is_rational_three_square(tan2),
        _ => Ok(true),
    }
}

fn odd_support(norm2: &Rational, tan2: &Rational) -> Result<Vec<u64>> {
    let mut primes = squarefree_primes(norm2)?;
    primes.extend(squarefree_primes(tan2)?);
    primes.retain(|&p| p != 2);
    primes.sort_unstable();
    primes.dedup();
    Ok(primes)
}

fn first_failure(norm2: &Rational, tan2: &Rational) -> Result<Option<ExclusionCert>> {
    for p in odd_support(norm2, tan2)? {
        let place = Place::Prime(p);
        let symbols = [
            symbol_unchecked(norm2, norm2, place),
            symbol_unchecked(norm2, tan2, place),
            symbol_unchecked(tan2, tan2, place),
        ];
        let cert = ExclusionCert { prime: p, symbols };
        if !cert.product().is_plus() {
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

/// Evaluates the three-symbol product at every relevant odd prime without
/// checking that `norm2` is a sum of three squares or that `tan2` lies in
/// the three-dimensional angle set.
pub fn hilbert_criterion_holds(norm2: u64, tan2: &Rational) -> Result<bool> {
    if norm2 == 0 {
        return Err(Error::ZeroInput);
    }
    let n = Rational::from_integer(BigInt::from(norm2));
    Ok(first_failure(&n, tan2)?.is_none())
}

/// Decides whether a 3-vector of squared norm `norm2` meets some integer
/// vector at the oblique angle with squared tangent `tan2`.
pub fn hilbert_criterion(norm2: u64, tan2: &Rational) -> Result<Verdict> {
    if norm2 == 0 {
        return Err(Error::ZeroInput);
    }
    if !is_three_square(norm2) {
        return Err(Error::NotThreeSquare(norm2.to_string()));
    }
    if !is_rational_three_square(tan2)? {
        return Err(Error::OutsideTheta { dim: 3 });
    }
    let n = Rational::from_integer(BigInt::from(norm2));
    Ok(match first_failure(&n, tan2)? {
        None => Verdict {
            member: true,
            method: Method::HilbertCriterion,
            certificate: None,
        },
        Some(cert) => Verdict {
            member: false,
            method: Method::HilbertCriterion,
            certificate: Some(Certificate::Exclusion(cert)),
        },
    })
}

fn norm2_u64(a: &IntVec) -> Result<u64> {
    to_u64(&a.norm2(), "squared norm")
}

/// Whether `angle` occurs between `a` and some integer vector, using the
/// default search budget for the attached witness.
pub fn theta_n_of_a_contains(a: &IntVec, angle: &AngleClass) -> Result<Verdict> {
    theta_n_of_a_contains_with(a, angle, SearchBudget::default_for_dim(a.dim()))
}

pub fn theta_n_of_a_contains_with(
    a: &IntVec,
    angle: &AngleClass,
    budget: SearchBudget,
) -> Result<Verdict> {
    a.require_nonzero()?;
    let constructed = |vector: IntVec| Verdict {
        member: true,
        method: Method::Construction,
        certificate: Some(Certificate::Witness { vector }),
    };
    let tan2 = match angle {
        AngleClass::Zero => return Ok(constructed(a.primitive())),
        AngleClass::Straight => return Ok(constructed(-a.primitive())),
        AngleClass::Right => return Ok(constructed(perpendicular(a)?)),
        AngleClass::Oblique { tan2, .. } => tan2,
    };
    if a.dim() < 2 {
        // a line meets only itself and its negative
        return Ok(Verdict {
            member: false,
            method: Method::ClosedForm,
            certificate: None,
        });
    }
    if !theta_n_contains(a.dim(), angle)? {
        return Ok(Verdict {
            member: false,
            method: Method::ClosedForm,
            certificate: None,
        });
    }
    if a.dim() != 3 {
        let witness = witness_for_angle(a, angle, budget)?;
        return Ok(Verdict {
            member: true,
            method: Method::Construction,
            certificate: witness.map(|vector| Certificate::Witness { vector }),
        });
    }
    let mut verdict = hilbert_criterion(norm2_u64(a)?, tan2)?;
    if verdict.member {
        if let Some(vector) = witness_for_angle(a, angle, budget)? {
            verdict.certificate = Some(Certificate::Witness { vector });
        }
    }
    Ok(verdict)
}

/// Which of the four arguments produced an excluded angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExclusionCase {
    /// `|a|^2` is a perfect square.
    A,
    /// A prime `3 mod 4` divides the square-free part of `|a|^2`.
    B,
    /// A prime `1 mod 4` divides the square-free part of `|a|^2`.
    C,
    /// The square-free part of `|a|^2` is `2`.
    D,
}

impl fmt::Display for ExclusionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ExclusionCase::A => "a",
            ExclusionCase::B => "b",
            ExclusionCase::C => "c",
            ExclusionCase::D => "d",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExcludedAngle {
    pub angle: AngleClass,
    pub case: ExclusionCase,
}

fn is_prime_small(n: u64) -> bool {
    crate::exactnum::is_prime(n)
}

/// An oblique angle in the three-dimensional angle set that no integer
/// vector makes with `a`. Cases are tried in the order a, b, c, d.
pub fn excluded_angle(a: &IntVec) -> Result<ExcludedAngle> {
    if a.dim() != 3 {
        return Err(Error::BadDimension {
            got: a.dim(),
            expected: "3",
        });
    }
    a.require_nonzero()?;
    let norm2 = norm2_u64(a)?;
    let sf = squarefree_primes(&Rational::from_integer(BigInt::from(norm2)))?;
    let int_angle = |t: u64| AngleClass::acute(Rational::from_integer(BigInt::from(t)));

    if sf.is_empty() {
        return Ok(ExcludedAngle {
            angle: int_angle(3)?,
            case: ExclusionCase::A,
        });
    }
    if sf.iter().any(|&p| p % 4 == 3) {
        return Ok(ExcludedAngle {
            angle: int_angle(1)?,
            case: ExclusionCase::B,
        });
    }
    if let Some(&p) = sf.iter().find(|&&p| p % 4 == 1) {
        let c = (1..p)
            .find(|&c| legendre_u64(c, p) == -1 && is_three_square(c))
            .expect("c or p - c is a non-residue outside 4^k(8m+7)");
        return Ok(ExcludedAngle {
            angle: int_angle(c)?,
            case: ExclusionCase::C,
        });
    }
    debug_assert_eq!(sf, [2]);
    let ell = (5u64..)
        .step_by(8)
        .find(|&l| is_prime_small(l) && norm2 % l != 0)
        .expect("infinitely many primes 5 mod 8");
    Ok(ExcludedAngle {
        angle: int_angle(ell)?,
        case: ExclusionCase::D,
    })
}

/// The 3-vector `(r, s, t)` from the canonical three-square decomposition.
pub fn vector_with_norm(norm2: u64) -> Result<IntVec> {
    match three_square_decomp(norm2) {
        Some((r, s, t)) if norm2 > 0 => Ok(IntVec::new(vec![
            BigInt::from(r),
            BigInt::from(s),
            BigInt::from(t),
        ])),
        Some(_) => Err(Error::ZeroInput),
        None => Err(Error::NotThreeSquare(norm2.to_string())),
    }
}

/// A 3-vector `a` that meets no integer vector at `angle`: the one built from
/// the least squared norm failing the criterion.
pub fn excluded_vector(angle: &AngleClass) -> Result<IntVec> {
    let (tan2, _) = angle.require_oblique()?;
    if !is_rational_three_square(tan2)? {
        return Err(Error::OutsideTheta { dim: 3 });
    }
    for n in 1..=EXCLUDED_VECTOR_CAP {
        if is_three_square(n) && !hilbert_criterion(n, tan2)?.member {
            return vector_with_norm(n);
        }
    }
    Err(Error::SearchCap {
        cap: EXCLUDED_VECTOR_CAP,
    })
}

/// Whether `norm2` is the squared norm of some 3-vector meeting an integer
/// vector at `angle`.
pub fn s_theta_contains(norm2: u64, angle: &AngleClass) -> Result<bool> {
    if norm2 == 0 {
        return Err(Error::ZeroInput);
    }
    if !is_three_square(norm2) {
        return Ok(false);
    }
    match angle {
        AngleClass::Oblique { tan2, .. } => {
            if !is_rational_three_square(tan2)? {
                return Ok(false);
            }
            Ok(hilbert_criterion(norm2, tan2)?.member)
        }
        _ => Ok(true),
    }
}

/// Square-free part of a positive integer split into its parts:
/// whether 2 divides it and its sorted odd primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct SquarefreeShape {
    pub has_two: bool,
    pub odd: Vec<u64>,
}

impl SquarefreeShape {
    pub fn of(x: &Rational) -> Result<Self> {
        let primes = squarefree_primes(x)?;
        Ok(SquarefreeShape {
            has_two: primes.first() == Some(&2),
            odd: primes.into_iter().filter(|&p| p != 2).collect(),
        })
    }

    pub fn value(&self) -> BigUint {
        let base = if self.has_two {
            BigUint::from(2u32)
        } else {
            BigUint::one()
        };
        self.odd.iter().fold(base, |acc, &p| acc * p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::angle_between;
    use crate::exactnum::{rat_int, rational};
    use num_traits::ToPrimitive;
    use proptest::prelude::*;

    fn v(c: &[i64]) -> IntVec {
        IntVec::from_i64s(c)
    }

    fn acute(t: i64) -> AngleClass {
        AngleClass::acute(rat_int(t)).unwrap()
    }

    #[test]
    fn theta_n_examples() {
        assert!(theta_n_contains(3, &acute(3)).unwrap());
        assert!(!theta_n_contains(3, &acute(7)).unwrap());
        assert!(!theta_n_contains(2, &acute(2)).unwrap());
        assert!(theta_n_contains(5, &acute(2)).unwrap());
        assert!(theta_n_contains(2, &AngleClass::Right).unwrap());
        assert!(theta_n_contains(1, &acute(1)).is_err());
        assert!(theta_n_contains(2, &AngleClass::acute(rational(9, 4)).unwrap()).unwrap());
    }

    #[test]
    fn criterion_examples() {
        let v1 = hilbert_criterion(1, &rat_int(3)).unwrap();
        assert!(!v1.member);
        let cert = v1.exclusion().unwrap();
        assert_eq!(cert.prime, 3);
        assert_eq!(
            cert.symbols,
            [SymbolValue::Plus, SymbolValue::Plus, SymbolValue::Minus]
        );
        assert!(hilbert_criterion(2, &rat_int(3)).unwrap().member);
        let v3 = hilbert_criterion(3, &rat_int(1)).unwrap();
        assert!(!v3.member);
        assert_eq!(v3.exclusion().unwrap().prime, 3);
        assert!(matches!(
            hilbert_criterion(7, &rat_int(1)),
            Err(Error::NotThreeSquare(_))
        ));
        assert_eq!(
            hilbert_criterion(2, &rat_int(7)),
            Err(Error::OutsideTheta { dim: 3 })
        );
    }

    #[test]
    fn membership_examples() {
        let verdict = theta_n_of_a_contains(&v(&[1, 0, 0]), &acute(3)).unwrap();
        assert!(!verdict.member);
        let verdict = theta_n_of_a_contains(&v(&[1, 1, 0]), &acute(3)).unwrap();
        assert!(verdict.member);
        assert_eq!(verdict.witness(), Some(&v(&[0, 1, 1])));

        let a = v(&[1, 1, 1, 1]);
        let verdict = theta_n_of_a_contains(&a, &acute(6)).unwrap();
        assert!(verdict.member);
        assert_eq!(verdict.method, Method::Construction);
        let w = verdict.witness().unwrap();
        assert_eq!(angle_between(&a, w).unwrap(), acute(6));
        assert!(!theta_n_of_a_contains(&a, &acute(7)).unwrap().member);

        let a = v(&[2, 0, 0, 0, 1]);
        let verdict = theta_n_of_a_contains(&a, &acute(7)).unwrap();
        assert!(verdict.member);
        assert_eq!(
            angle_between(&a, verdict.witness().unwrap()).unwrap(),
            acute(7)
        );

        // outside the set for the dimension
        let verdict = theta_n_of_a_contains(&v(&[1, 2]), &acute(2)).unwrap();
        assert!(!verdict.member);
        assert_eq!(verdict.method, Method::ClosedForm);
        assert!(theta_n_of_a_contains(&v(&[0, 0, 0]), &acute(2)).is_err());
    }

    #[test]
    fn degenerate_membership() {
        let a = v(&[2, 4, 0]);
        for (angle, expected) in [
            (AngleClass::Zero, v(&[1, 2, 0])),
            (AngleClass::Straight, v(&[-1, -2, 0])),
            (AngleClass::Right, v(&[-2, 1, 0])),
        ] {
            let verdict = theta_n_of_a_contains(&a, &angle).unwrap();
            assert!(verdict.member);
            let w = verdict.witness().unwrap();
            assert_eq!(w, &expected);
            assert_eq!(angle_between(&a, w).unwrap(), angle);
        }
    }

    #[test]
    fn excluded_angle_examples() {
        let e = excluded_angle(&v(&[1, 0, 0])).unwrap();
        assert_eq!((e.angle, e.case), (acute(3), ExclusionCase::A));
        let e = excluded_angle(&v(&[1, 1, 1])).unwrap();
        assert_eq!((e.angle, e.case), (acute(1), ExclusionCase::B));
        let e = excluded_angle(&v(&[1, 1, 0])).unwrap();
        assert_eq!((e.angle, e.case), (acute(5), ExclusionCase::D));
        // |a|^2 = 5: smallest non-residue mod 5 outside 4^k(8m+7) is 2
        let e = excluded_angle(&v(&[2, 1, 0])).unwrap();
        assert_eq!((e.angle, e.case), (acute(2), ExclusionCase::C));
        // |a|^2 = 10 = 2 * 5 takes case c before d
        let e = excluded_angle(&v(&[3, 1, 0])).unwrap();
        assert_eq!(e.case, ExclusionCase::C);
        // |a|^2 = 18 = 2 * 9: ell = 5
        let e = excluded_angle(&v(&[3, 3, 0])).unwrap();
        assert_eq!((e.angle, e.case), (acute(5), ExclusionCase::D));
        // |a|^2 = 50 = 2 * 25: 5 divides the norm, so ell = 13
        let e = excluded_angle(&v(&[5, 5, 0])).unwrap();
        assert_eq!((e.angle, e.case), (acute(13), ExclusionCase::D));
        assert!(excluded_angle(&v(&[1, 1])).is_err());
    }

    #[test]
    fn excluded_angle_always_excluded() {
        for x in -4i64..=4 {
            for y in -4i64..=4 {
                for z in -4i64..=4 {
                    let a = v(&[x, y, z]);
                    if a.is_zero() {
                        continue;
                    }
                    let e = excluded_angle(&a).unwrap();
                    let t = e.angle.tan2().unwrap();
                    assert!(theta_n_contains(3, &e.angle).unwrap());
                    let n = (x * x + y * y + z * z) as u64;
                    assert!(!hilbert_criterion(n, t).unwrap().member, "a = {a}");
                }
            }
        }
    }

    #[test]
    fn excluded_vector_examples() {
        assert_eq!(excluded_vector(&acute(3)).unwrap(), v(&[1, 0, 0]));
        assert_eq!(excluded_vector(&acute(1)).unwrap(), v(&[1, 1, 1]));
        assert_eq!(excluded_vector(&acute(2)).unwrap(), v(&[2, 1, 0]));
        // scan oracle: 1, 2 pass and 3 fails for tan^2 = 1
        assert!(hilbert_criterion(1, &rat_int(1)).unwrap().member);
        assert!(hilbert_criterion(2, &rat_int(1)).unwrap().member);
        assert!(!hilbert_criterion(3, &rat_int(1)).unwrap().member);
        assert_eq!(
            excluded_vector(&AngleClass::Right),
            Err(Error::DegenerateAngle)
        );
        assert_eq!(
            excluded_vector(&acute(7)),
            Err(Error::OutsideTheta { dim: 3 })
        );
    }

    #[test]
    fn vector_with_norm_examples() {
        assert_eq!(vector_with_norm(1).unwrap(), v(&[1, 0, 0]));
        assert_eq!(vector_with_norm(3).unwrap(), v(&[1, 1, 1]));
        assert_eq!(vector_with_norm(5).unwrap(), v(&[2, 1, 0]));
        assert!(vector_with_norm(7).is_err());
        assert!(vector_with_norm(0).is_err());
    }

    #[test]
    fn s_theta_examples() {
        assert!(!s_theta_contains(7, &acute(3)).unwrap());
        assert!(!s_theta_contains(7, &AngleClass::Zero).unwrap());
        assert!(s_theta_contains(2, &acute(3)).unwrap());
        assert!(!s_theta_contains(1, &acute(3)).unwrap());
        assert!(s_theta_contains(1, &AngleClass::Right).unwrap());
    }

    #[test]
    fn norm_only_dependence() {
        // all 3-vectors with |a|^2 = 9, 14 and 26
        for target in [9i64, 14, 26] {
            let mut vecs = vec![];
            for x in -5i64..=5 {
                for y in -5i64..=5 {
                    for z in -5i64..=5 {
                        if x * x + y * y + z * z == target {
                            vecs.push(v(&[x, y, z]));
                        }
                    }
                }
            }
            assert!(vecs.len() > 1);
            for t in [1i64, 2, 3, 5, 6, 10, 11, 13] {
                let members: Vec<bool> = vecs
                    .iter()
                    .map(|a| {
                        theta_n_of_a_contains_with(a, &acute(t), SearchBudget::new(1).unwrap())
                            .unwrap()
                            .member
                    })
                    .collect();
                assert!(members.iter().all(|&m| m == members[0]));
            }
        }
    }

    #[test]
    fn monotone_chain() {
        for n in 1..=40i64 {
            for d in 1..=12i64 {
                let angle = AngleClass::acute(rational(n, d)).unwrap();
                let in2 = theta_n_contains(2, &angle).unwrap();
                let in3 = theta_n_contains(3, &angle).unwrap();
                let in4 = theta_n_contains(4, &angle).unwrap();
                let in5 = theta_n_contains(5, &angle).unwrap();
                assert!(!in2 || in3);
                assert_eq!(in3, in4);
                assert!(!in3 || in5);
            }
        }
    }

    #[test]
    fn both_sides_infinite_at_desk_scale() {
        for a in [
            v(&[1, 0, 0]),
            v(&[1, 1, 0]),
            v(&[1, 1, 1]),
            v(&[2, 1, 0]),
            v(&[3, 2, 1]),
        ] {
            let n = a.norm2().to_u64().unwrap();
            let (mut yes, mut no) = (0, 0);
            for t in 1u64..200 {
                let tan2 = rat_int(t as i64);
                if t != crate::exactnum::squarefree_part_int(t).unwrap()
                    || !is_rational_three_square(&tan2).unwrap()
                {
                    continue;
                }
                if hilbert_criterion(n, &tan2).unwrap().member {
                    yes += 1;
                } else {
                    no += 1;
                }
            }
            assert!(
                yes >= 10 && no >= 10,
                "a = {a}: {yes} members, {no} non-members"
            );
        }
    }

    fn three_square_norm() -> impl Strategy<Value = u64> {
        (1u64..400).prop_filter("sum of three squares", |&n| is_three_square(n))
    }

    fn theta3_tangent() -> impl Strategy<Value = Rational> {
        (1i64..200, 1i64..50)
            .prop_map(|(n, d)| rational(n, d))
            .prop_filter("in the 3-d angle set", |t| {
                is_rational_three_square(t).unwrap()
            })
    }

    proptest! {
        #[test]
        fn scaling_invariance(n in three_square_norm(), t in theta3_tangent(), k in 1i64..=10) {
            let scaled = &t * rat_int(k * k);
            prop_assert_eq!(
                hilbert_criterion(n, &t).unwrap().member,
                hilbert_criterion(n, &scaled).unwrap().member
            );
        }

        #[test]
        fn criterion_symmetric_in_norm_and_tangent(n in three_square_norm(), m in three_square_norm()) {
            let lhs = hilbert_criterion(n, &rat_int(m as i64)).unwrap().member;
            let rhs = hilbert_criterion(m, &rat_int(n as i64)).unwrap().member;
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn exclusion_certificate_multiplies_to_minus_one(n in three_square_norm(), t in theta3_tangent()) {
            let verdict = hilbert_criterion(n, &t).unwrap();
            match verdict.exclusion() {
                Some(cert) => {
                    prop_assert!(!verdict.member);
                    prop_assert_eq!(cert.product(), SymbolValue::Minus);
                    prop_assert!(cert.prime % 2 == 1);
                }
                None => prop_assert!(verdict.member),
            }
        }

        #[test]
        fn product_of_norms(
            n1 in three_square_norm(), n2 in three_square_norm(), n3 in three_square_norm(),
            t in theta3_tangent(),
        ) {
            let all = [n1, n2, n3].iter().all(|&n| hilbert_criterion(n, &t).unwrap().member);
            if all {
                prop_assert!(hilbert_criterion_holds(n1 * n2 * n3, &t).unwrap());
            }
        }

        #[test]
        fn excluded_vector_is_excluded(t in theta3_tangent()) {
            let a = excluded_vector(&AngleClass::acute(t.clone()).unwrap()).unwrap();
            let n = a.norm2().to_u64().unwrap();
            prop_assert!(!hilbert_criterion(n, &t).unwrap().member);
        }
    }
}
