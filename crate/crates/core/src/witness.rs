//! Constructing integer vectors that meet a given vector at a given angle.
//!
//! Dimensions 2 and 4 have closed forms (a rotation and a quaternion-style
//! combination of four mutually orthogonal vectors of equal length). In
//! dimension 3 there is no such formula and the search walks max-norm shells.
//! From dimension 5 on every tangent occurs; the witness is built over an
//! orthogonal basis containing `a` by representing the required length with
//! a weighted sum of squares.

use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::angle::AngleClass;
use crate::angleset::{hilbert_criterion, theta_n_contains};
use crate::error::{Error, Result};
use crate::exactnum::{rational_sqrt, squarefree_part, three_square_decomp, to_u64, Rational};
use crate::shell::for_each_in_box;
use crate::vector::IntVec;

/// Environment variable overriding the default search box for every
/// dimension that needs a search.
pub const BUDGET_ENV: &str = "LATTICE_ANGLES_BOX";

pub const DEFAULT_BOX_DIM3: u64 = 100;
pub const DEFAULT_BOX_HIGH: u64 = 20;

/// Coordinate bound for witness searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    bound: u64,
}

impl SearchBudget {
    pub fn new(bound: u64) -> Result<Self> {
        if bound == 0 {
            return Err(Error::InvalidParameter(
                "search box must be at least 1".into(),
            ));
        }
        Ok(SearchBudget { bound })
    }

    pub fn bound(self) -> u64 {
        self.bound
    }

    /// The built-in box for `dim`, unless the environment overrides it.
    pub fn default_for_dim(dim: usize) -> Self {
        let from_env = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<u64>().ok())
            .filter(|&b| b > 0);
        let bound = from_env.unwrap_or(if dim <= 4 {
            DEFAULT_BOX_DIM3
        } else {
            DEFAULT_BOX_HIGH
        });
        SearchBudget { bound }
    }
}

/// A nonzero primitive integer vector orthogonal to `a`, built from the
/// first pair of coordinates that are not both zero.
pub fn perpendicular(a: &IntVec) -> Result<IntVec> {
    a.require_nonzero()?;
    let n = a.dim();
    if n < 2 {
        return Err(Error::BadDimension {
            got: n,
            expected: ">= 2",
        });
    }
    let c = a.components();
    let (i, j) = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .find(|&(i, j)| !(c[i].is_zero() && c[j].is_zero()))
        .expect("a nonzero vector has a nonzero coordinate");
    let mut out = vec![BigInt::zero(); n];
    out[i] = -&c[j];
    out[j] = c[i].clone();
    Ok(IntVec::new(out).primitive())
}

fn require_dim(a: &IntVec, dim: usize) -> Result<()> {
    if a.dim() == dim {
        Ok(())
    } else {
        Err(Error::BadDimension {
            got: a.dim(),
            expected: match dim {
                2 => "2",
                3 => "3",
                _ => "4",
            },
        })
    }
}

/// Rotation of `a` by the angle: with `tan = u / v` in lowest terms,
/// `b = (a1 v - a2 u, a2 v + a1 u)`, and `v` negated for the obtuse branch.
pub fn witness_dim2(a: &IntVec, tan2: &Rational, obtuse: bool) -> Result<IntVec> {
    require_dim(a, 2)?;
    a.require_nonzero()?;
    let tan = rational_sqrt(tan2)
        .filter(|t| t.is_positive())
        .ok_or(Error::OutsideTheta { dim: 2 })?;
    let u = tan.numer().clone();
    let v = if obtuse {
        -tan.denom().clone()
    } else {
        tan.denom().clone()
    };
    let c = a.components();
    Ok(IntVec::new(vec![&c[0] * &v - &c[1] * &u, &c[1] * &v + &c[0] * &u]).primitive())
}

/// `b = u a + r J1 a + s J2 a + t J3 a` where the `Ji a` are orthogonal to
/// `a` and to each other, all of length `|a|`. With `tan^2 = Tn / Td`,
/// `u = Td` and `r^2 + s^2 + t^2 = Tn Td`.
pub fn witness_dim4(a: &IntVec, tan2: &Rational, obtuse: bool) -> Result<IntVec> {
    require_dim(a, 4)?;
    a.require_nonzero()?;
    if !theta_n_contains(4, &AngleClass::oblique(tan2.clone(), obtuse)?)? {
        return Err(Error::OutsideTheta { dim: 4 });
    }
    let (tn, td) = (tan2.numer(), tan2.denom());
    let n = BigInt::from(squarefree_part(tan2)?);
    let c = (tn * td / &n).sqrt();
    let (r, s, t) = three_square_decomp(to_u64(&n, "square-free part of tan^2")?)
        .expect("square-free part checked above");
    let (r, s, t) = (&c * r, &c * s, &c * t);
    let u = if obtuse { -td.clone() } else { td.clone() };
    let x = a.components();
    let j1 = [&x[1], &-&x[0], &x[3], &-&x[2]];
    let j2 = [&x[2], &-&x[3], &-&x[0], &x[1]];
    let j3 = [&x[3], &x[2], &-&x[1], &-&x[0]];
    let b = (0..4)
        .map(|i| &u * &x[i] + &r * j1[i] + &s * j2[i] + &t * j3[i])
        .collect();
    Ok(IntVec::new(b).primitive())
}

/// Exact test `angle(a, v) = target`, in machine integers when they
/// suffice.
struct AnglePredicate {
    a: Vec<i64>,
    a_norm2: i128,
    tn: BigInt,
    td: BigInt,
    small: Option<(i128, i128)>,
    obtuse: bool,
}

impl AnglePredicate {
    fn new(a: &IntVec, tan2: &Rational, obtuse: bool) -> Result<Self> {
        let comps = a.to_i64s().ok_or_else(|| Error::TooLarge {
            what: "vector component",
            value: a.max_abs().to_string(),
            bound: i64::MAX.to_string(),
        })?;
        let a_norm2 = comps.iter().map(|&x| x as i128 * x as i128).sum();
        let small = tan2.numer().to_i128().zip(tan2.denom().to_i128());
        Ok(AnglePredicate {
            a: comps,
            a_norm2,
            tn: tan2.numer().clone(),
            td: tan2.denom().clone(),
            small,
            obtuse,
        })
    }

    fn matches(&self, v: &[i64]) -> bool {
        let d: i128 = self
            .a
            .iter()
            .zip(v)
            .map(|(&x, &y)| x as i128 * y as i128)
            .sum();
        if d == 0 || (d < 0) != self.obtuse {
            return false;
        }
        let n: i128 = v.iter().map(|&y| y as i128 * y as i128).sum();
        if let Some((tn, td)) = self.small {
            let fast = (|| {
                let d2 = d.checked_mul(d)?;
                let lhs = td.checked_mul(self.a_norm2.checked_mul(n)?.checked_sub(d2)?)?;
                Some(lhs == tn.checked_mul(d2)?)
            })();
            if let Some(hit) = fast {
                return hit;
            }
        }
        let (d, n, an) = (BigInt::from(d), BigInt::from(n), BigInt::from(self.a_norm2));
        &self.td * (an * n - &d * &d) == &self.tn * &d * &d
    }
}

/// First vector in max-norm shell order with the requested angle to the
/// 3-vector `a`. Callers check membership first; this only searches.
fn search_dim3(
    a: &IntVec,
    tan2: &Rational,
    obtuse: bool,
    budget: SearchBudget,
) -> Result<Option<IntVec>> {
    let pred = AnglePredicate::new(a, tan2, obtuse)?;
    Ok(for_each_in_box(3, budget.bound(), |v| {
        if pred.matches(v) {
            ControlFlow::Break(IntVec::from_i64s(v))
        } else {
            ControlFlow::Continue(())
        }
    }))
}

/// Orthogonal basis `a, c_2, ..., c_n` of `Q^n` with each `c_i` scaled to a
/// primitive integer vector.
pub fn orthogonal_basis(a: &IntVec) -> Result<Vec<IntVec>> {
    a.require_nonzero()?;
    let n = a.dim();
    let to_rat = |v: &IntVec| -> Vec<Rational> {
        v.components()
            .iter()
            .cloned()
            .map(Rational::from_integer)
            .collect()
    };
    let dot =
        |x: &[Rational], y: &[Rational]| -> Rational { x.iter().zip(y).map(|(p, q)| p * q).sum() };
    let mut rat_basis = vec![to_rat(a)];
    let mut out = vec![a.clone()];
    for i in 0..n {
        if rat_basis.len() == n {
            break;
        }
        let mut w = to_rat(&IntVec::unit(n, i));
        for b in &rat_basis {
            let coeff = dot(&w, b) / dot(b, b);
            for (wk, bk) in w.iter_mut().zip(b) {
                *wk -= &coeff * bk;
            }
        }
        if w.iter().all(Zero::is_zero) {
            continue;
        }
        let lcm = w.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let int = IntVec::new(w.iter().map(|x| (x * &lcm).to_integer()).collect()).primitive();
        out.push(int);
        rat_basis.push(w);
    }
    Ok(out)
}

/// Nonnegative `x` with `sum w_i x_i^2 = rem` and every `x_i <= bound`,
/// trying larger values first.
fn represent(weights: &[u128], rem: u128, bound: u128, xs: &mut Vec<u128>) -> bool {
    let (&w, rest) = match weights.split_first() {
        Some(split) => split,
        None => return rem == 0,
    };
    if rest.is_empty() {
        if rem % w != 0 {
            return false;
        }
        let q = rem / w;
        let x = q.sqrt();
        if x * x == q && x <= bound {
            xs.push(x);
            return true;
        }
        return false;
    }
    let top = (rem / w).sqrt().min(bound);
    for x in (0..=top).rev() {
        xs.push(x);
        if represent(rest, rem - w * x * x, bound, xs) {
            return true;
        }
        xs.pop();
    }
    false
}

/// `v = x_1 a + sum x_i c_i` over an orthogonal basis; the angle condition
/// becomes `sum x_i^2 |c_i|^2 = tan^2 |a|^2 x_1^2`.
fn search_high(
    a: &IntVec,
    tan2: &Rational,
    obtuse: bool,
    budget: SearchBudget,
) -> Result<Option<IntVec>> {
    let basis = orthogonal_basis(a)?;
    let too_large = |what: &'static str, v: &BigInt| Error::TooLarge {
        what,
        value: v.to_string(),
        bound: u128::MAX.to_string(),
    };
    let weights: Vec<u128> = basis[1..]
        .iter()
        .map(|c| {
            let w = c.norm2();
            w.to_u128().ok_or_else(|| too_large("basis weight", &w))
        })
        .collect::<Result<_>>()?;
    let a_norm2 = a.norm2();
    let tn = tan2.numer() * &a_norm2;
    let td = tan2.denom();
    let bound = budget.bound() as u128;
    for x1 in 1..=budget.bound() {
        let target = &tn * BigInt::from(x1 * x1);
        if !target.is_multiple_of(td) {
            continue;
        }
        let target = target / td;
        let rem = target
            .to_u128()
            .ok_or_else(|| too_large("target length", &target))?;
        let mut xs = Vec::with_capacity(weights.len());
        if represent(&weights, rem, bound, &mut xs) {
            let mut v = a.scale(&BigInt::from(x1));
            for (c, x) in basis[1..].iter().zip(xs) {
                let term = c.scale(&BigInt::from(x));
                v = IntVec::new(
                    v.components()
                        .iter()
                        .zip(term.components())
                        .map(|(p, q)| p + q)
                        .collect(),
                );
            }
            let v = v.primitive();
            return Ok(Some(if obtuse { -v } else { v }));
        }
    }
    Ok(None)
}

/// An integer vector making `angle` with `a`, or `None` when the search for
/// dimension 3 or at least 5 runs out of budget.
///
/// Fails with [`Error::OutsideTheta`] when no integer vector of that
/// dimension makes the angle with anything, and with
/// [`Error::CriterionFails`] when the 3-dimensional criterion rules out this
/// particular `a`.
pub fn witness_for_angle(
    a: &IntVec,
    angle: &AngleClass,
    budget: SearchBudget,
) -> Result<Option<IntVec>> {
    a.require_nonzero()?;
    let (tan2, obtuse) = match angle {
        AngleClass::Zero => return Ok(Some(a.primitive())),
        AngleClass::Straight => return Ok(Some(-a.primitive())),
        AngleClass::Right => return perpendicular(a).map(Some),
        AngleClass::Oblique { tan2, obtuse } => (tan2, *obtuse),
    };
    let dim = a.dim();
    if dim < 2 {
        return Err(Error::BadDimension {
            got: dim,
            expected: ">= 2",
        });
    }
    if !theta_n_contains(dim, angle)? {
        return Err(Error::OutsideTheta { dim });
    }
    match dim {
        2 => witness_dim2(a, tan2, obtuse).map(Some),
        3 => {
            let norm2 = to_u64(&a.norm2(), "squared norm")?;
            if let Some(cert) = hilbert_criterion(norm2, tan2)?.exclusion() {
                return Err(Error::CriterionFails { prime: cert.prime });
            }
            search_dim3(a, tan2, obtuse, budget)
        }
        4 => witness_dim4(a, tan2, obtuse).map(Some),
        _ => search_high(a, tan2, obtuse, budget),
    }
}

/// All primitive vectors in the box `[-bound, bound]^n` making `angle` with
/// `a`, in shell order. No two are parallel.
pub fn enumerate_witness_directions(
    a: &IntVec,
    angle: &AngleClass,
    bound: u64,
) -> Result<Vec<IntVec>> {
    a.require_nonzero()?;
    let target = angle.clone();
    let mut out = vec![];
    let mut err = None;
    for_each_in_box::<()>(a.dim(), bound, |v| {
        let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
        if g != 1 {
            return ControlFlow::Continue(());
        }
        let v = IntVec::from_i64s(v);
        match crate::angle::angle_between(a, &v) {
            Ok(found) if found == target => out.push(v),
            Ok(_) => {}
            Err(e) => {
                err = Some(e);
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}
