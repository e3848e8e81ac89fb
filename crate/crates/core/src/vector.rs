use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Integer vector of fixed dimension with arbitrary-precision components.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVec(Vec<BigInt>);

impl IntVec {
    pub fn new(components: Vec<BigInt>) -> Self {
        IntVec(components)
    }

    pub fn from_i64s(components: &[i64]) -> Self {
        IntVec(components.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        IntVec(vec![BigInt::zero(); dim])
    }

    /// The `i`-th coordinate unit vector.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = BigInt::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn require_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroVector)
        } else {
            Ok(())
        }
    }

    pub fn require_dim(&self, other: &IntVec) -> Result<()> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            })
        }
    }

    /// Scalar product; dimensions must agree.
    pub fn dot(&self, other: &IntVec) -> BigInt {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm2(&self) -> BigInt {
        self.0.iter().map(|a| a * a).sum()
    }

    /// gcd of the components (0 for the zero vector).
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Divides out the content, keeping the direction.
    pub fn primitive(&self) -> IntVec {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntVec(self.0.iter().map(|c| c / &g).collect())
    }

    pub fn scale(&self, k: &BigInt) -> IntVec {
        IntVec(self.0.iter().map(|c| c * k).collect())
    }

    /// Cross product of two 3-vectors.
    pub fn cross(&self, other: &IntVec) -> Result<IntVec> {
        if self.dim() != 3 || other.dim() != 3 {
            return Err(Error::BadDimension {
                got: self.dim(),
                expected: "3",
            });
        }
        let (a, b) = (&self.0, &other.0);
        Ok(IntVec(vec![
            &a[1] * &b[2] - &a[2] * &b[1],
            &a[2] * &b[0] - &a[0] * &b[2],
            &a[0] * &b[1] - &a[1] * &b[0],
        ]))
    }

    /// True iff one vector is a rational multiple of the other.
    pub fn is_parallel(&self, other: &IntVec) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                if &self.0[i] * &other.0[j] != &self.0[j] * &other.0[i] {
                    return false;
                }
            }
        }
        true
    }

    /// Components as `i64`, or `None` if any overflows.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }

    /// Largest absolute component.
    pub fn max_abs(&self) -> BigInt {
        self.0.iter().map(Signed::abs).max().unwrap_or_default()
    }
}

impl Neg for &IntVec {
    type Output = IntVec;

    fn neg(self) -> IntVec {
        IntVec(self.0.iter().map(|c| -c).collect())
    }
}

impl Neg for IntVec {
    type Output = IntVec;

    fn neg(self) -> IntVec {
        -&self
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Serialized as a JSON array of integers; components beyond `i64` are
/// written as decimal strings.
impl Serialize for IntVec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.dim()))?;
        for c in &self.0 {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = IntVec::from_i64s(&[4, 2]);
        let b = IntVec::from_i64s(&[-1, -3]);
        assert_eq!(a.dot(&b), BigInt::from(-10));
        assert_eq!(a.norm2(), BigInt::from(20));
        assert_eq!(a.primitive(), IntVec::from_i64s(&[2, 1]));
        assert!(!a.is_primitive());
        assert!(a.is_parallel(&IntVec::from_i64s(&[-6, -3])));
        assert!(!a.is_parallel(&b));
        assert_eq!(
            IntVec::from_i64s(&[1, 1, 0])
                .cross(&IntVec::from_i64s(&[0, 1, 1]))
                .unwrap(),
            IntVec::from_i64s(&[1, -1, 1])
        );
        assert!(IntVec::zeros(3).require_nonzero().is_err());
    }
}
