//! Exact representation of angles in `[0, pi]` between integer vectors.
//!
//! An angle is never stored as a float. The three degenerate angles get their
//! own variants; every other angle is its squared tangent (a positive
//! rational) plus a flag selecting the obtuse branch `pi - arctan(sqrt t)`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::vector::IntVec;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AngleClass {
    Zero,
    Right,
    Straight,
    Oblique { tan2: Rational, obtuse: bool },
}

impl AngleClass {
    pub fn oblique(tan2: Rational, obtuse: bool) -> Result<Self> {
        if !tan2.is_positive() {
            return Err(Error::NonPositive(tan2.to_string()));
        }
        Ok(AngleClass::Oblique { tan2, obtuse })
    }

    pub fn acute(tan2: Rational) -> Result<Self> {
        Self::oblique(tan2, false)
    }

    pub fn is_degenerate(&self) -> bool {
        !matches!(self, AngleClass::Oblique { .. })
    }

    pub fn tan2(&self) -> Option<&Rational> {
        match self {
            AngleClass::Oblique { tan2, .. } => Some(tan2),
            _ => None,
        }
    }

    pub fn is_obtuse(&self) -> bool {
        matches!(
            self,
            AngleClass::Oblique { obtuse: true, .. } | AngleClass::Straight
        )
    }

    /// `pi - theta`.
    pub fn supplement(&self) -> AngleClass {
        match self {
            AngleClass::Zero => AngleClass::Straight,
            AngleClass::Straight => AngleClass::Zero,
            AngleClass::Right => AngleClass::Right,
            AngleClass::Oblique { tan2, obtuse } => AngleClass::Oblique {
                tan2: tan2.clone(),
                obtuse: !obtuse,
            },
        }
    }

    /// Squared tangent and obtuse flag of an oblique angle, or an error for
    /// the degenerate ones.
    pub fn require_oblique(&self) -> Result<(&Rational, bool)> {
        match self {
            AngleClass::Oblique { tan2, obtuse } => Ok((tan2, *obtuse)),
            _ => Err(Error::DegenerateAngle),
        }
    }

    fn rank(&self) -> u8 {
        match self {
            AngleClass::Zero => 0,
            AngleClass::Oblique { obtuse: false, .. } => 1,
            AngleClass::Right => 2,
            AngleClass::Oblique { obtuse: true, .. } => 3,
            AngleClass::Straight => 4,
        }
    }
}

/// Orders angles by their size in `[0, pi]`.
impl Ord for AngleClass {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (
                AngleClass::Oblique {
                    tan2: t1,
                    obtuse: o1,
                },
                AngleClass::Oblique {
                    tan2: t2,
                    obtuse: o2,
                },
            ) if o1 == o2 => {
                if *o1 {
                    t2.cmp(t1)
                } else {
                    t1.cmp(t2)
                }
            }
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for AngleClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AngleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AngleClass::Zero => f.write_str("0"),
            AngleClass::Right => f.write_str("pi/2"),
            AngleClass::Straight => f.write_str("pi"),
            AngleClass::Oblique {
                tan2,
                obtuse: false,
            } => write!(f, "arctan(sqrt({tan2}))"),
            AngleClass::Oblique { tan2, obtuse: true } => write!(f, "pi - arctan(sqrt({tan2}))"),
        }
    }
}

impl Serialize for AngleClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        match self {
            AngleClass::Zero => map.serialize_entry("kind", "zero")?,
            AngleClass::Right => map.serialize_entry("kind", "right")?,
            AngleClass::Straight => map.serialize_entry("kind", "straight")?,
            AngleClass::Oblique { tan2, obtuse } => {
                map.serialize_entry("kind", "oblique")?;
                map.serialize_entry("tan2", &tan2.to_string())?;
                map.serialize_entry("obtuse", obtuse)?;
            }
        }
        map.end()
    }
}

/// Exact angle between two nonzero integer vectors of equal dimension.
///
/// With `d = a.b`, `tan^2 = (|a|^2 |b|^2 - d^2) / d^2` and the angle is
/// obtuse iff `d < 0`.
pub fn angle_between(a: &IntVec, b: &IntVec) -> Result<AngleClass> {
    a.require_dim(b)?;
    a.require_nonzero()?;
    b.require_nonzero()?;
    let d = a.dot(b);
    if d.is_zero() {
        return Ok(AngleClass::Right);
    }
    let d2 = &d * &d;
    let numer: BigInt = a.norm2() * b.norm2() - &d2;
    if numer.is_zero() {
        // Cauchy-Schwarz equality: parallel
        return Ok(if d.is_positive() {
            AngleClass::Zero
        } else {
            AngleClass::Straight
        });
    }
    Ok(AngleClass::Oblique {
        tan2: Rational::new(numer, d2),
        obtuse: d.is_negative(),
    })
}
