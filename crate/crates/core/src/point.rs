//! Points of the unit cube and the `0 − 1` pattern notation.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A point of `[0,1]^(n+1)` with exact rational coordinates, `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::TooFewCoordinates { len: coords.len() });
        }
        if let Some((index, value)) = coords
            .iter()
            .enumerate()
            .find(|(_, c)| !rational::in_unit_interval(c))
        {
            return Err(Error::CoordinateOutOfRange {
                index,
                value: rational::format(value),
            });
        }
        Ok(Point { coords })
    }

    /// Builds a point from `(numerator, denominator)` pairs.
    pub fn from_ratios(ratios: &[(i64, i64)]) -> Result<Self> {
        Point::new(ratios.iter().map(|&(p, q)| rational::ratio(p, q)).collect())
    }

    /// The point `k / m` for a lattice point `k` at resolution `m`.
    pub fn from_lattice(numerators: &[u32], resolution: u32) -> Result<Self> {
        if resolution == 0 {
            return Err(Error::InvalidParameter {
                reason: "resolution must be positive".into(),
            });
        }
        Point::new(
            numerators
                .iter()
                .map(|&k| rational::ratio(i64::from(k), i64::from(resolution)))
                .collect(),
        )
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// Sphere dimension `n`; the point has `n + 1` coordinates.
    pub fn dimension(&self) -> usize {
        self.coords.len() - 1
    }

    /// Number of coordinates, `n + 1`.
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// True iff some coordinate equals 0 or 1 exactly.
    pub fn is_on_boundary(&self) -> bool {
        self.coords.iter().any(|c| c.is_zero() || c.is_one())
    }

    pub fn pattern(&self) -> CoordPattern {
        CoordPattern(self.coords.iter().map(CoordClass::of).collect())
    }

    pub fn class(&self, index: usize) -> CoordClass {
        CoordClass::of(&self.coords[index])
    }

    pub(crate) fn check_same_len(&self, other: &Point) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }

    /// `self_i <= other_i` for every coordinate.
    pub fn coordinatewise_leq(&self, other: &Point) -> Result<bool> {
        self.check_same_len(other)?;
        Ok(self.first_decrease(other).is_none())
    }

    /// First coordinate where `self` exceeds `other`, if any. Lengths must match.
    pub(crate) fn first_decrease(&self, other: &Point) -> Option<usize> {
        self.coords
            .iter()
            .zip(&other.coords)
            .position(|(a, b)| a > b)
    }

    /// Copy with coordinate `index` replaced. `value` must lie in `[0,1]`.
    pub(crate) fn with_coord(&self, index: usize, value: Rational) -> Point {
        debug_assert!(rational::in_unit_interval(&value));
        let mut coords = self.coords.clone();
        coords[index] = value;
        Point { coords }
    }

    /// `self + lambda * (other - self)` for `lambda` in `[0,1]`.
    pub(crate) fn lerp(&self, other: &Point, lambda: &Rational) -> Point {
        if lambda.is_zero() {
            return self.clone();
        }
        if lambda.is_one() {
            return other.clone();
        }
        Point {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + (b - a) * lambda)
                .collect(),
        }
    }

    /// Largest coordinate gap, the L∞ distance.
    pub fn sup_distance(&self, other: &Point) -> Result<Rational> {
        self.check_same_len(other)?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| if a > b { a - b } else { b - a })
            .max()
            .unwrap_or_else(Rational::zero))
    }

    /// Squared Euclidean distance, exact.
    pub fn squared_distance(&self, other: &Point) -> Result<Rational> {
        self.check_same_len(other)?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b) * (a - b))
            .sum())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Parses comma-separated rationals such as `0,1/2,1`.
impl FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coords = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(rational::parse)
            .collect::<Result<Vec<_>>>()?;
        Point::new(coords)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coords.iter().map(rational::format))
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let texts = Vec::<String>::deserialize(deserializer)?;
        let coords = texts
            .iter()
            .map(|t| rational::parse(t))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Point::new(coords).map_err(serde::de::Error::custom)
    }
}

/// Classification of one coordinate: pinned at 0, strictly inside, or pinned at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoordClass {
    Zero,
    Interior,
    One,
}

impl CoordClass {
    pub fn of(value: &Rational) -> CoordClass {
        if value.is_zero() {
            CoordClass::Zero
        } else if value.is_one() {
            CoordClass::One
        } else {
            CoordClass::Interior
        }
    }

    pub fn is_pinned(self) -> bool {
        self != CoordClass::Interior
    }

    pub fn symbol(self) -> char {
        match self {
            CoordClass::Zero => '0',
            CoordClass::Interior => '−',
            CoordClass::One => '1',
        }
    }
}

/// A string over `{0, −, 1}`, one symbol per coordinate. `−` is U+2212.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoordPattern(pub Vec<CoordClass>);

impl CoordPattern {
    /// At least one coordinate pinned at 0 or 1.
    pub fn is_boundary(&self) -> bool {
        self.0.iter().any(|c| c.is_pinned())
    }

    pub fn classes(&self) -> &[CoordClass] {
        &self.0
    }
}

impl fmt::Display for CoordPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|c| write!(f, "{}", c.symbol()))
    }
}

/// Accepts `−` (U+2212) or ASCII `-` for interior coordinates.
impl FromStr for CoordPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|ch| match ch {
                '0' => Ok(CoordClass::Zero),
                '1' => Ok(CoordClass::One),
                '−' | '-' => Ok(CoordClass::Interior),
                _ => Err(Error::InvalidParameter {
                    reason: format!("pattern symbol {ch:?} is not one of 0, −, 1"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(CoordPattern)
    }
}
