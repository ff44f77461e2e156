//! Fixed-point decimals and plane points.
//!
//! Every coordinate is an integer multiple of `1 / SCALE`. Squared distances
//! are therefore integers in units of `1 / SCALE²`, and the unit-disk and
//! Gabriel predicates reduce to exact integer comparisons.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

/// Number of fractional decimal digits carried by [`Fixed`].
pub const FRACTION_DIGITS: usize = 4;

/// Scale factor between plane units and the stored integer representation.
pub const SCALE: i64 = 10_000;

/// Squared length of one plane unit in scaled units.
pub const UNIT_SQ: i128 = (SCALE as i128) * (SCALE as i128);

/// Error produced when a decimal literal cannot be represented exactly.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseFixedError {
    /// The literal was empty or consisted only of a sign.
    #[error("empty decimal literal")]
    Empty,
    /// A character other than a digit, sign or single decimal point occurred.
    #[error("invalid character {0:?} in decimal literal")]
    InvalidCharacter(char),
    /// More fractional digits than [`FRACTION_DIGITS`] were given.
    #[error("decimal literal {0:?} has more than {FRACTION_DIGITS} fractional digits")]
    TooPrecise(String),
    /// The magnitude does not fit the 64-bit scaled representation.
    #[error("decimal literal {0:?} is out of range")]
    OutOfRange(String),
}

/// An exact decimal with [`FRACTION_DIGITS`] fractional digits.
///
/// Parsing rejects literals that would need rounding, so every value read
/// from a file is represented without loss.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fixed(i64);

impl Fixed {
    /// The value zero.
    pub const ZERO: Fixed = Fixed(0);
    /// The value one.
    pub const ONE: Fixed = Fixed(SCALE);

    /// Wraps an already scaled integer.
    pub const fn from_scaled(raw: i64) -> Self {
        Fixed(raw)
    }

    /// Converts a whole number of plane units.
    pub const fn from_int(value: i64) -> Self {
        Fixed(value * SCALE)
    }

    /// Returns the scaled integer representation.
    pub const fn raw(self) -> i64 {
        self.0
    }

    /// Lossy conversion for reporting and for real-valued cost functions.
    pub fn to_f64(self) -> f64 {
        self.0 as f64 / SCALE as f64
    }
}

impl FromStr for Fixed {
    type Err = ParseFixedError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (negative, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        if body.is_empty() || body == "." {
            return Err(ParseFixedError::Empty);
        }
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if let Some(c) = int_part.chars().chain(frac_part.chars()).find(|c| !c.is_ascii_digit()) {
            return Err(ParseFixedError::InvalidCharacter(c));
        }
        if frac_part.len() > FRACTION_DIGITS {
            return Err(ParseFixedError::TooPrecise(s.to_string()));
        }
        let out_of_range = || ParseFixedError::OutOfRange(s.to_string());
        let int_value: i64 = if int_part.is_empty() {
            0
        } else {
            int_part.parse().map_err(|_| out_of_range())?
        };
        let mut frac_value: i64 = 0;
        for (k, c) in frac_part.chars().enumerate() {
            let digit = i64::from(c as u8 - b'0');
            frac_value += digit * 10_i64.pow((FRACTION_DIGITS - 1 - k) as u32);
        }
        let magnitude = int_value
            .checked_mul(SCALE)
            .and_then(|v| v.checked_add(frac_value))
            .ok_or_else(out_of_range)?;
        Ok(Fixed(if negative { -magnitude } else { magnitude }))
    }
}

impl fmt::Display for Fixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.0 < 0 { "-" } else { "" };
        let magnitude = self.0.unsigned_abs();
        let scale = SCALE as u64;
        let int_part = magnitude / scale;
        let frac_part = magnitude % scale;
        if frac_part == 0 {
            write!(f, "{sign}{int_part}")
        } else {
            let digits = format!("{frac_part:0width$}", width = FRACTION_DIGITS);
            write!(f, "{sign}{int_part}.{}", digits.trim_end_matches('0'))
        }
    }
}

impl Add for Fixed {
    type Output = Fixed;
    fn add(self, rhs: Fixed) -> Fixed {
        Fixed(self.0 + rhs.0)
    }
}

impl Sub for Fixed {
    type Output = Fixed;
    fn sub(self, rhs: Fixed) -> Fixed {
        Fixed(self.0 - rhs.0)
    }
}

impl Neg for Fixed {
    type Output = Fixed;
    fn neg(self) -> Fixed {
        Fixed(-self.0)
    }
}

impl Mul<i64> for Fixed {
    type Output = Fixed;
    fn mul(self, rhs: i64) -> Fixed {
        Fixed(self.0 * rhs)
    }
}

/// A point of the plane with exact decimal coordinates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point2 {
    /// Horizontal coordinate; grows to the right.
    pub x: Fixed,
    /// Vertical coordinate; grows upwards.
    pub y: Fixed,
}

impl Point2 {
    /// Builds a point from two decimals.
    pub const fn new(x: Fixed, y: Fixed) -> Self {
        Point2 { x, y }
    }

    /// Builds a point from scaled integer coordinates.
    pub const fn from_scaled(x: i64, y: i64) -> Self {
        Point2 { x: Fixed::from_scaled(x), y: Fixed::from_scaled(y) }
    }

    /// Builds a point with whole-unit coordinates.
    pub const fn from_int(x: i64, y: i64) -> Self {
        Point2 { x: Fixed::from_int(x), y: Fixed::from_int(y) }
    }

    /// Parses a point from two decimal literals.
    pub fn parse(x: &str, y: &str) -> Result<Self, ParseFixedError> {
        Ok(Point2 { x: x.parse()?, y: y.parse()? })
    }

    /// Exact squared Euclidean distance in units of `1 / SCALE²`.
    pub fn dist2(self, other: Point2) -> i128 {
        let dx = i128::from(self.x.raw() - other.x.raw());
        let dy = i128::from(self.y.raw() - other.y.raw());
        dx * dx + dy * dy
    }

    /// Whether the two points are at Euclidean distance at most one.
    pub fn within_unit(self, other: Point2) -> bool {
        self.dist2(other) <= UNIT_SQ
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, rhs: Point2) -> Point2 {
        Point2 { x: self.x + rhs.x, y: self.y + rhs.y }
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Point2) -> Point2 {
        Point2 { x: self.x - rhs.x, y: self.y - rhs.y }
    }
}

impl Mul<i64> for Point2 {
    type Output = Point2;
    fn mul(self, rhs: i64) -> Point2 {
        Point2 { x: self.x * rhs, y: self.y * rhs }
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Renders an exact squared distance (units of `1 / SCALE²`) as a decimal.
pub fn format_dist2(dist2: i128) -> String {
    let int_part = dist2 / UNIT_SQ;
    let frac_part = dist2 % UNIT_SQ;
    if frac_part == 0 {
        return int_part.to_string();
    }
    let digits = format!("{frac_part:0width$}", width = 2 * FRACTION_DIGITS);
    format!("{int_part}.{}", digits.trim_end_matches('0'))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints_round_trip() {
        for text in ["0", "1", "-0.7", "1.61", "-1234.5678", "0.0001"] {
            let v: Fixed = text.parse().unwrap();
            assert_eq!(v.to_string(), text);
        }
        assert_eq!("+2.50".parse::<Fixed>().unwrap().to_string(), "2.5");
        assert_eq!(".5".parse::<Fixed>().unwrap(), Fixed::from_scaled(5000));
    }

    #[test]
    fn rejects_inexact_or_malformed_literals() {
        assert!(matches!("0.00001".parse::<Fixed>(), Err(ParseFixedError::TooPrecise(_))));
        assert!(matches!("1e3".parse::<Fixed>(), Err(ParseFixedError::InvalidCharacter('e'))));
        assert!(matches!("-".parse::<Fixed>(), Err(ParseFixedError::Empty)));
        assert!(matches!("1.2.3".parse::<Fixed>(), Err(ParseFixedError::InvalidCharacter('.'))));
    }

    #[test]
    fn squared_distance_is_exact() {
        let t1 = Point2::parse("-0.7", "1.61").unwrap();
        let t30 = Point2::parse("0.28", "1.43").unwrap();
        assert_eq!(format_dist2(t1.dist2(t30)), "0.9928");
        assert!(t1.within_unit(t30));
        assert!(Point2::from_int(0, 0).within_unit(Point2::from_int(1, 0)));
        assert!(!Point2::from_int(0, 0).within_unit(Point2::from_int(0, 2)));
    }
}
