use std::fmt;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{parse, Error, Result};

/// A vector of V(8,2), one bit per coordinate.
///
/// Bit `i - 1` holds the coordinate `x_i`, so `e_1` is `0x01` and `e_8` is
/// `0x80`. Nonzero vectors are the points of PG(7,2).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GfVector(pub u8);

impl GfVector {
    pub const ZERO: GfVector = GfVector(0);
    /// The unit point `u = e_1 + ... + e_8`.
    pub const UNIT: GfVector = GfVector(0xff);

    /// Basis vector `e_i`, `i` in `1..=8`.
    pub fn basis(i: usize) -> GfVector {
        assert!((1..=8).contains(&i), "basis index {i} out of range");
        GfVector(1 << (i - 1))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    /// Standard dot product over GF(2).
    pub fn dot(self, other: GfVector) -> bool {
        (self.0 & other.0).count_ones() & 1 == 1
    }

    /// Coordinate `x_i`, `i` in `1..=8`.
    pub fn coord(self, i: usize) -> bool {
        self.0 >> (i - 1) & 1 == 1
    }

    /// All 255 points of PG(7,2) in integer mask order.
    pub fn points() -> impl Iterator<Item = GfVector> + Clone {
        (1..=255u8).map(GfVector)
    }

    /// Indices `i` with `x_i = 1`, ascending.
    pub fn support(self) -> impl Iterator<Item = usize> {
        (1..=8).filter(move |&i| self.coord(i))
    }

    /// Shorthand notation: `"246"` for `e_2+e_4+e_6`. Vectors of weight 5 to 7
    /// are written as the complement plus `u` (`"18u"`), and the unit point is `"u"`.
    pub fn shorthand(self) -> String {
        let w = self.weight();
        if w == 8 {
            return "u".to_string();
        }
        if w >= 5 {
            let mut s: String = GfVector(!self.0).support().map(digit).collect();
            s.push('u');
            return s;
        }
        if w == 0 {
            return "0".to_string();
        }
        self.support().map(digit).collect()
    }

    /// Parse shorthand: digits `1`-`8` and an optional `u`, each used at most once.
    pub fn parse_shorthand(text: &str) -> Result<GfVector> {
        if text.is_empty() {
            return Err(parse("empty point"));
        }
        let mut seen = 0u16;
        let mut bits = 0u8;
        for c in text.chars() {
            let slot = match c {
                '1'..='8' => c as u16 - '1' as u16,
                'u' => 8,
                _ => return Err(parse(format!("invalid character {c:?} in point {text:?}"))),
            };
            if seen & (1 << slot) != 0 {
                return Err(parse(format!("repeated {c:?} in point {text:?}")));
            }
            seen |= 1 << slot;
            bits ^= if slot == 8 { 0xff } else { 1 << slot };
        }
        Ok(GfVector(bits))
    }

    /// Two lowercase hex digits.
    pub fn to_hex(self) -> String {
        format!("{:02x}", self.0)
    }

    pub fn from_hex(text: &str) -> Result<GfVector> {
        if text.len() != 2 {
            return Err(parse(format!("expected two hex digits, got {text:?}")));
        }
        u8::from_str_radix(text, 16)
            .map(GfVector)
            .map_err(|e| parse(format!("{text:?}: {e}")))
    }
}

fn digit(i: usize) -> char {
    char::from(b'0' + i as u8)
}

/// `parse_point` from the shorthand grammar.
pub fn parse_point(text: &str) -> Result<GfVector> {
    GfVector::parse_shorthand(text)
}

// Addition over GF(2) is XOR.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for GfVector {
    type Output = GfVector;
    fn add(self, rhs: GfVector) -> GfVector {
        GfVector(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for GfVector {
    fn add_assign(&mut self, rhs: GfVector) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Debug for GfVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GfVector({})", self.shorthand())
    }
}

impl fmt::Display for GfVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.shorthand())
    }
}

impl FromStr for GfVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<GfVector> {
        GfVector::parse_shorthand(s)
    }
}

impl Serialize for GfVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.shorthand())
    }
}

impl<'de> Deserialize<'de> for GfVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        GfVector::parse_shorthand(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        assert_eq!(parse_point("1").unwrap(), GfVector(0b0000_0001));
        assert_eq!(
            parse_point("1246").unwrap(),
            GfVector::basis(1) + GfVector::basis(2) + GfVector::basis(4) + GfVector::basis(6)
        );
        let expected = [2, 3, 4, 5, 6, 7]
            .iter()
            .fold(GfVector::ZERO, |acc, &i| acc + GfVector::basis(i));
        assert_eq!(parse_point("18u").unwrap(), expected);
        assert_eq!(parse_point("u").unwrap(), GfVector::UNIT);
        assert_eq!(parse_point("8357").unwrap(), parse_point("3578").unwrap());
    }

    #[test]
    fn parse_errors() {
        assert!(parse_point("").is_err());
        assert!(parse_point("9").is_err());
        assert!(parse_point("0").is_err());
        assert!(parse_point("11").is_err());
        assert!(parse_point("1uu").is_err());
        assert!(parse_point("1 2").is_err());
    }

    #[test]
    fn shorthand_forms() {
        assert_eq!(parse_point("135u").unwrap().shorthand(), "135u");
        assert_eq!(parse_point("1u").unwrap().weight(), 7);
        assert_eq!(GfVector::UNIT.shorthand(), "u");
        assert_eq!(parse_point("1234").unwrap().shorthand(), "1234");
        assert_eq!(GfVector(0xa5).to_hex(), "a5");
        assert_eq!(GfVector::from_hex("a5").unwrap(), GfVector(0xa5));
        assert!(GfVector::from_hex("a").is_err());
    }

    #[test]
    fn every_point_roundtrips() {
        for p in GfVector::points() {
            assert_eq!(parse_point(&p.shorthand()).unwrap(), p);
            assert_eq!(GfVector::from_hex(&p.to_hex()).unwrap(), p);
        }
    }
}
