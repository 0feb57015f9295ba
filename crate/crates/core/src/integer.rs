//! Integers that stay in machine words until an operation overflows.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Integer {
    Small(i64),
    Large(BigInt),
}

impl Integer {
    pub const ZERO: Integer = Integer::Small(0);
    pub const ONE: Integer = Integer::Small(1);

    fn from_big(b: BigInt) -> Integer {
        match b.to_i64() {
            Some(v) => Integer::Small(v),
            None => Integer::Large(b),
        }
    }

    fn from_i128(v: i128) -> Integer {
        match i64::try_from(v) {
            Ok(v) => Integer::Small(v),
            Err(_) => Integer::Large(BigInt::from(v)),
        }
    }

    fn to_big(&self) -> BigInt {
        match self {
            Integer::Small(v) => BigInt::from(*v),
            Integer::Large(b) => b.clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Integer::Small(v) => Some(*v),
            Integer::Large(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Integer::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Integer::Small(1))
    }

    /// `±1`.
    pub fn is_unit(&self) -> bool {
        matches!(self, Integer::Small(1 | -1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Integer::Small(v) => *v < 0,
            Integer::Large(b) => b.is_negative(),
        }
    }

    pub fn abs(&self) -> Integer {
        match self {
            Integer::Small(v) => v.checked_abs().map(Integer::Small).unwrap_or_else(|| Integer::from_big(BigInt::from(*v).abs())),
            Integer::Large(b) => Integer::from_big(b.abs()),
        }
    }

    pub fn cmp_abs(&self, other: &Integer) -> Ordering {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => a.unsigned_abs().cmp(&b.unsigned_abs()),
            _ => self.to_big().magnitude().cmp(other.to_big().magnitude()),
        }
    }

    /// Truncated division: `self = q * other + r` with `|r| < |other|`.
    pub fn div_rem(&self, other: &Integer) -> (Integer, Integer) {
        assert!(!other.is_zero(), "division by zero");
        if let (Integer::Small(a), Integer::Small(b)) = (self, other) {
            if let (Some(q), Some(r)) = (a.checked_div(*b), a.checked_rem(*b)) {
                return (Integer::Small(q), Integer::Small(r));
            }
        }
        let (q, r) = self.to_big().div_rem(&other.to_big());
        (Integer::from_big(q), Integer::from_big(r))
    }

    /// `self / other` when the division is known to be exact.
    pub fn div_exact(&self, other: &Integer) -> Integer {
        let (q, r) = self.div_rem(other);
        debug_assert!(r.is_zero());
        q
    }

    pub fn is_divisible_by(&self, other: &Integer) -> bool {
        if other.is_zero() {
            return self.is_zero();
        }
        self.div_rem(other).1.is_zero()
    }

    /// Non-negative greatest common divisor.
    pub fn gcd(&self, other: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, other) {
            let (mut x, mut y) = (a.unsigned_abs(), b.unsigned_abs());
            while y != 0 {
                (x, y) = (y, x % y);
            }
            return match i64::try_from(x) {
                Ok(v) => Integer::Small(v),
                Err(_) => Integer::Large(BigInt::from(x)),
            };
        }
        Integer::from_big(self.to_big().gcd(&other.to_big()))
    }

    /// Non-negative least common multiple.
    pub fn lcm(&self, other: &Integer) -> Integer {
        if self.is_zero() || other.is_zero() {
            return Integer::ZERO;
        }
        (self.div_exact(&self.gcd(other)) * other).abs()
    }

    /// `(g, s, t)` with `g = gcd(self, other) >= 0` and `g = s * self + t * other`.
    pub fn extended_gcd(&self, other: &Integer) -> (Integer, Integer, Integer) {
        if let (Integer::Small(a), Integer::Small(b)) = (self, other) {
            let (mut r0, mut r1) = (*a as i128, *b as i128);
            let (mut s0, mut s1) = (1i128, 0i128);
            let (mut t0, mut t1) = (0i128, 1i128);
            while r1 != 0 {
                let q = r0 / r1;
                (r0, r1) = (r1, r0 - q * r1);
                (s0, s1) = (s1, s0 - q * s1);
                (t0, t1) = (t1, t0 - q * t1);
            }
            if r0 < 0 {
                (r0, s0, t0) = (-r0, -s0, -t0);
            }
            return (Integer::from_i128(r0), Integer::from_i128(s0), Integer::from_i128(t0));
        }
        let e = self.to_big().extended_gcd(&other.to_big());
        let (mut g, mut s, mut t) = (e.gcd, e.x, e.y);
        if g.is_negative() {
            g = -g;
            s = -s;
            t = -t;
        }
        (Integer::from_big(g), Integer::from_big(s), Integer::from_big(t))
    }
}

impl Default for Integer {
    fn default() -> Self {
        Integer::ZERO
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer::Small(v)
    }
}

impl From<i32> for Integer {
    fn from(v: i32) -> Self {
        Integer::Small(v as i64)
    }
}

impl From<u64> for Integer {
    fn from(v: u64) -> Self {
        Integer::from_i128(v as i128)
    }
}

impl From<usize> for Integer {
    fn from(v: usize) -> Self {
        Integer::from_i128(v as i128)
    }
}

impl From<BigInt> for Integer {
    fn from(b: BigInt) -> Self {
        Integer::from_big(b)
    }
}

impl Ord for Integer {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Integer {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Integer> for &Integer {
            type Output = Integer;
            fn $method(self, rhs: &Integer) -> Integer {
                if let (Integer::Small(a), Integer::Small(b)) = (self, rhs) {
                    if let Some(v) = a.$checked(*b) {
                        return Integer::Small(v);
                    }
                }
                Integer::from_big(self.to_big().$method(rhs.to_big()))
            }
        }

        impl $trait<Integer> for Integer {
            type Output = Integer;
            fn $method(self, rhs: Integer) -> Integer {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&Integer> for Integer {
            type Output = Integer;
            fn $method(self, rhs: &Integer) -> Integer {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        match self {
            Integer::Small(v) => v.checked_neg().map(Integer::Small).unwrap_or_else(|| Integer::from_big(-BigInt::from(*v))),
            Integer::Large(b) => Integer::from_big(-b),
        }
    }
}

impl Neg for Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        -&self
    }
}

impl One for Integer {
    fn one() -> Self {
        Integer::ONE
    }
}

impl Zero for Integer {
    fn zero() -> Self {
        Integer::ZERO
    }

    fn is_zero(&self) -> bool {
        Integer::is_zero(self)
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integer::Small(v) => write!(f, "{v}"),
            Integer::Large(b) => write!(f, "{b}"),
        }
    }
}

impl FromStr for Integer {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<BigInt>().map(Integer::from_big)
    }
}

/// Machine-sized values serialize as JSON numbers, larger ones as decimal strings.
impl Serialize for Integer {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Integer::Small(v) => serializer.serialize_i64(*v),
            Integer::Large(b) => serializer.serialize_str(&b.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Integer {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct IntegerVisitor;

        impl Visitor<'_> for IntegerVisitor {
            type Value = Integer;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Integer, E> {
                Ok(Integer::Small(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Integer, E> {
                Ok(Integer::from(v))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Integer, E> {
                v.parse().map_err(|_| E::invalid_value(de::Unexpected::Str(v), &self))
            }
        }

        deserializer.deserialize_any(IntegerVisitor)
    }
}
