//! Arbitrary-precision syllable exponents.
//!
//! Exponents stay in a machine word while they fit and promote to a
//! [`BigInt`] on overflow. The representation is canonical: a value that
//! fits in `i64` is always stored inline, so derived equality and hashing
//! agree with numeric equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64),
    Big(BigInt),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Exponent(Repr);

impl Exponent {
    pub const ZERO: Exponent = Exponent(Repr::Small(0));
    pub const ONE: Exponent = Exponent(Repr::Small(1));

    fn from_big(value: BigInt) -> Self {
        match value.to_i64() {
            Some(v) => Exponent(Repr::Small(v)),
            None => Exponent(Repr::Big(value)),
        }
    }

    fn to_big(&self) -> BigInt {
        match &self.0 {
            Repr::Small(v) => BigInt::from(*v),
            Repr::Big(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0))
    }

    pub fn is_positive(&self) -> bool {
        match &self.0 {
            Repr::Small(v) => *v > 0,
            Repr::Big(b) => b.is_positive(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(v) => *v < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }

    /// The value as `i64`, when it fits.
    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(v) => Some(*v),
            Repr::Big(_) => None,
        }
    }

    pub fn abs(&self) -> Exponent {
        match &self.0 {
            Repr::Small(v) => match v.checked_abs() {
                Some(a) => Exponent(Repr::Small(a)),
                None => Exponent::from_big(BigInt::from(*v).abs()),
            },
            Repr::Big(b) => Exponent::from_big(b.abs()),
        }
    }
}

impl From<i64> for Exponent {
    fn from(v: i64) -> Self {
        Exponent(Repr::Small(v))
    }
}

impl From<i32> for Exponent {
    fn from(v: i32) -> Self {
        Exponent(Repr::Small(v as i64))
    }
}

impl From<u64> for Exponent {
    fn from(v: u64) -> Self {
        Exponent::from_big(BigInt::from(v))
    }
}

impl From<BigInt> for Exponent {
    fn from(v: BigInt) -> Self {
        Exponent::from_big(v)
    }
}

impl Add<&Exponent> for &Exponent {
    type Output = Exponent;

    fn add(self, rhs: &Exponent) -> Exponent {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
            if let Some(sum) = a.checked_add(*b) {
                return Exponent(Repr::Small(sum));
            }
        }
        Exponent::from_big(self.to_big() + rhs.to_big())
    }
}

impl Add for Exponent {
    type Output = Exponent;

    fn add(self, rhs: Exponent) -> Exponent {
        &self + &rhs
    }
}

impl Neg for &Exponent {
    type Output = Exponent;

    fn neg(self) -> Exponent {
        match &self.0 {
            Repr::Small(v) => match v.checked_neg() {
                Some(n) => Exponent(Repr::Small(n)),
                None => Exponent::from_big(-BigInt::from(*v)),
            },
            Repr::Big(b) => Exponent::from_big(-b),
        }
    }
}

impl Neg for Exponent {
    type Output = Exponent;

    fn neg(self) -> Exponent {
        -&self
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(v) => write!(f, "{v}"),
            Repr::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Exponent {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.parse::<i64>() {
            Ok(v) => Ok(Exponent(Repr::Small(v))),
            Err(_) => s.parse::<BigInt>().map(Exponent::from_big),
        }
    }
}

impl Zero for Exponent {
    fn zero() -> Self {
        Exponent::ZERO
    }

    fn is_zero(&self) -> bool {
        Exponent::is_zero(self)
    }
}
