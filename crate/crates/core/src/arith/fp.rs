use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::rational::Rational;
use super::scalar::Scalar;
use crate::{Error, Result};

// Primes below 2^31, all congruent to 1 mod 4 so that a primitive fourth
// root of unity exists.
pub const P0: u64 = 2147483629;
pub const P1: u64 = 2147483549;
pub const P2: u64 = 2147483497;
pub const P3: u64 = 2147483489;
pub const P4: u64 = 2147483477;
pub const P5: u64 = 2147483353;

/// Element of the prime field `Z/P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub const MODULUS: u64 = P;

    pub fn new(v: u64) -> Self {
        Self(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        let r = n.mod_floor(&BigInt::from(P));
        Self(r.to_u64().unwrap())
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// A primitive fourth root of unity.
    pub fn fourth_root_of_unity() -> Self {
        (2..)
            .map(|g| Self(g).pow((P - 1) / 4))
            .find(|z| (*z * *z).0 == P - 1)
            .unwrap()
    }

    /// Symmetric representative in `(-P/2, P/2]`.
    pub fn signed(self) -> i64 {
        if self.0 > P / 2 {
            self.0 as i64 - P as i64
        } else {
            self.0 as i64
        }
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Self(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Self(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Self(self.0 * rhs.0 % P)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Add<&Fp<P>> for Fp<P> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: &Self) -> Self {
        self + *rhs
    }
}

impl<const P: u64> Sub<&Fp<P>> for Fp<P> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: &Self) -> Self {
        self - *rhs
    }
}

impl<const P: u64> Mul<&Fp<P>> for Fp<P> {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: &Self) -> Self {
        self * *rhs
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn zero() -> Self {
        Self(0)
    }
    fn one() -> Self {
        Self(1)
    }
    #[inline]
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn from_i64(n: i64) -> Self {
        Self(n.rem_euclid(P as i64) as u64)
    }
    fn from_rational(r: &Rational) -> Option<Self> {
        let d = Self::from_bigint(r.denom());
        Self::from_bigint(r.numer()).div(&d)
    }
    fn inv(&self) -> Option<Self> {
        (self.0 != 0).then(|| self.pow(P - 2))
    }
    fn mode_tag() -> String {
        format!("fp{P}")
    }
    fn parse_text(s: &str) -> Result<Self> {
        let v: u64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid field element `{s}`")))?;
        if v >= P {
            return Err(Error::Parse(format!("field element `{s}` out of range")));
        }
        Ok(Self(v))
    }
}

/// Lifts a residue to the integer range `[0, P)`.
pub fn to_bigint<const P: u64>(x: Fp<P>) -> BigInt {
    BigInt::from(x.0)
}
