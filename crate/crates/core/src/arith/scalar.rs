use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::Rational;

/// A field element in one of the evaluation modes.
///
/// All scalars taking part in one computation share a mode; for the
/// pointwise modes they also share the sample value of `a`, carried by
/// [`Params`].
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(n: i64) -> Self;
    /// `None` when the denominator vanishes in this field.
    fn from_rational(r: &Rational) -> Option<Self>;
    fn inv(&self) -> Option<Self>;
    /// Short tag naming the mode, used in cache manifests.
    fn mode_tag() -> String;
    fn parse_text(s: &str) -> crate::Result<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * &r)
    }

    fn square(&self) -> Self {
        self.clone() * self
    }
}

/// The value of the base variable `a` in the current mode, with the derived
/// quantities `s = a^2` and `q = a^4`.
#[derive(Clone, Debug)]
pub struct Params<F: Scalar> {
    a: F,
    a_inv: F,
}

impl<F: Scalar> Params<F> {
    /// Fails when `a` is zero.
    pub fn new(a: F) -> crate::Result<Self> {
        let a_inv = a
            .inv()
            .ok_or_else(|| crate::Error::Singular("sample value a = 0".into()))?;
        Ok(Self { a, a_inv })
    }

    pub fn a(&self) -> &F {
        &self.a
    }

    /// `a^k` for any integer `k`.
    pub fn a_pow(&self, k: i32) -> F {
        let base = if k >= 0 { &self.a } else { &self.a_inv };
        pow_u(base, k.unsigned_abs())
    }

    pub fn s(&self) -> F {
        self.a_pow(2)
    }

    pub fn s_inv(&self) -> F {
        self.a_pow(-2)
    }

    /// `s - s^{-1}`
    pub fn s_minus_inv(&self) -> F {
        self.s() - &self.s_inv()
    }

    /// Symmetric quantum integer `[n] = (s^n - s^-n)/(s - s^-1)` in `s`.
    pub fn qint(&self, n: i32) -> F {
        let m = n.unsigned_abs() as i32;
        let mut acc = F::zero();
        for j in 0..m {
            acc = acc + &self.a_pow(2 * (m - 1 - 2 * j));
        }
        if n < 0 {
            -acc
        } else {
            acc
        }
    }
}

pub fn pow_u<F: Scalar>(base: &F, mut e: u32) -> F {
    let mut result = F::one();
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            result = result * &b;
        }
        e >>= 1;
        if e > 0 {
            b = b.square();
        }
    }
    result
}
