use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;


use super::laurent::{poly_gcd, LaurentPoly};
use super::rational::Rational;
use super::scalar::{Params, Scalar};
use crate::{Error, Result};

/// Quotient of Laurent polynomials in `a`.
///
/// Canonical form: numerator and denominator coprime, denominator with
/// lowest exponent 0 and lowest coefficient 1. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn var() -> Self {
        Self::from_poly(LaurentPoly::var())
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    /// The Laurent polynomial this equals, if the denominator is trivial.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self { num, den: LaurentPoly::one() };
        }
        let (num, den) = if den.num_terms() == 1 {
            (num, den)
        } else {
            let (g, _) = poly_gcd(&num, &den).expect("nonzero inputs");
            if g.is_one() {
                (num, den)
            } else {
                (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
            }
        };
        let (shift, den0) = den.split_monomial();
        let lc = den0.lowest_coeff().unwrap().clone();
        let num = num.shift(-shift);
        if lc.is_one() {
            Self { num, den: den0 }
        } else {
            let inv = lc.recip();
            Self { num: num.scale(&inv), den: den0.scale(&inv) }
        }
    }

    /// Evaluates in a pointwise field; `None` at a pole.
    pub fn eval<F: Scalar>(&self, params: &Params<F>) -> Option<F> {
        let n = self.num.eval(params)?;
        let d = self.den.eval(params)?;
        n.div(&d)
    }

    pub fn eval_rational(&self, a0: &Rational) -> Option<Rational> {
        let params = Params::new(a0.clone()).ok()?;
        self.eval(&params)
    }
}

fn add_rf(x: &RationalFunction, y: &RationalFunction, negate: bool) -> RationalFunction {
    let yn = if negate { -&y.num } else { y.num.clone() };
    if x.den == y.den {
        return RationalFunction::normalized(&x.num + &yn, x.den.clone());
    }
    if y.num.is_zero() {
        return x.clone();
    }
    if x.num.is_zero() {
        return RationalFunction { num: yn, den: y.den.clone() };
    }
    let (g, _) = poly_gcd(&x.den, &y.den).expect("nonzero denominators");
    let xd = x.den.exact_div(&g).unwrap();
    let yd = y.den.exact_div(&g).unwrap();
    let num = &(&x.num * &yd) + &(&yn * &xd);
    let den = &x.den * &yd;
    RationalFunction::normalized(num, den)
}

fn mul_rf(x: &RationalFunction, y: &RationalFunction) -> RationalFunction {
    if x.num.is_zero() || y.num.is_zero() {
        return RationalFunction::zero();
    }
    // cross-cancel before multiplying
    let (g1, _) = poly_gcd(&x.num, &y.den).unwrap();
    let (g2, _) = poly_gcd(&y.num, &x.den).unwrap();
    let xn = x.num.exact_div(&g1).unwrap();
    let yd = y.den.exact_div(&g1).unwrap();
    let yn = y.num.exact_div(&g2).unwrap();
    let xd = x.den.exact_div(&g2).unwrap();
    let num = &xn * &yn;
    let den = &xd * &yd;
    let (shift, den0) = den.split_monomial();
    let lc = den0.lowest_coeff().unwrap().clone();
    let inv = lc.recip();
    RationalFunction { num: num.shift(-shift).scale(&inv), den: den0.scale(&inv) }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $f:expr) => {
        impl $tr<&RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                $f(self, rhs)
            }
        }
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                $f(&self, &rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                $f(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |x, y| add_rf(x, y, false));
forward_binop!(Sub, sub, |x, y| add_rf(x, y, true));
forward_binop!(Mul, mul, mul_rf);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -self.num, den: self.den }
    }
}

impl Scalar for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn from_i64(n: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(Rational::from_integer(n.into())))
    }
    fn from_rational(r: &Rational) -> Option<Self> {
        Some(Self::from_poly(LaurentPoly::constant(r.clone())))
    }
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(Self::normalized(self.den.clone(), self.num.clone()))
    }
    fn mode_tag() -> String {
        "symbolic".into()
    }
    fn parse_text(s: &str) -> Result<Self> {
        s.parse()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

/// `num` alone when the denominator is 1, otherwise `(num)/(den)`.
impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl FromStr for RationalFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix('(') {
            let (n, d) = rest
                .split_once(")/(")
                .ok_or_else(|| Error::Parse(format!("invalid rational function `{s}`")))?;
            let d = d
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("invalid rational function `{s}`")))?;
            Self::new(n.parse()?, d.parse()?)
        } else {
            Ok(Self::from_poly(t.parse()?))
        }
    }
}
