use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, parse_rational, Rational};
use super::scalar::Params;
use crate::{Error, Result};

/// Laurent polynomial in `a` with rational coefficients.
///
/// Stored densely from the lowest exponent; both ends are nonzero, and the
/// zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_dense(0, vec![c])
    }

    pub fn monomial(c: Rational, exp: i32) -> Self {
        Self::from_dense(exp, vec![c])
    }

    /// The variable `a`.
    pub fn var() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn from_dense(low: i32, coeffs: Vec<Rational>) -> Self {
        let mut p = Self { low, coeffs };
        p.trim();
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(terms: I) -> Self {
        let mut terms: Vec<_> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        terms.sort_by_key(|t| t.0);
        let low = terms[0].0;
        let high = terms[terms.len() - 1].0;
        let mut coeffs = vec![Rational::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_dense(low, coeffs)
    }

    /// Integer coefficients listed from exponent `low` upwards.
    pub fn from_ints(low: i32, coeffs: &[i64]) -> Self {
        Self::from_dense(
            low,
            coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn low_exp(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn high_exp(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low + self.coeffs.len() as i32 - 1)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &Rational)> + '_ {
        let low = self.low;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (low + i as i32, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn coeff(&self, exp: i32) -> Rational {
        let i = exp - self.low;
        if i < 0 || i as usize >= self.coeffs.len() {
            Rational::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn lowest_coeff(&self) -> Option<&Rational> {
        self.coeffs.first()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Multiplies by `a^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Substitutes `a -> a^k` (`k` nonzero).
    pub fn substitute_power(&self, k: i32) -> Self {
        assert!(k != 0);
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    /// Splits off the monomial part: returns `(e, p)` with `self = a^e p` and
    /// `p` having a nonzero constant term.
    pub fn split_monomial(&self) -> (i32, Self) {
        (self.low, Self { low: 0, coeffs: self.coeffs.clone() })
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (q, r) = poly_divrem(&self.coeffs, &d.coeffs);
        r.iter().all(|c| c.is_zero()).then(|| Self::from_dense(self.low - d.low, q))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluation at a rational point; `None` at `a = 0` with negative
    /// exponents present.
    pub fn eval_rational(&self, a0: &Rational) -> Option<Rational> {
        if a0.is_zero() {
            return if self.low >= 0 { Some(self.coeff(0)) } else { None };
        }
        let params = Params::new(a0.clone()).ok()?;
        self.eval(&params)
    }

    /// Evaluation in any pointwise field; `None` if a coefficient has no
    /// image there.
    pub fn eval<F: super::scalar::Scalar>(&self, params: &Params<F>) -> Option<F> {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * params.a() + &F::from_rational(c)?;
        }
        Some(acc * &params.a_pow(self.low))
    }

    /// True when every exponent is divisible by 4, i.e. a polynomial in `q`.
    pub fn is_in_q(&self) -> bool {
        self.terms().all(|(e, _)| e.rem_euclid(4) == 0)
    }

    /// Derivative-free content check used by formatting: all coefficients
    /// integral.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

/// Dense polynomial division over the rationals (ascending coefficients).
pub(crate) fn poly_divrem(n: &[Rational], d: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r: Vec<Rational> = n.to_vec();
    while r.last().is_some_and(|c| c.is_zero()) {
        r.pop();
    }
    let dd = d.len() - 1;
    let lead = &d[dd];
    if r.len() < d.len() {
        return (vec![], r);
    }
    let mut q = vec![Rational::zero(); r.len() - dd];
    for i in (0..q.len()).rev() {
        let c = &r[i + dd] / lead;
        if !c.is_zero() {
            for (j, dj) in d.iter().enumerate() {
                if !dj.is_zero() {
                    r[i + j] -= &c * dj;
                }
            }
        }
        q[i] = c;
    }
    r.truncate(dd);
    while r.last().is_some_and(|c| c.is_zero()) {
        r.pop();
    }
    (q, r)
}

fn make_monic(p: &mut [Rational]) {
    if let Some(l) = p.last().cloned() {
        if !l.is_one() {
            for c in p.iter_mut() {
                *c /= &l;
            }
        }
    }
}

/// Monic gcd of two ordinary polynomials.
fn dense_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    make_monic(&mut x);
    make_monic(&mut y);
    while !y.is_empty() {
        let (_, mut r) = poly_divrem(&x, &y);
        make_monic(&mut r);
        x = std::mem::replace(&mut y, r);
    }
    x
}

/// Greatest common divisor of two Laurent polynomials.
///
/// Monomials are units, so the result is normalized to have lowest exponent
/// zero and leading coefficient 1. The monomial content, the smallest lowest
/// exponent among the nonzero inputs, is returned alongside.
pub fn poly_gcd(p: &LaurentPoly, q: &LaurentPoly) -> Result<(LaurentPoly, i32)> {
    match (p.is_zero(), q.is_zero()) {
        (true, true) => Err(Error::Domain("gcd of two zero polynomials".into())),
        (false, true) | (true, false) => {
            let x = if p.is_zero() { q } else { p };
            let mut c = x.coeffs.clone();
            make_monic(&mut c);
            Ok((LaurentPoly::from_dense(0, c), x.low))
        }
        (false, false) => {
            let g = dense_gcd(&p.coeffs, &q.coeffs);
            Ok((LaurentPoly::from_dense(0, g), p.low.min(q.low)))
        }
    }
}

/// Returns `(sign, k)` with `p = sign * a^k * q`, if such a unit exists.
pub fn unit_monomial_quotient(p: &LaurentPoly, q: &LaurentPoly) -> Option<(i8, i32)> {
    if q.is_zero() || p.is_zero() || p.coeffs.len() != q.coeffs.len() {
        return None;
    }
    let ratio = &p.coeffs[0] / &q.coeffs[0];
    let sign = if ratio.is_one() {
        1
    } else if (-&ratio).is_one() {
        -1
    } else {
        return None;
    };
    p.coeffs
        .iter()
        .zip(&q.coeffs)
        .all(|(x, y)| *x == &ratio * y)
        .then_some((sign, p.low - q.low))
}

fn add_dense(p: &LaurentPoly, q: &LaurentPoly, negate_q: bool) -> LaurentPoly {
    if q.is_zero() {
        return p.clone();
    }
    if p.is_zero() {
        return if negate_q { -q.clone() } else { q.clone() };
    }
    let low = p.low.min(q.low);
    let high = p.high_exp().unwrap().max(q.high_exp().unwrap());
    let mut coeffs = vec![Rational::zero(); (high - low + 1) as usize];
    for (i, c) in p.coeffs.iter().enumerate() {
        coeffs[(p.low - low) as usize + i] += c;
    }
    for (i, c) in q.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(q.low - low) as usize + i];
        if negate_q {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    LaurentPoly::from_dense(low, coeffs)
}

fn mul_dense(p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() || q.is_zero() {
        return LaurentPoly::zero();
    }
    let mut coeffs = vec![Rational::zero(); p.coeffs.len() + q.coeffs.len() - 1];
    for (i, x) in p.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in q.coeffs.iter().enumerate() {
            if !y.is_zero() {
                coeffs[i + j] += x * y;
            }
        }
    }
    LaurentPoly::from_dense(p.low + q.low, coeffs)
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $f:expr) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                $f(self, rhs)
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                $f(&self, &rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                $f(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |p, q| add_dense(p, q, false));
forward_binop!(Sub, sub, |p, q| add_dense(p, q, true));
forward_binop!(Mul, mul, mul_dense);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

/// Printed in `q` when every exponent is divisible by 4, otherwise in `a`.
/// Terms appear in descending exponent order, e.g. `2*q^6 - q^5 + 1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let (var, div) = if self.is_in_q() { ("q", 4) } else { ("a", 1) };
        for (n, (e, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let e = e / div;
            if e == 0 {
                write!(f, "{}", format_rational(&abs))?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{}*", format_rational(&abs))?;
            }
            if e == 1 {
                write!(f, "{var}")?;
            } else {
                write!(f, "{var}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Accepts the printed form; a text may use `a` or `q` but not both.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("invalid polynomial `{s}`: {why}"));
        let t = s.trim();
        if t.is_empty() {
            return Err(bad("empty"));
        }
        let has_a = t.contains('a');
        let has_q = t.contains('q');
        if has_a && has_q {
            return Err(bad("mixes a and q"));
        }
        let mult = if has_q { 4 } else { 1 };
        let var = if has_q { 'q' } else { 'a' };

        // split into signed terms on top-level + and - (not exponent signs)
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev: Option<char> = None;
        for ch in t.chars() {
            if ch.is_whitespace() {
                continue;
            }
            if (ch == '+' || ch == '-') && prev != Some('^') {
                if !cur.is_empty() {
                    terms.push((neg, std::mem::take(&mut cur)));
                } else if prev.is_some() {
                    return Err(bad("dangling sign"));
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        if cur.is_empty() {
            return Err(bad("trailing sign"));
        }
        terms.push((neg, cur));

        let mut out = Vec::with_capacity(terms.len());
        for (neg, term) in terms {
            let (coef, exp) = match term.find(var) {
                None => (parse_rational(&term)?, 0),
                Some(pos) => {
                    let (head, tail) = term.split_at(pos);
                    let coef = match head {
                        "" => Rational::one(),
                        h => parse_rational(h.strip_suffix('*').ok_or_else(|| bad("missing `*`"))?)?,
                    };
                    let tail = &tail[1..];
                    let exp = match tail {
                        "" => 1,
                        t => t
                            .strip_prefix('^')
                            .and_then(|e| e.parse::<i32>().ok())
                            .ok_or_else(|| bad("bad exponent"))?,
                    };
                    (coef, exp)
                }
            };
            let coef = if neg { -coef } else { coef };
            out.push((exp * mult, coef));
        }
        Ok(LaurentPoly::from_terms(out))
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_string().cmp(&other.to_string())
    }
}
