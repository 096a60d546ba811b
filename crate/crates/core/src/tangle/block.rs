use std::fmt;

use crate::arith::linalg::solve_in_span;
use crate::arith::Scalar;
use crate::{Error, Result};

use super::weight::WeightSpace;

/// A 2×2 matrix, column `i` holding the coordinates of the image of the
/// `i`-th basis vector.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockMatrix2<F> {
    pub m: [[F; 2]; 2],
}

impl<F: Scalar> BlockMatrix2<F> {
    pub fn new(m: [[F; 2]; 2]) -> Self {
        Self { m }
    }

    pub fn identity() -> Self {
        Self::scalar(F::one())
    }

    pub fn scalar(c: F) -> Self {
        Self::new([[c.clone(), F::zero()], [F::zero(), c]])
    }

    pub fn trace(&self) -> F {
        self.m[0][0].clone() + &self.m[1][1]
    }

    pub fn det(&self) -> F {
        self.m[0][0].clone() * &self.m[1][1] - self.m[0][1].clone() * &self.m[1][0]
    }

    pub fn mul(&self, o: &Self) -> Self {
        let e = |i: usize, j: usize| self.m[i][0].clone() * &o.m[0][j] + self.m[i][1].clone() * &o.m[1][j];
        Self::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn sub(&self, o: &Self) -> Self {
        let e = |i: usize, j: usize| self.m[i][j].clone() - &o.m[i][j];
        Self::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn transpose(&self) -> Self {
        let m = &self.m;
        Self::new([[m[0][0].clone(), m[1][0].clone()], [m[0][1].clone(), m[1][1].clone()]])
    }

    pub fn inverse(&self) -> Option<Self> {
        let d = self.det().inv()?;
        let m = &self.m;
        Some(Self::new([
            [m[1][1].clone() * &d, -(m[0][1].clone() * &d)],
            [-(m[1][0].clone() * &d), m[0][0].clone() * &d],
        ]))
    }

    /// `P^{-1} M P`
    pub fn conjugate(&self, p: &Self) -> Option<Self> {
        Some(p.inverse()?.mul(self).mul(p))
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(Scalar::is_zero)
    }

    pub fn try_map<G: Scalar>(&self, f: impl Fn(&F) -> Option<G>) -> Option<BlockMatrix2<G>> {
        let m = &self.m;
        Some(BlockMatrix2::new([[f(&m[0][0])?, f(&m[0][1])?], [f(&m[1][0])?, f(&m[1][1])?]]))
    }
}

impl<F: Scalar> fmt::Display for BlockMatrix2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.m;
        write!(f, "[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

/// Matrix of `j` on a 2-dimensional invariant subspace.
pub fn block_restrict<F: Scalar>(
    j: impl Fn(&[F]) -> Result<Vec<F>>,
    s: &WeightSpace<F>,
) -> Result<BlockMatrix2<F>> {
    if s.dim() != 2 {
        return Err(Error::Domain(format!("block restriction needs a 2-dimensional space, got {}", s.dim())));
    }
    let mut m = [[F::zero(), F::zero()], [F::zero(), F::zero()]];
    for (i, w) in s.basis.iter().enumerate() {
        let c = solve_in_span(&s.basis, &j(w)?)
            .ok_or_else(|| Error::Structure("endomorphism does not preserve the subspace".into()))?;
        for (k, x) in c.into_iter().enumerate() {
            m[k][i] = x;
        }
    }
    Ok(BlockMatrix2::new(m))
}

/// `tr(ABAB - AABB)`
pub fn trace_difference<F: Scalar>(a: &BlockMatrix2<F>, b: &BlockMatrix2<F>) -> F {
    let ab = a.mul(b);
    let aa = a.mul(a);
    let bb = b.mul(b);
    ab.mul(&ab).trace() - &aa.mul(&bb).trace()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn parse_word(s: &str) -> Result<Vec<Letter>> {
        s.chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                'A' | 'a' => Ok(Letter::A),
                'B' | 'b' => Ok(Letter::B),
                _ => Err(Error::Parse(format!("tangle letter '{c}'"))),
            })
            .collect()
    }
}

fn word_product<F: Scalar>(w: &[Letter], a: &BlockMatrix2<F>, b: &BlockMatrix2<F>) -> BlockMatrix2<F> {
    w.iter().fold(BlockMatrix2::identity(), |acc, l| acc.mul(if *l == Letter::A { a } else { b }))
}

/// `tr(∏ w) - tr(∏ w')` where `w'` swaps the letters at 1-based positions
/// `i < j`, which must differ.
pub fn word_trace_difference<F: Scalar>(
    w: &[Letter],
    swap: (usize, usize),
    a: &BlockMatrix2<F>,
    b: &BlockMatrix2<F>,
) -> Result<F> {
    let (i, j) = swap;
    if i == 0 || i >= j || j > w.len() {
        return Err(Error::Domain(format!("swap positions ({i}, {j}) invalid for a word of length {}", w.len())));
    }
    if w[i - 1] == w[j - 1] {
        return Err(Error::Domain(format!("letters at positions {i} and {j} are equal")));
    }
    let mut w2 = w.to_vec();
    w2.swap(i - 1, j - 1);
    Ok(word_product(w, a, b).trace() - &word_product(&w2, a, b).trace())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat, Rational};

    fn bm(v: [[i64; 2]; 2]) -> BlockMatrix2<Rational> {
        BlockMatrix2::new(v.map(|r| r.map(int)))
    }

    #[test]
    fn identical_and_commuting_pairs_vanish() {
        let a = bm([[1, 2], [3, 4]]);
        assert!(trace_difference(&a, &a).is_zero());
        let b = a.mul(&a).sub(&BlockMatrix2::scalar(int(3)));
        assert!(trace_difference(&a, &b).is_zero());
    }

    #[test]
    fn word_difference_matches_abab() {
        let a = bm([[1, 2], [0, 1]]);
        let b = bm([[1, 0], [5, 2]]);
        let w = Letter::parse_word("ABAB").unwrap();
        assert_eq!(word_trace_difference(&w, (1, 2), &a, &b).unwrap(), trace_difference(&a, &b));
        assert!(!trace_difference(&a, &b).is_zero());
        assert!(word_trace_difference(&Letter::parse_word("AA").unwrap(), (1, 2), &a, &b).is_err());
    }

    #[test]
    fn difference_is_basis_invariant() {
        let a = bm([[1, 2], [0, 1]]);
        let b = bm([[1, 0], [5, 2]]);
        let p = BlockMatrix2::new([[rat(2, 3), int(1)], [int(-1), rat(5, 7)]]);
        let d = trace_difference(&a.conjugate(&p).unwrap(), &b.conjugate(&p).unwrap());
        assert_eq!(d, trace_difference(&a, &b));
        let dt = trace_difference(&b.transpose(), &a.transpose());
        assert_eq!(dt, trace_difference(&a, &b));
    }
}
