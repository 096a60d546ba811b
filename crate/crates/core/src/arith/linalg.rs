//! Deterministic exact elimination.
//!
//! Pivots are chosen column by column from the left; within a column the
//! lowest-index available row wins. Identical inputs therefore give
//! identical bases in every field mode.

use super::scalar::Scalar;
use super::sparse::SparseMatrix;
use crate::{Error, Result};

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Scalar>(m: &mut [Vec<F>], cols: usize) -> Vec<usize> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in m[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x = x.clone() * &inv;
                }
            }
        }
        let (before, rest) = m.split_at_mut(r);
        let (pivot_row, after) = rest.split_first_mut().unwrap();
        for row in before.iter_mut().chain(after.iter_mut()) {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..cols {
                if !pivot_row[j].is_zero() {
                    row[j] = row[j].clone() - &(f.clone() * &pivot_row[j]);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Scalar>(m: &SparseMatrix<F>) -> usize {
    let mut d = m.to_dense();
    rref(&mut d, m.cols()).len()
}

/// Basis of the right null space.
///
/// One vector per non-pivot column, in increasing column order, each scaled
/// so that its first nonzero entry is 1.
pub fn null_space<F: Scalar>(m: &SparseMatrix<F>) -> Vec<Vec<F>> {
    let cols = m.cols();
    let mut d = m.to_dense();
    let pivots = rref(&mut d, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for f in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![F::zero(); cols];
        v[f] = F::one();
        for (k, &p) in pivots.iter().enumerate() {
            if !d[k][f].is_zero() {
                v[p] = -d[k][f].clone();
            }
        }
        normalize_first(&mut v);
        basis.push(v);
    }
    basis
}

/// Scales a nonzero vector so its first nonzero entry is 1.
pub fn normalize_first<F: Scalar>(v: &mut [F]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()) {
        if !lead.is_one() {
            let inv = lead.inv().unwrap();
            for x in v.iter_mut() {
                if !x.is_zero() {
                    *x = x.clone() * &inv;
                }
            }
        }
    }
}

pub fn inverse<F: Scalar>(m: &SparseMatrix<F>) -> Result<SparseMatrix<F>> {
    m.check_square("inverse")?;
    let n = m.rows();
    let mut d = m.to_dense();
    for (i, row) in d.iter_mut().enumerate() {
        row.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
    }
    let pivots = rref(&mut d, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::Singular(format!("{n}x{n} matrix is not invertible")));
    }
    let inv: Vec<Vec<F>> = d.into_iter().map(|r| r[n..].to_vec()).collect();
    Ok(SparseMatrix::from_dense(&inv))
}

/// Top block `R` of `(P|Q)^{-1}`, so that `R P = I` and `R Q = 0`.
pub fn partitioned_inverse_projection<F: Scalar>(
    p: &SparseMatrix<F>,
    q: &SparseMatrix<F>,
) -> Result<SparseMatrix<F>> {
    let pq = p.hstack(q);
    if pq.rows() != pq.cols() {
        return Err(Error::Domain(format!(
            "(P|Q) is {}x{}, not square",
            pq.rows(),
            pq.cols()
        )));
    }
    let inv = inverse(&pq)?;
    Ok(inv.select_rows(&(0..p.cols()).collect::<Vec<_>>()))
}

/// Coefficients `c` with `sum_j c_j basis_j = target`, if the target lies in
/// the span. The basis must be linearly independent.
pub fn solve_in_span<F: Scalar>(basis: &[Vec<F>], target: &[F]) -> Option<Vec<F>> {
    let k = basis.len();
    let n = target.len();
    let mut d: Vec<Vec<F>> = (0..n)
        .filter(|&i| !target[i].is_zero() || basis.iter().any(|b| !b[i].is_zero()))
        .map(|i| basis.iter().map(|b| b[i].clone()).chain([target[i].clone()]).collect())
        .collect();
    let pivots = rref(&mut d, k + 1);
    if pivots.contains(&k) || pivots.len() < k {
        return None;
    }
    Some((0..k).map(|j| d[j][k].clone()).collect())
}

/// Dense square matrix product, for the small blocks.
pub fn dense_mul<F: Scalar>(a: &[Vec<F>], b: &[Vec<F>]) -> Vec<Vec<F>> {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![F::zero(); m]; n];
    for i in 0..n {
        for (k, bk) in b.iter().enumerate() {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] = out[i][j].clone() + &(a[i][k].clone() * &bk[j]);
            }
        }
    }
    out
}

pub fn dense_trace<F: Scalar>(a: &[Vec<F>]) -> F {
    a.iter().enumerate().fold(F::zero(), |acc, (i, r)| acc + &r[i])
}
