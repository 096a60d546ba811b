use std::fmt;

use super::scalar::Scalar;
use crate::{Error, Result};

/// Row-compressed sparse matrix. Each row keeps its nonzero entries sorted by
/// column; zeros are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct SparseMatrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, F)>>,
}

impl<F: Scalar> SparseMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal((0..n).map(|_| F::one()).collect())
    }

    pub fn diagonal(d: Vec<F>) -> Self {
        let n = d.len();
        let data = d
            .into_iter()
            .enumerate()
            .map(|(i, x)| if x.is_zero() { vec![] } else { vec![(i, x)] })
            .collect();
        Self { rows: n, cols: n, data }
    }

    /// Builds from `(row, col, value)` triplets; repeated positions are summed.
    pub fn from_triplets<I: IntoIterator<Item = (usize, usize, F)>>(
        rows: usize,
        cols: usize,
        triplets: I,
    ) -> Self {
        let mut data: Vec<Vec<(usize, F)>> = vec![Vec::new(); rows];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "index ({r},{c}) out of range {rows}x{cols}");
            data[r].push((c, v));
        }
        for row in data.iter_mut() {
            *row = compress(std::mem::take(row));
        }
        Self { rows, cols, data }
    }

    pub fn from_dense(m: &[Vec<F>]) -> Self {
        let rows = m.len();
        let cols = m.first().map_or(0, |r| r.len());
        let data = m
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(j, x)| (j, x.clone()))
                    .collect()
            })
            .collect();
        Self { rows, cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<F>]) -> Self {
        let cols = columns.len();
        let mut t = Vec::new();
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                if !x.is_zero() {
                    t.push((i, j, x.clone()));
                }
            }
        }
        Self::from_triplets(rows, cols, t)
    }

    pub fn to_dense(&self) -> Vec<Vec<F>> {
        let mut out = vec![vec![F::zero(); self.cols]; self.rows];
        for (i, row) in self.data.iter().enumerate() {
            for (j, x) in row {
                out[i][*j] = x.clone();
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn row(&self, i: usize) -> &[(usize, F)] {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> F {
        match self.data[i].binary_search_by_key(&j, |e| e.0) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => F::zero(),
        }
    }

    /// Entries sorted by `(row, col)`.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &F)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, x)| (i, *j, x)))
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self
                .data
                .iter()
                .enumerate()
                .all(|(i, r)| r.len() == 1 && r[0].0 == i && r[0].1.is_one())
    }

    pub fn is_diagonal(&self) -> bool {
        self.data.iter().enumerate().all(|(i, r)| r.iter().all(|e| e.0 == i))
    }

    /// `Some(c)` if the matrix is `c` times the identity.
    pub fn as_scalar(&self) -> Option<F> {
        if self.rows != self.cols || !self.is_diagonal() {
            return None;
        }
        let c = self.get(0, 0);
        (0..self.rows).all(|i| self.get(i, i) == c).then_some(c)
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<Vec<(usize, F)>> = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, x) in row {
                data[*j].push((i, x.clone()));
            }
        }
        Self { rows: self.cols, cols: self.rows, data }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        let data = self
            .data
            .iter()
            .map(|r| r.iter().map(|(j, x)| (*j, x.clone() * c)).filter(|e| !e.1.is_zero()).collect())
            .collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut k) = (0, 0);
                while i < a.len() || k < b.len() {
                    let ja = a.get(i).map_or(usize::MAX, |e| e.0);
                    let jb = b.get(k).map_or(usize::MAX, |e| e.0);
                    let (j, v) = if ja < jb {
                        i += 1;
                        (ja, a[i - 1].1.clone())
                    } else if jb < ja {
                        k += 1;
                        let v = b[k - 1].1.clone();
                        (jb, if negate { -v } else { v })
                    } else {
                        i += 1;
                        k += 1;
                        let v = if negate {
                            a[i - 1].1.clone() - &b[k - 1].1
                        } else {
                            a[i - 1].1.clone() + &b[k - 1].1
                        };
                        (ja, v)
                    };
                    if !v.is_zero() {
                        out.push((j, v));
                    }
                }
                out
            })
            .collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut acc: Vec<Option<F>> = vec![None; other.cols];
        let mut touched = Vec::new();
        let data = self
            .data
            .iter()
            .map(|row| {
                for (k, x) in row {
                    for (j, y) in &other.data[*k] {
                        let p = x.clone() * y;
                        acc[*j] = Some(match acc[*j].take() {
                            Some(v) => v + &p,
                            None => {
                                touched.push(*j);
                                p
                            }
                        });
                    }
                }
                touched.sort_unstable();
                let out = touched
                    .drain(..)
                    .filter_map(|j| acc[j].take().filter(|v| !v.is_zero()).map(|v| (j, v)))
                    .collect();
                out
            })
            .collect();
        Self { rows: self.rows, cols: other.cols, data }
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .filter(|(j, _)| !v[*j].is_zero())
                    .fold(F::zero(), |acc, (j, x)| acc + &(x.clone() * &v[*j]))
            })
            .collect()
    }

    /// Kronecker product, left factor's index varying slowest.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut data = Vec::with_capacity(rows);
        for ra in &self.data {
            for rb in &other.data {
                let mut row = Vec::with_capacity(ra.len() * rb.len());
                for (ja, x) in ra {
                    for (jb, y) in rb {
                        let v = x.clone() * y;
                        if !v.is_zero() {
                            row.push((ja * other.cols + jb, v));
                        }
                    }
                }
                data.push(row);
            }
        }
        Self { rows, cols, data }
    }

    /// Columns `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                a.iter().cloned().chain(b.iter().map(|(j, x)| (j + self.cols, x.clone()))).collect()
            })
            .collect();
        Self { rows: self.rows, cols: self.cols + other.cols, data }
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Self { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Keeps the listed rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let data = rows.iter().map(|&i| self.data[i].clone()).collect();
        Self { rows: rows.len(), cols: self.cols, data }
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let mut map = vec![usize::MAX; self.cols];
        for (new, &old) in cols.iter().enumerate() {
            map[old] = new;
        }
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut row: Vec<(usize, F)> = r
                    .iter()
                    .filter(|(j, _)| map[*j] != usize::MAX)
                    .map(|(j, x)| (map[*j], x.clone()))
                    .collect();
                row.sort_by_key(|e| e.0);
                row
            })
            .collect();
        Self { rows: self.rows, cols: cols.len(), data }
    }

    /// Applies `f` to every stored entry; results that vanish are dropped.
    pub fn try_map<G: Scalar, E>(&self, mut f: impl FnMut(&F) -> std::result::Result<G, E>) -> std::result::Result<SparseMatrix<G>, E> {
        let mut data = Vec::with_capacity(self.rows);
        for r in &self.data {
            let mut row = Vec::with_capacity(r.len());
            for (j, x) in r {
                let y = f(x)?;
                if !y.is_zero() {
                    row.push((*j, y));
                }
            }
            data.push(row);
        }
        Ok(SparseMatrix { rows: self.rows, cols: self.cols, data })
    }

    /// `self * other - other * self`
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn check_square(&self, what: &str) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::Domain(format!("{what}: expected square matrix, got {}x{}", self.rows, self.cols)));
        }
        Ok(())
    }
}

fn compress<F: Scalar>(mut row: Vec<(usize, F)>) -> Vec<(usize, F)> {
    row.sort_by_key(|e| e.0);
    let mut out: Vec<(usize, F)> = Vec::with_capacity(row.len());
    for (j, v) in row {
        match out.last_mut() {
            Some(last) if last.0 == j => {
                let x = std::mem::replace(&mut last.1, F::zero());
                last.1 = x + &v;
            }
            _ => out.push((j, v)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

/// Sparse triplet text: a header line `rows cols nnz`, then one
/// `row col value` line per entry, sorted by `(row, col)`.
impl<F: Scalar> fmt::Display for SparseMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.rows, self.cols, self.nnz())?;
        for (i, j, x) in self.triplets() {
            writeln!(f, "{i} {j} {x}")?;
        }
        Ok(())
    }
}

impl<F: Scalar> SparseMatrix<F> {
    pub fn parse_text(s: &str) -> Result<Self> {
        let mut lines = s.lines();
        let bad = |m: &str| Error::Parse(format!("sparse matrix: {m}"));
        let header = lines.next().ok_or_else(|| bad("missing header"))?;
        let h: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad("bad header")))
            .collect::<Result<_>>()?;
        let [rows, cols, nnz] = h[..] else { return Err(bad("bad header")) };
        let mut t = Vec::with_capacity(nnz);
        let mut last: Option<(usize, usize)> = None;
        for line in lines.take(nnz) {
            let mut it = line.splitn(3, ' ');
            let i: usize = it.next().and_then(|x| x.parse().ok()).ok_or_else(|| bad("bad row"))?;
            let j: usize = it.next().and_then(|x| x.parse().ok()).ok_or_else(|| bad("bad col"))?;
            let v = F::parse_text(it.next().ok_or_else(|| bad("missing value"))?)?;
            if i >= rows || j >= cols || v.is_zero() || last.is_some_and(|l| l >= (i, j)) {
                return Err(bad("entries out of range, zero or unsorted"));
            }
            last = Some((i, j));
            t.push((i, j, v));
        }
        if t.len() != nnz {
            return Err(bad("truncated"));
        }
        Ok(Self::from_triplets(rows, cols, t))
    }
}
