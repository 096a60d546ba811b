use crate::arith::{Scalar, SparseMatrix};
use crate::qgroup::RMatrix;
use crate::{Error, Result};

/// A braid word; letter `(i, ±1)` is `σ_i^{±1}`, crossing strands `i` and
/// `i + 1` (1-based). Letters act in the order listed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<(usize, i8)>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<(usize, i8)>) -> Result<Self> {
        for &(i, e) in &letters {
            if i == 0 || i >= strands || (e != 1 && e != -1) {
                return Err(Error::Domain(format!("invalid letter ({i}, {e}) on {strands} strands")));
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        Self { strands, letters: Vec::new() }
    }

    /// `σ2 σ1^{-1} σ2`
    pub fn tangle_a() -> Self {
        Self { strands: 3, letters: vec![(2, 1), (1, -1), (2, 1)] }
    }

    /// `σ2^{-1} σ1 σ2^{-1}`
    pub fn tangle_b() -> Self {
        Self { strands: 3, letters: vec![(2, -1), (1, 1), (2, -1)] }
    }

    /// Every crossing reversed.
    pub fn mirror(&self) -> Self {
        Self { strands: self.strands, letters: self.letters.iter().map(|&(i, e)| (i, -e)).collect() }
    }

    pub fn inverse(&self) -> Self {
        Self { strands: self.strands, letters: self.letters.iter().rev().map(|&(i, e)| (i, -e)).collect() }
    }

    /// Parses `s2 s1^-1 s2` style text.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let body = tok
                .strip_prefix('s')
                .ok_or_else(|| Error::Parse(format!("braid letter '{tok}'")))?;
            let (idx, e) = match body.split_once('^') {
                Some((i, "-1")) => (i, -1),
                Some((i, "1")) => (i, 1),
                None => (body, 1),
                _ => return Err(Error::Parse(format!("braid letter '{tok}'"))),
            };
            let i = idx.parse().map_err(|_| Error::Parse(format!("braid letter '{tok}'")))?;
            letters.push((i, e));
        }
        Self::new(strands, letters)
    }
}

impl std::fmt::Display for BraidWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(i, e)| if e > 0 { format!("s{i}") } else { format!("s{i}^-1") })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// A braid acting on `V^{⊗k}` through an R-matrix of `V ⊗ V`, applied one
/// letter at a time to dense vectors.
#[derive(Clone, Debug)]
pub struct LazyOperator<F> {
    dim: usize,
    word: BraidWord,
    /// Transposes of `R` and `R^{-1}`: row `c` lists the column `c` entries.
    r_cols: SparseMatrix<F>,
    r_inv_cols: SparseMatrix<F>,
}

impl<F: Scalar> LazyOperator<F> {
    pub fn new(word: BraidWord, r: &RMatrix<F>) -> Result<Self> {
        if r.dims.0 != r.dims.1 {
            return Err(Error::Domain("braid action needs R_VV".into()));
        }
        Ok(Self { dim: r.dims.0, word, r_cols: r.matrix.transpose(), r_inv_cols: r.inverse.transpose() })
    }

    pub fn total_dim(&self) -> usize {
        self.dim.pow(self.word.strands as u32)
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    fn apply_letter(&self, v: &[F], pos: usize, sign: i8) -> Vec<F> {
        let d = self.dim;
        let d2 = d * d;
        let right = d.pow((self.word.strands - pos - 2) as u32);
        let left = v.len() / (d2 * right);
        let cols = if sign > 0 { &self.r_cols } else { &self.r_inv_cols };
        let mut out = vec![F::zero(); v.len()];
        for l in 0..left {
            for c in 0..d2 {
                let base = (l * d2 + c) * right;
                for rt in 0..right {
                    let x = &v[base + rt];
                    if x.is_zero() {
                        continue;
                    }
                    for (r, val) in cols.row(c) {
                        let o = &mut out[(l * d2 + r) * right + rt];
                        *o = std::mem::replace(o, F::zero()) + &(val.clone() * x);
                    }
                }
            }
        }
        out
    }

    /// Applies the braid to a vector of `V^{⊗k}`.
    pub fn apply(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.total_dim() {
            return Err(Error::Domain(format!("vector of length {}, expected {}", v.len(), self.total_dim())));
        }
        let mut cur = v.to_vec();
        for &(i, e) in &self.word.letters {
            cur = self.apply_letter(&cur, i - 1, e);
        }
        Ok(cur)
    }
}

/// The endomorphism of `V^{⊗(k-1)}` obtained by closing the last strand of
/// a braid with the twist element: `J(v) = Σ_i f_ii(v)` where
/// `F(v ⊗ T e_i) = Σ_j f_ij(v) ⊗ e_j`.
#[derive(Clone, Debug)]
pub struct ClosedTangle<F> {
    op: LazyOperator<F>,
    twist: Vec<F>,
}

impl<F: Scalar> ClosedTangle<F> {
    /// `twist` must be diagonal.
    pub fn new(word: BraidWord, r: &RMatrix<F>, twist: &SparseMatrix<F>) -> Result<Self> {
        if !twist.is_diagonal() || twist.rows() != r.dims.0 {
            return Err(Error::Domain("twist element must be diagonal on V".into()));
        }
        if word.strands < 2 {
            return Err(Error::Domain("closure needs at least two strands".into()));
        }
        let op = LazyOperator::new(word, r)?;
        let twist = (0..twist.rows()).map(|i| twist.get(i, i)).collect();
        Ok(Self { op, twist })
    }

    pub fn input_dim(&self) -> usize {
        self.op.total_dim() / self.op.dim
    }

    pub fn apply(&self, v: &[F]) -> Result<Vec<F>> {
        let d = self.op.dim;
        if v.len() != self.input_dim() {
            return Err(Error::Domain(format!("vector of length {}, expected {}", v.len(), self.input_dim())));
        }
        let mut out = vec![F::zero(); v.len()];
        for (i, t) in self.twist.iter().enumerate() {
            let mut u = vec![F::zero(); v.len() * d];
            for (j, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    u[j * d + i] = x.clone() * t;
                }
            }
            let fu = self.op.apply(&u)?;
            for (j, o) in out.iter_mut().enumerate() {
                let y = &fu[j * d + i];
                if !y.is_zero() {
                    *o = std::mem::replace(o, F::zero()) + y;
                }
            }
        }
        Ok(out)
    }
}
