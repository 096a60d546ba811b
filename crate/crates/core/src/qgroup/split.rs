use crate::arith::linalg::{null_space, partitioned_inverse_projection};
use crate::arith::{Scalar, SparseMatrix};
use crate::{Error, Result};

use super::module::{Generator, QModule, Weight};

/// Inclusion and projection of a direct summand.
#[derive(Clone, Debug, PartialEq)]
pub struct InjProj<F> {
    pub inj: SparseMatrix<F>,
    pub proj: SparseMatrix<F>,
    /// Scalar by which the full twist acts on the summand.
    pub eigenvalue: F,
    /// Weights of the highest weight vectors in the summand.
    pub highest_weights: Vec<Weight>,
}

impl<F: Scalar> InjProj<F> {
    pub fn sub_dim(&self) -> usize {
        self.inj.cols()
    }

    /// `proj · inj = I` and the idempotent `inj · proj` commutes with the
    /// ambient generators.
    pub fn verify(&self, ambient: &QModule<F>) -> bool {
        if !self.proj.mul(&self.inj).is_identity() {
            return false;
        }
        let e = self.inj.mul(&self.proj);
        Generator::ALL.iter().all(|&g| e.commutator(ambient.gen(g)).is_zero())
    }

    /// The summand as a module in its own right.
    pub fn submodule(&self, ambient: &QModule<F>, label: impl Into<String>) -> Result<QModule<F>> {
        ambient.restrict(label, &self.inj, &self.proj)
    }

    pub fn try_map<G: Scalar>(&self, f: impl Fn(&F) -> Option<G>) -> Result<InjProj<G>> {
        let g = |x: &F| f(x).ok_or_else(|| Error::Singular("entry has no image".into()));
        Ok(InjProj {
            inj: self.inj.try_map(g)?,
            proj: self.proj.try_map(g)?,
            eigenvalue: g(&self.eigenvalue)?,
            highest_weights: self.highest_weights.clone(),
        })
    }
}

/// Highest weight vectors of a given weight: the common kernel of `X1+` and
/// `X2+` on the weight space, embedded in the ambient basis.
pub fn highest_weight_vectors<F: Scalar>(m: &QModule<F>, w: Weight) -> Vec<Vec<F>> {
    let idx = m.weight_indices(w);
    if idx.is_empty() {
        return Vec::new();
    }
    let stack = m
        .gen(Generator::X1Plus)
        .select_cols(&idx)
        .vstack(&m.gen(Generator::X2Plus).select_cols(&idx));
    null_space(&stack)
        .into_iter()
        .map(|c| {
            let mut v = vec![F::zero(); m.dim()];
            for (k, &i) in idx.iter().enumerate() {
                v[i] = c[k].clone();
            }
            v
        })
        .collect()
}

/// Splits `V ⊗ W` into eigenspaces of the full twist `R_WV R_VW`.
///
/// Eigenvalues are read off from highest weight vectors, on which the twist
/// must act by a scalar; each eigenspace is then the null space of
/// `T - λI`. Summands are returned in order of their first highest weight.
pub fn full_twist_split<F: Scalar>(t: &QModule<F>, full_twist: &SparseMatrix<F>) -> Result<Vec<InjProj<F>>> {
    let n = t.dim();
    full_twist.check_square("full twist")?;
    if full_twist.rows() != n {
        return Err(Error::Construction("full twist does not match the module".into()));
    }
    let mut eigen: Vec<(F, Vec<Weight>)> = Vec::new();
    for w in t.dominant_weights() {
        for v in highest_weight_vectors(t, w) {
            let tv = full_twist.mul_vec(&v);
            let j = v.iter().position(|x| !x.is_zero()).unwrap();
            let c = tv[j]
                .div(&v[j])
                .ok_or_else(|| Error::Construction("zero pivot in highest weight vector".into()))?;
            if tv.iter().zip(&v).any(|(x, y)| *x != c.clone() * y) {
                return Err(Error::Construction(format!(
                    "full twist is not scalar on a highest weight vector of weight {w:?}"
                )));
            }
            match eigen.iter_mut().find(|(e, _)| *e == c) {
                Some((_, ws)) => ws.push(w),
                None => eigen.push((c, vec![w])),
            }
        }
    }
    if eigen.is_empty() {
        return Err(Error::Construction("no highest weight vectors found".into()));
    }

    let mut spaces = Vec::with_capacity(eigen.len());
    for (c, _) in &eigen {
        let shifted = full_twist.sub(&SparseMatrix::identity(n).scale(c));
        spaces.push(null_space(&shifted));
    }
    let total: usize = spaces.iter().map(Vec::len).sum();
    if total != n {
        return Err(Error::Construction(format!(
            "full twist eigenspaces have total dimension {total}, expected {n}"
        )));
    }

    let mut out = Vec::with_capacity(eigen.len());
    for (k, (c, ws)) in eigen.into_iter().enumerate() {
        let p = SparseMatrix::from_columns(n, &spaces[k]);
        let others: Vec<Vec<F>> = spaces
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .flat_map(|(_, s)| s.iter().cloned())
            .collect();
        let q = SparseMatrix::from_columns(n, &others);
        let proj = partitioned_inverse_projection(&p, &q)?;
        out.push(InjProj { inj: p, proj, eigenvalue: c, highest_weights: ws });
    }
    Ok(out)
}

/// The summand containing a highest weight vector of weight `w`.
pub fn select_summand<F: Scalar>(parts: Vec<InjProj<F>>, w: Weight) -> Result<InjProj<F>> {
    parts
        .into_iter()
        .find(|p| p.highest_weights.contains(&w))
        .ok_or_else(|| Error::Construction(format!("no summand with highest weight {w:?}")))
}
