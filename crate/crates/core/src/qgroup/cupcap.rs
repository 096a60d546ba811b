use crate::arith::linalg::{normalize_first, null_space};
use crate::arith::{Scalar, SparseMatrix};
use crate::{Error, Result};

use super::module::{Generator, QModule};

/// Duality maps between `E` and `F = E*`. Cups are `9×1` columns, caps
/// `1×9` rows.
#[derive(Clone, Debug, PartialEq)]
pub struct CupCap<F> {
    pub cup_ef: SparseMatrix<F>,
    pub cup_fe: SparseMatrix<F>,
    pub cap_ef: SparseMatrix<F>,
    pub cap_fe: SparseMatrix<F>,
}

/// Invariant vectors of `m`: common solutions of `X v = 0`, `K v = v`.
fn invariant_vectors<F: Scalar>(m: &QModule<F>) -> Vec<Vec<F>> {
    let n = m.dim();
    let mut stack = SparseMatrix::zeros(0, n);
    for g in Generator::ALL {
        let block = match g {
            Generator::K1 | Generator::K2 => m.gen(g).sub(&SparseMatrix::identity(n)),
            _ => m.gen(g).clone(),
        };
        stack = stack.vstack(&block);
    }
    null_space(&stack)
}

/// Invariant covectors: `c X = 0`, `c K = c`.
fn invariant_covectors<F: Scalar>(m: &QModule<F>) -> Vec<Vec<F>> {
    let n = m.dim();
    let mut stack = SparseMatrix::zeros(0, n);
    for g in Generator::ALL {
        let block = match g {
            Generator::K1 | Generator::K2 => m.gen(g).sub(&SparseMatrix::identity(n)),
            _ => m.gen(g).clone(),
        };
        stack = stack.vstack(&block.transpose());
    }
    null_space(&stack)
}

fn unique<F: Scalar>(mut vs: Vec<Vec<F>>, what: &str) -> Result<Vec<F>> {
    if vs.len() != 1 {
        return Err(Error::Construction(format!("{what}: hom space has dimension {}", vs.len())));
    }
    let mut v = vs.pop().unwrap();
    normalize_first(&mut v);
    Ok(v)
}

/// Solves the intertwining systems for the four duality maps. Cups are
/// normalized to have first nonzero coordinate 1; the caps are then fixed
/// by the zig-zag identities `(cap_EF⊗1_E)(1_E⊗cup_FE) = 1_E` and
/// `(cap_FE⊗1_F)(1_F⊗cup_EF) = 1_F`.
pub fn solve_cup_cap<F: Scalar>(e: &QModule<F>, f: &QModule<F>) -> Result<CupCap<F>> {
    let ef = e.tensor(f)?;
    let fe = f.tensor(e)?;
    let de = e.dim();
    let df = f.dim();
    let cup_ef = SparseMatrix::from_columns(ef.dim(), &[unique(invariant_vectors(&ef), "cup_EF")?]);
    let cup_fe = SparseMatrix::from_columns(fe.dim(), &[unique(invariant_vectors(&fe), "cup_FE")?]);
    let raw_cap_ef = SparseMatrix::from_columns(ef.dim(), &[unique(invariant_covectors(&ef), "cap_EF")?]).transpose();
    let raw_cap_fe = SparseMatrix::from_columns(fe.dim(), &[unique(invariant_covectors(&fe), "cap_FE")?]).transpose();

    let fix = |cap: SparseMatrix<F>, cup: &SparseMatrix<F>, d: usize, what: &str| -> Result<SparseMatrix<F>> {
        let zig = cap
            .kron(&SparseMatrix::identity(d))
            .mul(&SparseMatrix::identity(d).kron(cup));
        let c = zig
            .as_scalar()
            .ok_or_else(|| Error::Construction(format!("{what}: zig-zag is not a scalar")))?;
        let ci = c
            .inv()
            .ok_or_else(|| Error::Construction(format!("{what}: zig-zag vanishes")))?;
        Ok(cap.scale(&ci))
    };
    let cap_ef = fix(raw_cap_ef, &cup_fe, de, "cap_EF")?;
    let cap_fe = fix(raw_cap_fe, &cup_ef, df, "cap_FE")?;
    Ok(CupCap { cup_ef, cup_fe, cap_ef, cap_fe })
}

impl<F: Scalar> CupCap<F> {
    /// `cap_EF ∘ cup_EF`, the value of a closed loop.
    pub fn loop_value_ef(&self) -> F {
        self.cap_ef.mul(&self.cup_ef).get(0, 0)
    }

    pub fn loop_value_fe(&self) -> F {
        self.cap_fe.mul(&self.cup_fe).get(0, 0)
    }

    pub fn try_map<G: Scalar>(&self, f: impl Fn(&F) -> Option<G>) -> Result<CupCap<G>> {
        let g = |x: &F| f(x).ok_or_else(|| Error::Singular("entry has no image".into()));
        Ok(CupCap {
            cup_ef: self.cup_ef.try_map(g)?,
            cup_fe: self.cup_fe.try_map(g)?,
            cap_ef: self.cap_ef.try_map(g)?,
            cap_fe: self.cap_fe.try_map(g)?,
        })
    }
}
