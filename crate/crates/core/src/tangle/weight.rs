use crate::arith::linalg::{null_space, solve_in_span};
use crate::arith::{Params, Scalar, SparseMatrix};
use crate::qgroup::split::highest_weight_vectors;
use crate::qgroup::{QModule, RMatrix, Weight};
use crate::{Error, Result};

/// A subspace spanned by highest weight vectors of one weight.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightSpace<F> {
    pub ambient_dim: usize,
    pub weight: Weight,
    pub basis: Vec<Vec<F>>,
}

impl<F: Scalar> WeightSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Every basis vector is killed by `X1+`, `X2+` and has the stated
    /// `K`-eigenvalues.
    pub fn verify(&self, m: &QModule<F>, params: &Params<F>) -> bool {
        use crate::qgroup::Generator;
        let k = [params.a_pow(self.weight.0), params.a_pow(self.weight.1)];
        self.basis.iter().all(|v| {
            m.gen(Generator::X1Plus).mul_vec(v).iter().all(Scalar::is_zero)
                && m.gen(Generator::X2Plus).mul_vec(v).iter().all(Scalar::is_zero)
                && (0..2).all(|i| {
                    let kv = m.gen(Generator::k(i)).mul_vec(v);
                    kv.iter().zip(v).all(|(x, y)| *x == k[i].clone() * y)
                })
        })
    }
}

/// The highest weight vectors of weight `w` in `m`.
pub fn highest_weight_space<F: Scalar>(m: &QModule<F>, w: Weight) -> WeightSpace<F> {
    WeightSpace { ambient_dim: m.dim(), weight: w, basis: highest_weight_vectors(m, w) }
}

/// Eigenspaces of an R-matrix on a highest weight space.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistSplit<F> {
    /// The larger eigenspace (the `+a^k` one when the dimensions tie).
    pub plus: WeightSpace<F>,
    pub minus: WeightSpace<F>,
    pub plus_eigenvalue: Option<F>,
    pub minus_eigenvalue: Option<F>,
    /// `(sign, k)` with `plus_eigenvalue = sign * a^k`.
    pub plus_monomial: Option<(i8, i32)>,
}

/// Largest `|k|` tried when matching an eigenvalue against `±a^k`.
pub const EIGENVALUE_SCAN: i32 = 512;

fn match_monomial<F: Scalar>(params: &Params<F>, c: &F) -> Option<(i8, i32)> {
    (0..=EIGENVALUE_SCAN).flat_map(|k| [k, -k]).find_map(|k| {
        let m = params.a_pow(k);
        if *c == m {
            Some((1, k))
        } else if *c == -m {
            Some((-1, k))
        } else {
            None
        }
    })
}

fn combine<F: Scalar>(basis: &[Vec<F>], coeffs: &[F]) -> Vec<F> {
    let mut out = vec![F::zero(); basis[0].len()];
    for (b, c) in basis.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b) {
            if !x.is_zero() {
                *o = o.clone() + &(c.clone() * x);
            }
        }
    }
    out
}

/// Matrix of `r` on the span of `w`, column `i` holding the coordinates of
/// `r w_i`.
pub fn restrict_to_span<F: Scalar>(r: &SparseMatrix<F>, w: &[Vec<F>]) -> Result<Vec<Vec<F>>> {
    let k = w.len();
    let mut m = vec![vec![F::zero(); k]; k];
    for (i, v) in w.iter().enumerate() {
        let c = solve_in_span(w, &r.mul_vec(v))
            .ok_or_else(|| Error::Structure("map does not preserve the subspace".into()))?;
        for (j, x) in c.into_iter().enumerate() {
            m[j][i] = x;
        }
    }
    Ok(m)
}

/// Splits `w` into the two eigenspaces of `r`, whose eigenvalues must be
/// `±c` for a monomial `c = a^k`.
pub fn twist_eigensplit<F: Scalar>(w: &WeightSpace<F>, r: &RMatrix<F>, params: &Params<F>) -> Result<TwistSplit<F>> {
    let k = w.dim();
    let empty = WeightSpace { ambient_dim: w.ambient_dim, weight: w.weight, basis: Vec::new() };
    if k == 0 {
        return Ok(TwistSplit {
            plus: empty.clone(),
            minus: empty,
            plus_eigenvalue: None,
            minus_eigenvalue: None,
            plus_monomial: None,
        });
    }
    let rw = restrict_to_span(&r.matrix, &w.basis)?;
    let rw2 = crate::arith::linalg::dense_mul(&rw, &rw);
    let lambda = rw2[0][0].clone();
    for (i, row) in rw2.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            let expected = if i == j { &lambda } else { &F::zero() };
            if x != expected {
                return Err(Error::Structure(format!(
                    "R^2 is not scalar on the highest weight space of weight {:?}",
                    w.weight
                )));
            }
        }
    }
    let e = (0..=EIGENVALUE_SCAN)
        .flat_map(|e| [e, -e])
        .find(|&e| params.a_pow(2 * e) == lambda)
        .ok_or_else(|| Error::Structure(format!("R^2 eigenvalue on weight {:?} is not a power of a^2", w.weight)))?;
    let c = params.a_pow(e);

    let mut parts = Vec::new();
    for ev in [c.clone(), -c] {
        let shifted: Vec<Vec<F>> = rw
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, x)| if i == j { x.clone() - &ev } else { x.clone() })
                    .collect()
            })
            .collect();
        let ns = null_space(&SparseMatrix::from_dense(&shifted));
        let basis: Vec<Vec<F>> = ns.iter().map(|c| combine(&w.basis, c)).collect();
        parts.push((ev, WeightSpace { ambient_dim: w.ambient_dim, weight: w.weight, basis }));
    }
    let total: usize = parts.iter().map(|p| p.1.dim()).sum();
    if total != k {
        return Err(Error::Structure(format!(
            "R eigenspaces on weight {:?} have total dimension {total}, expected {k}",
            w.weight
        )));
    }
    let (pos, neg) = (parts.remove(0), parts.remove(0));
    let (plus, minus) = if neg.1.dim() > pos.1.dim() { (neg, pos) } else { (pos, neg) };
    let ev = |p: &(F, WeightSpace<F>)| if p.1.dim() > 0 { Some(p.0.clone()) } else { None };
    let plus_monomial = if plus.1.dim() > 0 { match_monomial(params, &plus.0) } else { None };
    Ok(TwistSplit {
        plus_eigenvalue: ev(&plus),
        minus_eigenvalue: ev(&minus),
        plus: plus.1,
        minus: minus.1,
        plus_monomial,
    })
}
