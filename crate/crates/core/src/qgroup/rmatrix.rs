use crate::arith::linalg::inverse;
use crate::arith::{Params, Scalar, SparseMatrix};
use crate::{Error, Result};

use super::cupcap::CupCap;
use super::module::{Generator, QModule};
use super::split::InjProj;

/// A braiding `R_VW : V ⊗ W → W ⊗ V` together with its inverse.
#[derive(Clone, Debug, PartialEq)]
pub struct RMatrix<F> {
    pub source: (String, String),
    pub dims: (usize, usize),
    pub matrix: SparseMatrix<F>,
    pub inverse: SparseMatrix<F>,
}

impl<F: Scalar> RMatrix<F> {
    /// Wraps a matrix, computing its inverse.
    pub fn new(v: &str, w: &str, dims: (usize, usize), matrix: SparseMatrix<F>) -> Result<Self> {
        let n = dims.0 * dims.1;
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::Construction(format!("R_{v}{w} has the wrong shape")));
        }
        let inverse = inverse(&matrix)?;
        Ok(Self { source: (v.into(), w.into()), dims, matrix, inverse })
    }

    pub fn label(&self) -> String {
        format!("R_{}{}", self.source.0, self.source.1)
    }

    /// `R ∘ Y_{V⊗W} = Y_{W⊗V} ∘ R` for every generator.
    pub fn intertwines(&self, vw: &QModule<F>, wv: &QModule<F>) -> bool {
        intertwines(&self.matrix, vw, wv)
    }

    pub fn try_map<G: Scalar>(&self, f: impl Fn(&F) -> Option<G>) -> Result<RMatrix<G>> {
        let g = |x: &F| f(x).ok_or_else(|| Error::Singular("entry has no image".into()));
        Ok(RMatrix {
            source: self.source.clone(),
            dims: self.dims,
            matrix: self.matrix.try_map(g)?,
            inverse: self.inverse.try_map(g)?,
        })
    }
}

/// `h ∘ Y_src = Y_dst ∘ h` for every generator.
pub fn intertwines<F: Scalar>(h: &SparseMatrix<F>, src: &QModule<F>, dst: &QModule<F>) -> bool {
    h.rows() == dst.dim()
        && h.cols() == src.dim()
        && Generator::ALL
            .iter()
            .all(|&g| h.mul(src.gen(g)) == dst.gen(g).mul(h))
}

/// `R_EE` on the basis `e_i ⊗ e_j`: the swap for `i < j`, `s` on the
/// diagonal, and the swap plus `(s - s^{-1})` times the identity term for
/// `i > j`.
///
/// With `Δ(X) = X ⊗ K + K^{-1} ⊗ X` this is the rule that intertwines; the
/// mirror rule with the correction on `i < j` ([`r_ee_flipped`]) intertwines
/// only for the opposite coproduct.
pub fn r_ee<F: Scalar>(params: &Params<F>) -> SparseMatrix<F> {
    r_ee_rule(params, std::cmp::Ordering::Greater)
}

/// The flip-conjugate `P R_EE P` of [`r_ee`].
pub fn r_ee_flipped<F: Scalar>(params: &Params<F>) -> SparseMatrix<F> {
    r_ee_rule(params, std::cmp::Ordering::Less)
}

fn r_ee_rule<F: Scalar>(params: &Params<F>, corrected: std::cmp::Ordering) -> SparseMatrix<F> {
    let s = params.s();
    let z = params.s_minus_inv();
    let mut t = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let col = 3 * i + j;
            let swapped = 3 * j + i;
            if i == j {
                t.push((col, col, s.clone()));
            } else {
                t.push((swapped, col, F::one()));
                if i.cmp(&j) == corrected {
                    t.push((col, col, z.clone()));
                }
            }
        }
    }
    SparseMatrix::from_triplets(9, 9, t)
}

fn id<F: Scalar>(n: usize) -> SparseMatrix<F> {
    SparseMatrix::identity(n)
}

fn kron3<F: Scalar>(a: &SparseMatrix<F>, b: &SparseMatrix<F>, c: &SparseMatrix<F>) -> SparseMatrix<F> {
    a.kron(b).kron(c)
}

/// `R_EF = (1_F⊗1_E⊗cap_EF)(1_F⊗R_EE^{-1}⊗1_F)(cup_FE⊗1_E⊗1_F)`.
pub fn derive_r_ef<F: Scalar>(r_ee: &RMatrix<F>, cc: &CupCap<F>) -> Result<RMatrix<F>> {
    let m = kron3(&id(3), &id(3), &cc.cap_ef)
        .mul(&kron3(&id(3), &r_ee.inverse, &id(3)))
        .mul(&kron3(&cc.cup_fe, &id(3), &id(3)));
    RMatrix::new("E", "F", (3, 3), m)
}

/// `R_FE = (cap_FE⊗1_E⊗1_F)(1_F⊗R_EE^{-1}⊗1_F)(1_F⊗1_E⊗cup_EF)`.
pub fn derive_r_fe<F: Scalar>(r_ee: &RMatrix<F>, cc: &CupCap<F>) -> Result<RMatrix<F>> {
    let m = kron3(&cc.cap_fe, &id(3), &id(3))
        .mul(&kron3(&id(3), &r_ee.inverse, &id(3)))
        .mul(&kron3(&id(3), &id(3), &cc.cup_ef));
    RMatrix::new("F", "E", (3, 3), m)
}

/// `R_FF = (1_F⊗1_F⊗cap_EF)(1_F⊗R_FE^{-1}⊗1_F)(cup_FE⊗1_F⊗1_F)`.
pub fn derive_r_ff<F: Scalar>(r_fe: &RMatrix<F>, cc: &CupCap<F>) -> Result<RMatrix<F>> {
    let m = kron3(&id(3), &id(3), &cc.cap_ef)
        .mul(&kron3(&id(3), &r_fe.inverse, &id(3)))
        .mul(&kron3(&cc.cup_fe, &id(3), &id(3)));
    RMatrix::new("F", "F", (3, 3), m)
}

/// Braidings between the factors of `V ⊂ X1 ⊗ X2` and `W ⊂ Y1 ⊗ Y2`.
pub struct Constituents<'a, F> {
    pub x1y1: &'a RMatrix<F>,
    pub x1y2: &'a RMatrix<F>,
    pub x2y1: &'a RMatrix<F>,
    pub x2y2: &'a RMatrix<F>,
}

/// `R_VW = (proj_W⊗proj_V)(1⊗R_{X1Y2}⊗1)(R_{X1Y1}⊗R_{X2Y2})(1⊗R_{X2Y1}⊗1)(inj_V⊗inj_W)`
/// and the analogous inverse.
pub fn lift_r_matrix<F: Scalar>(
    v: (&str, &InjProj<F>),
    w: (&str, &InjProj<F>),
    rs: &Constituents<'_, F>,
) -> Result<RMatrix<F>> {
    let (x1, x2) = (rs.x1y1.dims.0, rs.x2y1.dims.0);
    let (y1, y2) = (rs.x1y1.dims.1, rs.x1y2.dims.1);
    let (iv, iw) = (v.1, w.1);
    if iv.inj.rows() != x1 * x2 || iw.inj.rows() != y1 * y2 {
        return Err(Error::Construction("constituent dimensions do not match the inclusions".into()));
    }

    let layers = [
        kron3(&id(x1), &rs.x2y1.matrix, &id(y2)),
        rs.x1y1.matrix.kron(&rs.x2y2.matrix),
        kron3(&id(y1), &rs.x1y2.matrix, &id(x2)),
    ];
    let mut z = iv.inj.kron(&iw.inj);
    for l in &layers {
        z = l.mul(&z);
    }
    let forward = iw.proj.kron(&iv.proj).mul(&z);

    let inv_layers = [
        kron3(&id(y1), &rs.x1y2.inverse, &id(x2)),
        rs.x1y1.inverse.kron(&rs.x2y2.inverse),
        kron3(&id(x1), &rs.x2y1.inverse, &id(y2)),
    ];
    let mut z = iw.inj.kron(&iv.inj);
    for l in &inv_layers {
        z = l.mul(&z);
    }
    let inverse = iv.proj.kron(&iw.proj).mul(&z);

    let dims = (iv.inj.cols(), iw.inj.cols());
    let n = dims.0 * dims.1;
    if !forward.mul(&inverse).is_identity() || forward.rows() != n {
        return Err(Error::Construction(format!("lifted R_{}{} is not inverted by its lifted inverse", v.0, w.0)));
    }
    Ok(RMatrix { source: (v.0.into(), w.0.into()), dims, matrix: forward, inverse })
}

/// Checks `(R23⊗1)(1⊗R13)(R12⊗1) = (1⊗R12)(R13⊗1)(1⊗R23)` on `V1⊗V2⊗V3`,
/// where `Rij : Vi⊗Vj → Vj⊗Vi`.
pub fn yang_baxter<F: Scalar>(r12: &RMatrix<F>, r13: &RMatrix<F>, r23: &RMatrix<F>) -> bool {
    let (d1, d2) = r12.dims;
    let d3 = r13.dims.1;
    if r13.dims.0 != d1 || r23.dims != (d2, d3) {
        return false;
    }
    let lhs = r23
        .matrix
        .kron(&id(d1))
        .mul(&id(d2).kron(&r13.matrix))
        .mul(&r12.matrix.kron(&id(d3)));
    let rhs = id(d3)
        .kron(&r12.matrix)
        .mul(&r13.matrix.kron(&id(d2)))
        .mul(&id(d1).kron(&r23.matrix));
    lhs == rhs
}
