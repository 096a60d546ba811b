use log::info;

use crate::arith::{Params, Scalar, SparseMatrix};
use crate::Result;

use super::cupcap::{solve_cup_cap, CupCap};
use super::module::QModule;
use super::rmatrix::{derive_r_ef, derive_r_fe, derive_r_ff, lift_r_matrix, r_ee, Constituents, RMatrix};
use super::split::{full_twist_split, select_summand, InjProj};

/// Highest weights of the three irreducibles in the tower.
pub const M1_WEIGHT: (i32, i32) = (2, 0);
pub const M2_WEIGHT: (i32, i32) = (0, 2);
pub const M_WEIGHT: (i32, i32) = (2, 2);

/// Everything on the fundamental level.
#[derive(Clone, Debug, PartialEq)]
pub struct BaseStage<F> {
    pub e: QModule<F>,
    pub f: QModule<F>,
    pub cupcap: CupCap<F>,
    pub r_ee: RMatrix<F>,
    pub r_ef: RMatrix<F>,
    pub r_fe: RMatrix<F>,
    pub r_ff: RMatrix<F>,
}

/// `M1 = V_(2) ⊂ E⊗E`, `M2 = V_(2,2) ⊂ F⊗F` and their braidings.
#[derive(Clone, Debug, PartialEq)]
pub struct MidStage<F> {
    pub ee: QModule<F>,
    pub ff: QModule<F>,
    pub ee_split: Vec<InjProj<F>>,
    pub ff_split: Vec<InjProj<F>>,
    pub m1_ip: InjProj<F>,
    pub m2_ip: InjProj<F>,
    pub m1: QModule<F>,
    pub m2: QModule<F>,
    pub r_m1m1: RMatrix<F>,
    pub r_m1m2: RMatrix<F>,
    pub r_m2m1: RMatrix<F>,
    pub r_m2m2: RMatrix<F>,
}

/// `M = V_(4,2) ⊂ M1⊗M2`, with `R_MM` and `T_M`.
#[derive(Clone, Debug, PartialEq)]
pub struct TopStage<F> {
    pub m1m2: QModule<F>,
    pub m1m2_split: Vec<InjProj<F>>,
    pub m_ip: InjProj<F>,
    pub m: QModule<F>,
    pub r_mm: RMatrix<F>,
    pub t_m: SparseMatrix<F>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Tower<F> {
    pub base: BaseStage<F>,
    pub mid: MidStage<F>,
    pub top: TopStage<F>,
}

pub fn base_stage<F: Scalar>(params: &Params<F>) -> Result<BaseStage<F>> {
    let e = QModule::fundamental(params);
    let f = e.dual(params)?;
    let cupcap = solve_cup_cap(&e, &f)?;
    let r_ee = RMatrix::new("E", "E", (3, 3), r_ee(params))?;
    let r_ef = derive_r_ef(&r_ee, &cupcap)?;
    let r_fe = derive_r_fe(&r_ee, &cupcap)?;
    let r_ff = derive_r_ff(&r_fe, &cupcap)?;
    Ok(BaseStage { e, f, cupcap, r_ee, r_ef, r_fe, r_ff })
}

pub fn mid_stage<F: Scalar>(base: &BaseStage<F>) -> Result<MidStage<F>> {
    let ee = base.e.tensor(&base.e)?;
    let ff = base.f.tensor(&base.f)?;
    let twist_ee = base.r_ee.matrix.mul(&base.r_ee.matrix);
    let twist_ff = base.r_ff.matrix.mul(&base.r_ff.matrix);
    let ee_split = full_twist_split(&ee, &twist_ee)?;
    let ff_split = full_twist_split(&ff, &twist_ff)?;
    let m1_ip = select_summand(ee_split.clone(), M1_WEIGHT)?;
    let m2_ip = select_summand(ff_split.clone(), M2_WEIGHT)?;
    let m1 = m1_ip.submodule(&ee, "M1")?;
    let m2 = m2_ip.submodule(&ff, "M2")?;

    let lift = |v: (&str, &InjProj<F>), w: (&str, &InjProj<F>), r: &RMatrix<F>| {
        lift_r_matrix(v, w, &Constituents { x1y1: r, x1y2: r, x2y1: r, x2y2: r })
    };
    let r_m1m1 = lift(("M1", &m1_ip), ("M1", &m1_ip), &base.r_ee)?;
    let r_m1m2 = lift(("M1", &m1_ip), ("M2", &m2_ip), &base.r_ef)?;
    let r_m2m1 = lift(("M2", &m2_ip), ("M1", &m1_ip), &base.r_fe)?;
    let r_m2m2 = lift(("M2", &m2_ip), ("M2", &m2_ip), &base.r_ff)?;
    Ok(MidStage { ee, ff, ee_split, ff_split, m1_ip, m2_ip, m1, m2, r_m1m1, r_m1m2, r_m2m1, r_m2m2 })
}

pub fn top_stage<F: Scalar>(mid: &MidStage<F>, params: &Params<F>) -> Result<TopStage<F>> {
    let m1m2 = mid.m1.tensor(&mid.m2)?;
    let twist = mid.r_m2m1.matrix.mul(&mid.r_m1m2.matrix);
    let m1m2_split = full_twist_split(&m1m2, &twist)?;
    let m_ip = select_summand(m1m2_split.clone(), M_WEIGHT)?;
    let m = m_ip.submodule(&m1m2, "M")?;
    let r_mm = lift_r_matrix(
        ("M", &m_ip),
        ("M", &m_ip),
        &Constituents { x1y1: &mid.r_m1m1, x1y2: &mid.r_m1m2, x2y1: &mid.r_m2m1, x2y2: &mid.r_m2m2 },
    )?;
    let t_m = m.twist_element(params);
    Ok(TopStage { m1m2, m1m2_split, m_ip, m, r_mm, t_m })
}

impl<F: Scalar> Tower<F> {
    pub fn build(params: &Params<F>) -> Result<Self> {
        let base = base_stage(params)?;
        info!("{} base stage built", F::mode_tag());
        let mid = mid_stage(&base)?;
        info!("{} M1, M2 built", F::mode_tag());
        let top = top_stage(&mid, params)?;
        info!("{} M and R_MM built", F::mode_tag());
        Ok(Self { base, mid, top })
    }

    pub fn m(&self) -> &QModule<F> {
        &self.top.m
    }

    pub fn r_mm(&self) -> &RMatrix<F> {
        &self.top.r_mm
    }

    pub fn t_m(&self) -> &SparseMatrix<F> {
        &self.top.t_m
    }
}
