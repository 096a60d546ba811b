use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::arith::laurent::unit_monomial_quotient;
use crate::arith::rational::int;
use crate::arith::recon::{reconstruct, BlackBox, ReconOptions};
use crate::arith::{LaurentPoly, Params, RationalFunction, Scalar};
use crate::qgroup::module::sl3_qdim;
use crate::qgroup::tower::M_WEIGHT;
use crate::qgroup::{cached_tower, Cache, Tower};
use crate::{Error, Result};

use super::block::{block_restrict, trace_difference, word_trace_difference, BlockMatrix2, Letter};
use super::braid::{BraidWord, ClosedTangle};
use super::weight::{highest_weight_space, twist_eigensplit, TwistSplit, WeightSpace};

/// Highest weight of `ν = (6,4,2)` in `M ⊗ M`.
pub const NU_WEIGHT: (i32, i32) = (2, 2);

/// Everything computed at one value of `a`.
#[derive(Clone, Debug)]
pub struct SampleEvaluation<F> {
    pub w_nu: WeightSpace<F>,
    pub split: TwistSplit<F>,
    pub a_nu: BlockMatrix2<F>,
    pub b_nu: BlockMatrix2<F>,
    pub trace_difference: F,
    /// Quantum dimension of `V_ν`.
    pub qdim_nu: F,
}

/// Runs the tower and the closed-tangle evaluation at one sample point.
pub fn evaluate_sample<F: Scalar>(params: &Params<F>) -> Result<SampleEvaluation<F>> {
    let tower = Tower::build(params)?;
    evaluate_with_tower(&tower, params)
}

pub fn evaluate_with_tower<F: Scalar>(tower: &Tower<F>, params: &Params<F>) -> Result<SampleEvaluation<F>> {
    let m = tower.m();
    let mm = m.tensor(m)?;
    let w_nu = highest_weight_space(&mm, NU_WEIGHT);
    let split = twist_eigensplit(&w_nu, tower.r_mm(), params)?;
    if split.plus.dim() != 2 {
        return Err(Error::Structure(format!(
            "expected a 2-dimensional eigenspace in W_nu, found dimensions ({}, {})",
            split.plus.dim(),
            split.minus.dim()
        )));
    }
    let ja = ClosedTangle::new(BraidWord::tangle_a(), tower.r_mm(), tower.t_m())?;
    let jb = ClosedTangle::new(BraidWord::tangle_b(), tower.r_mm(), tower.t_m())?;
    let a_nu = block_restrict(|v| ja.apply(v), &split.plus)?;
    let b_nu = block_restrict(|v| jb.apply(v), &split.plus)?;
    let trace_difference = trace_difference(&a_nu, &b_nu);
    // V_ν and M are the same sl(3) irreducible.
    debug_assert_eq!(M_WEIGHT, NU_WEIGHT);
    let qdim_nu = m.quantum_dimension(params);
    Ok(SampleEvaluation { w_nu, split, a_nu, b_nu, trace_difference, qdim_nu })
}

/// The mutant trace difference and its ingredients as functions of `a`.
/// Outputs are `qdim·tr(ABAB - AABB)`, `tr(A)`, `tr(B)` and `qdim·d_w` for
/// each extra word difference `d_w`.
#[derive(Clone, Debug, Default)]
pub struct TraceBlackBox {
    pub words: Vec<(Vec<Letter>, (usize, usize))>,
    /// Tower stages are loaded from and stored in this cache when set.
    pub cache: Option<Cache>,
}

impl BlackBox for TraceBlackBox {
    fn outputs(&self) -> usize {
        3 + self.words.len()
    }

    fn eval<F: Scalar>(&self, params: &Params<F>) -> Result<Vec<F>> {
        let s = match &self.cache {
            Some(c) => evaluate_with_tower(&cached_tower(c, params)?, params)?,
            None => evaluate_sample(params)?,
        };
        let mut out = vec![s.trace_difference.clone() * &s.qdim_nu, s.a_nu.trace(), s.b_nu.trace()];
        for (w, swap) in &self.words {
            out.push(word_trace_difference(w, *swap, &s.a_nu, &s.b_nu)? * &s.qdim_nu);
        }
        Ok(out)
    }
}

/// `(coefficients in q from the constant term up, multiplicity)`.
pub type QFactor = (Vec<i64>, u32);

/// The factorized difference polynomial in `q`, content 2.
pub fn target_factors() -> Vec<QFactor> {
    vec![
        (vec![1, 1, 1, 1, 1, 1, 1], 1),
        (vec![1, 0, 0, 0, 1], 1),
        (vec![1, 0, 0, 1, 0, 0, 1], 2),
        (vec![1, 0, -1, 0, 1], 2),
        (vec![1, 1, 1, 1, 1], 3),
        (vec![1, 0, 1], 4),
        (vec![1, 1, 1], 4),
        (vec![1, -1, 1], 4),
        (vec![1, 1], 10),
        (vec![-1, 1], 18),
    ]
}

/// Expands `content · Π f^e` as a Laurent polynomial in `a`.
pub fn expand_q_factors(content: i64, factors: &[QFactor]) -> LaurentPoly {
    factors.iter().fold(LaurentPoly::constant(int(content)), |acc, (c, e)| {
        let f = LaurentPoly::from_ints(0, c).substitute_power(4);
        acc * f.pow(*e)
    })
}

pub fn target_polynomial() -> LaurentPoly {
    expand_q_factors(2, &target_factors())
}

/// The degree-32 factor relating the second pretzel example to the first.
pub fn stretch_factor() -> LaurentPoly {
    let c: [i64; 33] = [
        2, -4, 0, 7, -12, 7, 16, -33, 10, 40, -57, 3, 72, -66, -27, 83, -35, -48, 61, 2, -46, 20, 21, -19, -6, 14, 1,
        -10, 3, 5, -3, -1, 2,
    ];
    LaurentPoly::from_ints(0, &c).substitute_power(4)
}

/// How the trace difference relates to the target polynomial `P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuotientForm {
    #[serde(rename = "unit")]
    Unit,
    #[serde(rename = "unit×qdim")]
    UnitTimesQdim,
    #[serde(rename = "unit÷qdim")]
    UnitOverQdim,
    #[serde(rename = "FAIL")]
    Fail,
}

impl QuotientForm {
    pub fn as_str(self) -> &'static str {
        match self {
            QuotientForm::Unit => "unit",
            QuotientForm::UnitTimesQdim => "unit×qdim",
            QuotientForm::UnitOverQdim => "unit÷qdim",
            QuotientForm::Fail => "FAIL",
        }
    }
}

/// Matches `d_qdim = qdim · difference` against `target`: returns the form
/// and `(sign, exponent of a)` of the unit.
pub fn classify_quotient(d_qdim: &LaurentPoly, target: &LaurentPoly, qdim: &LaurentPoly) -> (QuotientForm, Option<(i8, i32)>) {
    let candidates = [
        (QuotientForm::Unit, target * qdim),
        (QuotientForm::UnitTimesQdim, target * qdim * qdim),
        (QuotientForm::UnitOverQdim, target.clone()),
    ];
    for (form, t) in candidates {
        if let Some(u) = unit_monomial_quotient(d_qdim, &t) {
            return (form, Some(u));
        }
    }
    (QuotientForm::Fail, None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Symbolic,
    Pointwise,
}

impl std::str::FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symbolic" => Ok(Strategy::Symbolic),
            "pointwise" => Ok(Strategy::Pointwise),
            _ => Err(Error::Parse(format!("unknown strategy '{s}'"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    pub strategy: Strategy,
    pub recon: ReconOptions,
    pub target: LaurentPoly,
    /// Used for the symbolic tower only; pointwise towers are cheap.
    pub cache: Option<Cache>,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self { strategy: Strategy::Pointwise, recon: ReconOptions::default(), target: target_polynomial(), cache: None }
    }
}

/// Outcome of [`certify_paper_difference`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificationReport {
    pub strategy: Strategy,
    pub seed: u64,
    pub sample_points_used: usize,
    pub primes: Vec<u64>,
    /// `tr(A_ν B_ν A_ν B_ν - A_ν A_ν B_ν B_ν)`, in `q` when possible.
    pub interpolated_polynomial: String,
    pub qdim_nu: String,
    pub paper_polynomial_expanded: String,
    pub quotient_form: QuotientForm,
    pub monomial_exponent: Option<i32>,
    pub sign: Option<i8>,
    pub trace_a: String,
    pub trace_b: String,
    pub wall_time: f64,
}

impl CertificationReport {
    pub fn passed(&self) -> bool {
        self.quotient_form != QuotientForm::Fail
    }

    /// The report without its timing field, for byte comparisons.
    pub fn deterministic_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().unwrap().remove("wall_time");
        serde_json::to_string_pretty(&v).unwrap()
    }

    pub fn to_text(&self) -> String {
        let unit = match (self.sign, self.monomial_exponent) {
            (Some(s), Some(k)) => format!("{}a^{k}", if s < 0 { "-" } else { "" }),
            _ => "none".into(),
        };
        format!(
            "certification: {}\nstrategy: {:?}\nseed: {}\nsample points: {}\nprimes: {}\nqdim(V_nu): {}\ntrace difference: {}\ntarget: {}\nquotient form: {}\nunit: {unit}\ntr(A_nu): {}\ntr(B_nu): {}\nwall time: {:.2} s\n",
            if self.passed() { "PASS" } else { "FAIL" },
            self.strategy,
            self.seed,
            self.sample_points_used,
            self.primes.iter().map(u64::to_string).collect::<Vec<_>>().join(", "),
            self.qdim_nu,
            self.interpolated_polynomial,
            self.paper_polynomial_expanded,
            self.quotient_form.as_str(),
            self.trace_a,
            self.trace_b,
            self.wall_time,
        )
    }
}

/// Exact values of the black-box outputs together with sampling details.
#[derive(Clone, Debug)]
pub struct ExactTraces {
    /// `qdim · tr(ABAB - AABB)`.
    pub difference_times_qdim: LaurentPoly,
    pub trace_a: RationalFunction,
    pub trace_b: RationalFunction,
    /// `qdim · d_w` per requested word.
    pub words_times_qdim: Vec<RationalFunction>,
    pub samples_used: usize,
    pub primes: Vec<u64>,
}

/// Computes the exact traces with the chosen strategy.
pub fn exact_traces(bb: &TraceBlackBox, strategy: Strategy, recon: &ReconOptions) -> Result<ExactTraces> {
    match strategy {
        Strategy::Pointwise => {
            let r = reconstruct(bb, recon)?;
            let mut it = r.polys.into_iter();
            let d = it.next().unwrap();
            let ta = RationalFunction::from_poly(it.next().unwrap());
            let tb = RationalFunction::from_poly(it.next().unwrap());
            Ok(ExactTraces {
                difference_times_qdim: d,
                trace_a: ta,
                trace_b: tb,
                words_times_qdim: it.map(RationalFunction::from_poly).collect(),
                samples_used: r.samples_used,
                primes: r.primes,
            })
        }
        Strategy::Symbolic => {
            let params = Params::new(RationalFunction::var())?;
            let mut v = bb.eval(&params)?.into_iter();
            let d = v.next().unwrap();
            let d = d
                .as_poly()
                .cloned()
                .ok_or_else(|| Error::Consistency(format!("qdim times the trace difference is not a Laurent polynomial: {d}")))?;
            Ok(ExactTraces {
                difference_times_qdim: d,
                trace_a: v.next().unwrap(),
                trace_b: v.next().unwrap(),
                words_times_qdim: v.collect(),
                samples_used: 1,
                primes: Vec::new(),
            })
        }
    }
}

fn q_text(p: &RationalFunction) -> String {
    p.to_string()
}

/// Computes the trace difference exactly and compares it with the target
/// polynomial up to a unit and an optional factor of `qdim(V_ν)`.
pub fn certify_paper_difference(opts: &CertifyOptions) -> Result<CertificationReport> {
    let start = Instant::now();
    let bb = TraceBlackBox {
        words: Vec::new(),
        cache: if opts.strategy == Strategy::Symbolic { opts.cache.clone() } else { None },
    };
    let ex = exact_traces(&bb, opts.strategy, &opts.recon)?;
    let qdim = sl3_qdim(2, 2);
    let diff = RationalFunction::new(ex.difference_times_qdim.clone(), qdim.clone())?;
    let (form, unit) = classify_quotient(&ex.difference_times_qdim, &opts.target, &qdim);
    Ok(CertificationReport {
        strategy: opts.strategy,
        seed: opts.recon.seed,
        sample_points_used: ex.samples_used,
        primes: ex.primes,
        interpolated_polynomial: q_text(&diff),
        qdim_nu: qdim.to_string(),
        paper_polynomial_expanded: opts.target.to_string(),
        quotient_form: form,
        monomial_exponent: unit.map(|u| u.1),
        sign: unit.map(|u| u.0),
        trace_a: q_text(&ex.trace_a),
        trace_b: q_text(&ex.trace_b),
        wall_time: start.elapsed().as_secs_f64(),
    })
}
