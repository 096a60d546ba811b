use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use satmut::arith::rational::{int, Rational};
use satmut::arith::{Fp, Params, Scalar, P2};
use satmut::qgroup::{QModule, RMatrix, Tower};
use satmut::symfunc::{lr_mult, square_split, Partition};
use satmut::tangle::certify::{
    classify_quotient, evaluate_with_tower, exact_traces, expand_q_factors, target_factors, target_polynomial, QuotientForm,
    SampleEvaluation, Strategy, TraceBlackBox, NU_WEIGHT,
};
use satmut::tangle::{
    block_restrict, highest_weight_space, trace_difference, twist_eigensplit, word_trace_difference, BlockMatrix2, BraidWord,
    ClosedTangle, LazyOperator, Letter,
};
use satmut::arith::recon::ReconOptions;
use satmut::qgroup::module::sl3_qdim;

type G = Fp<P2>;

struct Fixture<F: Scalar> {
    params: Params<F>,
    tower: Tower<F>,
    mm: QModule<F>,
    eval: SampleEvaluation<F>,
}

fn build<F: Scalar>(a: F) -> Fixture<F> {
    let params = Params::new(a).unwrap();
    let tower = Tower::build(&params).unwrap();
    let mm = tower.m().tensor(tower.m()).unwrap();
    let eval = evaluate_with_tower(&tower, &params).unwrap();
    Fixture { params, tower, mm, eval }
}

fn fp() -> &'static Fixture<G> {
    static F: OnceLock<Fixture<G>> = OnceLock::new();
    F.get_or_init(|| build(G::from_i64(31337)))
}

fn rational() -> &'static Fixture<Rational> {
    static F: OnceLock<Fixture<Rational>> = OnceLock::new();
    F.get_or_init(|| build(int(3)))
}

fn random_vec(rng: &mut ChaCha8Rng, n: usize) -> Vec<G> {
    (0..n).map(|_| G::from_i64(rng.gen_range(-1000..1000))).collect()
}

fn sl3_partition(w: (i32, i32)) -> Partition {
    Partition::from_trailing_zeros(vec![(w.0 + w.1) as u32, w.1 as u32]).unwrap()
}

#[test]
fn weight_spaces() {
    let f = fp();
    let w = &f.eval.w_nu;
    assert_eq!(w.dim(), 3);
    assert!(w.verify(&f.mm, &f.params));
    let e = &f.tower.base.e;
    let ee = e.tensor(e).unwrap();
    let w20 = highest_weight_space(&ee, (2, 0));
    assert_eq!(w20.dim(), 1);
    assert!(w20.verify(&ee, &f.params));
}

/// Highest weight spaces of `M⊗M` against Littlewood–Richardson and the
/// plethysm split.
#[test]
fn isotypic_counts_match_symmetric_functions() {
    let f = fp();
    let lam = Partition::new(vec![4, 2]).unwrap();
    let three_rows = |p: &Partition| p.len() <= 3;
    let lr = lr_mult(&lam, &lam).filter(three_rows);
    let (sym, ext) = square_split(&lam).unwrap();
    let (sym, ext) = (sym.filter(three_rows), ext.filter(three_rows));
    let norm = |p: &Partition| p.strip_columns(3).unwrap();
    let mult = |e: &satmut::symfunc::SchurExpansion, target: &Partition| -> i64 {
        e.terms().filter(|(p, _)| norm(p) == *target).map(|(_, c)| c).sum()
    };
    let mut total = 0;
    for w in f.mm.dominant_weights() {
        let space = highest_weight_space(&f.mm, w);
        let target = sl3_partition(w);
        assert_eq!(space.dim() as i64, mult(&lr, &target), "weight {w:?}");
        total += space.dim() as i64;
        if space.dim() == 0 {
            continue;
        }
        let split = twist_eigensplit(&space, f.tower.r_mm(), &f.params).unwrap();
        let mut got = vec![split.plus.dim() as i64, split.minus.dim() as i64];
        let mut want = vec![mult(&sym, &target), mult(&ext, &target)];
        got.sort_unstable();
        want.sort_unstable();
        assert_eq!(got, want, "weight {w:?}");
        if space.dim() == 1 {
            assert_eq!(split.minus.dim(), 0);
        }
    }
    assert_eq!(total, lr.terms().map(|(_, c)| c).sum::<i64>());
}

#[test]
fn nu_splits_two_one() {
    let f = fp();
    assert_eq!((f.eval.split.plus.dim(), f.eval.split.minus.dim()), (2, 1));
    let (sym, ext) = square_split(&Partition::new(vec![4, 2]).unwrap()).unwrap();
    let nu = Partition::new(vec![6, 4, 2]).unwrap();
    assert_eq!((sym.coeff(&nu), ext.coeff(&nu)), (2, 1));
    assert!(f.eval.split.plus.verify(&f.mm, &f.params));
}

#[test]
fn closure_of_trivial_braids() {
    let f = fp();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let qdim = f.tower.m().quantum_dimension(&f.params);
    let id = ClosedTangle::new(BraidWord::identity(3), f.tower.r_mm(), f.tower.t_m()).unwrap();
    let cancel = ClosedTangle::new(BraidWord::parse(3, "s2 s2^-1").unwrap(), f.tower.r_mm(), f.tower.t_m()).unwrap();
    for _ in 0..2 {
        let v = random_vec(&mut rng, 729);
        let expect: Vec<G> = v.iter().map(|x| qdim * x).collect();
        assert_eq!(id.apply(&v).unwrap(), expect);
        assert_eq!(cancel.apply(&v).unwrap(), expect);
    }
    let block = block_restrict(|v| id.apply(v), &f.eval.split.plus).unwrap();
    assert_eq!(block, BlockMatrix2::scalar(qdim));
}

#[test]
fn braid_relation_on_three_strands() {
    let f = fp();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let lhs = LazyOperator::new(BraidWord::parse(3, "s1 s2 s1").unwrap(), f.tower.r_mm()).unwrap();
    let rhs = LazyOperator::new(BraidWord::parse(3, "s2 s1 s2").unwrap(), f.tower.r_mm()).unwrap();
    let inv = LazyOperator::new(BraidWord::parse(3, "s1 s2 s1").unwrap().inverse(), f.tower.r_mm()).unwrap();
    let v = random_vec(&mut rng, 19683);
    let l = lhs.apply(&v).unwrap();
    assert_eq!(l, rhs.apply(&v).unwrap());
    assert_eq!(inv.apply(&l).unwrap(), v);
    assert!(lhs.apply(&v[..100]).is_err());
}

#[test]
fn tangle_a_preserves_twist_eigenspaces() {
    let f = fp();
    let ja = ClosedTangle::new(BraidWord::tangle_a(), f.tower.r_mm(), f.tower.t_m()).unwrap();
    let r = &f.tower.r_mm().matrix;
    for w in &f.eval.w_nu.basis {
        assert_eq!(ja.apply(&r.mul_vec(w)).unwrap(), r.mul_vec(&ja.apply(w).unwrap()));
    }
}

#[test]
fn tangle_b_two_ways() {
    assert_eq!(BraidWord::tangle_a().mirror(), BraidWord::tangle_b());
    let f = fp();
    let r = f.tower.r_mm();
    let flipped = RMatrix { source: r.source.clone(), dims: r.dims, matrix: r.inverse.clone(), inverse: r.matrix.clone() };
    let jb = ClosedTangle::new(BraidWord::tangle_a(), &flipped, f.tower.t_m()).unwrap();
    let b = block_restrict(|v| jb.apply(v), &f.eval.split.plus).unwrap();
    assert_eq!(b, f.eval.b_nu);
}

#[test]
fn a_and_b_blocks() {
    {
        let (a, b) = (&fp().eval.a_nu, &fp().eval.b_nu);
        assert!(!a.commutator(b).is_zero());
        assert_eq!(a.mul(b).trace(), b.mul(a).trace());
        let d = trace_difference(a, b);
        assert!(!d.is_zero());
        assert_eq!(trace_difference(b, a), d);
        assert_eq!(trace_difference(&b.transpose(), &a.transpose()), d);
        assert!(trace_difference(a, a).is_zero());
        assert_eq!(word_trace_difference(&Letter::parse_word("ABAB").unwrap(), (1, 2), a, b).unwrap(), d);
        assert!(word_trace_difference(&Letter::parse_word("AA").unwrap(), (1, 2), a, b).is_err());
    }
}

#[test]
fn trace_difference_is_basis_invariant() {
    let f = rational();
    let (a, b) = (&f.eval.a_nu, &f.eval.b_nu);
    let d = trace_difference(a, b);
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let mut done = 0;
    while done < 20 {
        let mut r = || Rational::new(rng.gen_range(-9i64..10).into(), rng.gen_range(1i64..6).into());
        let p = BlockMatrix2::new([[r(), r()], [r(), r()]]);
        let (Some(ap), Some(bp)) = (a.conjugate(&p), b.conjugate(&p)) else { continue };
        assert_eq!(trace_difference(&ap, &bp), d);
        done += 1;
    }
}

/// The reconstructed polynomial agrees with direct evaluations at points
/// never used for reconstruction, including a rational one.
#[test]
fn certified_polynomial_matches_direct_samples() {
    let ex = exact_traces(&TraceBlackBox::default(), Strategy::Pointwise, &ReconOptions::default()).unwrap();
    let qdim = sl3_qdim(2, 2);
    let (form, unit) = classify_quotient(&ex.difference_times_qdim, &target_polynomial(), &qdim);
    assert_eq!(form, QuotientForm::Unit);
    assert!(unit.is_some());

    let r = rational();
    let at3 = ex.difference_times_qdim.eval_rational(&int(3)).unwrap() / qdim.eval_rational(&int(3)).unwrap();
    assert_eq!(r.eval.trace_difference, at3);
    assert_eq!(r.eval.qdim_nu, qdim.eval_rational(&int(3)).unwrap());
    assert_eq!(ex.trace_a.eval_rational(&int(3)).unwrap(), r.eval.a_nu.trace());

    let f = fp();
    assert_eq!(ex.difference_times_qdim.eval(&f.params).unwrap(), f.eval.trace_difference * f.eval.qdim_nu);
    assert_eq!(ex.trace_b.eval(&f.params).unwrap(), f.eval.b_nu.trace());

    // Negative control: one altered exponent in the target.
    let mut factors = target_factors();
    factors[0].1 += 1;
    let perturbed = expand_q_factors(2, &factors);
    assert_eq!(classify_quotient(&ex.difference_times_qdim, &perturbed, &qdim).0, QuotientForm::Fail);
    assert_eq!(NU_WEIGHT, (2, 2));
}

#[test]
fn braid_word_text() {
    let w = BraidWord::parse(3, "s2 s1^-1 s2").unwrap();
    assert_eq!(w, BraidWord::tangle_a());
    assert_eq!(BraidWord::parse(3, &w.to_string()).unwrap(), w);
    assert_eq!(w.inverse(), BraidWord::parse(3, "s2^-1 s1 s2^-1").unwrap());
    assert!(BraidWord::parse(3, "s3").is_err());
    assert!(BraidWord::new(2, vec![(1, 2)]).is_err());
}
