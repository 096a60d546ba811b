use num_bigint::BigInt;
use proptest::prelude::*;

use satmut::arith::crt::{crt_pair, rational_reconstruct};
use satmut::arith::fp::to_bigint;
use satmut::arith::interp::interpolate_laurent;
use satmut::arith::laurent::{poly_gcd, unit_monomial_quotient};
use satmut::arith::linalg::{
    dense_mul, dense_trace, inverse, null_space, partitioned_inverse_projection, rank, solve_in_span,
};
use satmut::arith::rational::{format_rational, int, parse_rational, rat};
use satmut::arith::scalar::pow_u;
use satmut::arith::{Fp, LaurentPoly, Params, Rational, RationalFunction, Scalar, SparseMatrix, P0, P1, P2, P3, P4, P5};
use satmut::Error;

fn rm(rows: &[&[i64]]) -> SparseMatrix<Rational> {
    let d: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
    SparseMatrix::from_dense(&d)
}

fn naive_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let (n, k, m) = (a.len(), b.len(), b.first().map_or(0, |r| r.len()));
    (0..n)
        .map(|i| (0..m).map(|j| (0..k).fold(int(0), |acc, l| acc + &a[i][l] * &b[l][j])).collect())
        .collect()
}

#[test]
fn rational_text() {
    assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
    assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
    assert_eq!(format_rational(&rat(10, -4)), "-5/2");
    assert_eq!(format_rational(&int(-3)), "-3");
    for bad in ["", "1/0", "x", "1/2/3", "1.5"] {
        assert!(matches!(parse_rational(bad), Err(Error::Parse(_))), "{bad}");
    }
    let big = "123456789012345678901234567891/2";
    assert_eq!(format_rational(&parse_rational(big).unwrap()), big);
}

#[test]
fn fp_basics() {
    fn check<const P: u64>() {
        let z = Fp::<P>::fourth_root_of_unity();
        assert_eq!(z * z, -Fp::<P>::one());
        assert_eq!(z.pow(4), Fp::one());
        assert_eq!(Fp::<P>::from_i64(-1).signed(), -1);
        assert_eq!(Fp::<P>::from_bigint(&BigInt::from(-5)), Fp::from_i64(-5));
        assert_eq!(to_bigint(Fp::<P>::new(P + 3)), BigInt::from(3));
        assert_eq!(Fp::<P>::from_rational(&rat(1, 3)).unwrap() * Fp::from_i64(3), Fp::one());
        assert!(Fp::<P>::zero().inv().is_none());
        assert!(Fp::<P>::parse_text(&P.to_string()).is_err());
        assert_eq!(Fp::<P>::mode_tag(), format!("fp{P}"));
    }
    check::<P0>();
    check::<P1>();
    check::<P2>();
    check::<P3>();
    check::<P4>();
    check::<P5>();
    // every modulus is 1 mod 4 and they are pairwise distinct primes
    let ps = [P0, P1, P2, P3, P4, P5];
    for (i, p) in ps.iter().enumerate() {
        assert_eq!(p % 4, 1);
        assert!((2..).take_while(|d| d * d <= *p).all(|d| p % d != 0));
        assert!(ps[..i].iter().all(|q| q != p));
    }
}

#[test]
fn params_quantities() {
    let p = Params::new(int(2)).unwrap();
    assert_eq!(p.a_pow(-3), rat(1, 8));
    assert_eq!(p.s(), int(4));
    assert_eq!(p.s_minus_inv(), rat(15, 4));
    for n in -4i32..=6 {
        let s = p.s();
        let direct = (pow_u(&s, n.unsigned_abs()) - pow_u(&p.s_inv(), n.unsigned_abs())) * p.s_minus_inv().inv().unwrap();
        let direct = if n < 0 { -direct } else { direct };
        assert_eq!(p.qint(n), direct, "[{n}]");
    }
    let one = Params::new(int(1)).unwrap();
    assert_eq!(one.qint(3), int(3));
    assert!(matches!(Params::new(int(0)), Err(Error::Singular(_))));

    let sym = Params::new(RationalFunction::var()).unwrap();
    assert_eq!(sym.qint(3).to_string(), "q + 1 + q^-1");
}

#[test]
fn crt_and_reconstruction() {
    let (m1, m2) = (BigInt::from(P0), BigInt::from(P1));
    let x = BigInt::from(987_654_321_012_345u64);
    let r = crt_pair(&(&x % &m1), &m1, &(&x % &m2), &m2);
    assert_eq!(r, x);

    let m = &m1 * &m2;
    for q in [rat(-22, 7), rat(355, 113), int(0), rat(1, 1_000_003)] {
        let r = crt_pair(
            &to_bigint(Fp::<P0>::from_rational(&q).unwrap()),
            &m1,
            &to_bigint(Fp::<P1>::from_rational(&q).unwrap()),
            &m2,
        );
        assert_eq!(rational_reconstruct(&r, &m), Some(q.clone()));
    }
    // beyond the bound nothing consistent is returned
    let big = rat(1 << 40, (1 << 40) + 1);
    let r = to_bigint(Fp::<P0>::from_rational(&big).unwrap());
    assert_ne!(rational_reconstruct(&r, &BigInt::from(P0)), Some(big));
}

#[test]
fn sparse_construction_and_queries() {
    let id = SparseMatrix::<Rational>::identity(3);
    assert!(id.is_identity() && id.is_diagonal());
    assert_eq!(id.as_scalar(), Some(int(1)));
    let d = SparseMatrix::diagonal(vec![int(2), int(0), int(5)]);
    assert_eq!(d.nnz(), 2);
    assert!(d.is_diagonal() && d.as_scalar().is_none());
    assert_eq!(id.scale(&int(7)).as_scalar(), Some(int(7)));

    let t = SparseMatrix::from_triplets(2, 3, vec![(0, 1, int(2)), (0, 1, int(-2)), (1, 2, int(4)), (1, 0, int(1))]);
    assert_eq!(t.nnz(), 2);
    assert_eq!(t.get(1, 2), int(4));
    assert_eq!(t.to_dense(), vec![vec![int(0), int(0), int(0)], vec![int(1), int(0), int(4)]]);
    assert_eq!(t.transpose().get(2, 1), int(4));
    assert_eq!(t.column(2), vec![int(0), int(4)]);
    let c = SparseMatrix::from_columns(2, &[vec![int(1), int(2)], vec![int(0), int(3)]]);
    assert_eq!(c, rm(&[&[1, 0], &[2, 3]]));
    assert!(t.check_square("t").is_err());
    assert!(id.check_square("id").is_ok());
}

#[test]
fn sparse_stacking_and_selection() {
    let a = rm(&[&[1, 2], &[3, 4]]);
    let b = rm(&[&[5], &[6]]);
    let h = a.hstack(&b);
    assert_eq!(h, rm(&[&[1, 2, 5], &[3, 4, 6]]));
    let v = a.vstack(&rm(&[&[7, 8]]));
    assert_eq!(v, rm(&[&[1, 2], &[3, 4], &[7, 8]]));
    assert_eq!(h.select_cols(&[2, 0]), rm(&[&[5, 1], &[6, 3]]));
    assert_eq!(v.select_rows(&[2]), rm(&[&[7, 8]]));
}

#[test]
fn kron_ordering() {
    // the left factor is the slow index
    let a = rm(&[&[1, 2], &[3, 4]]);
    let b = rm(&[&[0, 5], &[6, 7]]);
    let k = a.kron(&b);
    for (i, j) in itertools_pairs(4) {
        assert_eq!(k.get(i, j), a.get(i / 2, j / 2) * b.get(i % 2, j % 2));
    }
}

fn itertools_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

#[test]
fn sparse_text_rejects_bad_input() {
    let ok = "2 2 1\n1 0 3/2\n";
    let m = SparseMatrix::<Rational>::parse_text(ok).unwrap();
    assert_eq!(m.to_string(), ok);
    for bad in ["", "2 2\n", "2 2 1\n", "2 2 1\n2 0 1\n", "2 2 1\n0 0 0\n", "2 2 2\n1 0 1\n0 0 1\n"] {
        assert!(matches!(SparseMatrix::<Rational>::parse_text(bad), Err(Error::Parse(_))), "{bad:?}");
    }
}

#[test]
fn linalg_examples() {
    let m = rm(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    assert_eq!(rank(&m), 2);
    let ker = null_space(&m);
    assert_eq!(ker.len(), 1);
    assert!(m.mul_vec(&ker[0]).iter().all(|x| x.is_zero()));
    assert!(matches!(inverse(&m), Err(Error::Singular(_))));

    let g = rm(&[&[2, 1], &[1, 1]]);
    assert_eq!(inverse(&g).unwrap(), rm(&[&[1, -1], &[-1, 2]]));
    assert_eq!(dense_trace(&g.to_dense()), int(3));

    let p = rm(&[&[1], &[1], &[0]]);
    let q = rm(&[&[0, 1], &[1, 0], &[0, 2]]);
    let r = partitioned_inverse_projection(&p, &q).unwrap();
    assert!(r.mul(&p).is_identity());
    assert!(r.mul(&q).is_zero());
    assert!(partitioned_inverse_projection(&p, &p).is_err());

    let basis = vec![vec![int(1), int(0), int(1)], vec![int(0), int(1), int(1)]];
    assert_eq!(solve_in_span(&basis, &[int(2), int(3), int(5)]), Some(vec![int(2), int(3)]));
    assert_eq!(solve_in_span(&basis, &[int(1), int(1), int(0)]), None);
}

#[test]
fn interpolation_recovers_known_polynomial() {
    let f: LaurentPoly = "3*a^5 - 1/2*a + 7*a^-3".parse().unwrap();
    let samples: Vec<(Rational, Rational)> = (2..=12)
        .map(|k| {
            let x = rat(k, 3);
            let y = f.eval_rational(&x).unwrap();
            (x, y)
        })
        .collect();
    assert_eq!(interpolate_laurent(&samples, -3, 5).unwrap(), f);
    assert!(interpolate_laurent(&samples[..4], -3, 5).is_err());
}

#[test]
fn laurent_and_ratfunc() {
    let p: LaurentPoly = "a^2 - a^-2".parse().unwrap();
    let q: LaurentPoly = "a - a^-1".parse().unwrap();
    assert_eq!(p.exact_div(&q).unwrap(), "a + a^-1".parse().unwrap());
    assert!(q.exact_div(&p).is_none());
    let (g, _) = poly_gcd(&p, &q).unwrap();
    assert_eq!(g, "a^2 - 1".parse().unwrap());
    assert!(poly_gcd(&LaurentPoly::zero(), &LaurentPoly::zero()).is_err());
    assert_eq!(unit_monomial_quotient(&(-q.shift(4)), &q), Some((-1, 4)));
    assert_eq!(unit_monomial_quotient(&p, &q), None);
    assert!(!p.is_in_q() && p.substitute_power(2).is_in_q());
    assert_eq!(q.pow(2), "a^2 - 2 + a^-2".parse().unwrap());

    let f = RationalFunction::new(p.clone(), q.clone()).unwrap();
    assert_eq!(f.as_poly(), Some(&"a + a^-1".parse().unwrap()));
    let g = RationalFunction::new(LaurentPoly::one(), q.clone()).unwrap();
    assert!(g.as_poly().is_none());
    assert_eq!(g.eval_rational(&int(2)), Some(rat(2, 3)));
    assert_eq!(g.eval_rational(&int(1)), None);
    assert!(RationalFunction::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    let back: RationalFunction = g.to_string().parse().unwrap();
    assert_eq!(back, g);
}

fn small_laurent() -> impl Strategy<Value = LaurentPoly> {
    (-3i32..3, prop::collection::vec(-4i64..5, 0..4)).prop_map(|(low, c)| LaurentPoly::from_ints(low, &c))
}

fn small_ratfunc() -> impl Strategy<Value = RationalFunction> {
    (small_laurent(), small_laurent()).prop_filter_map("zero denominator", |(n, d)| RationalFunction::new(n, d).ok())
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| rat(n, d))
}

fn small_fp() -> impl Strategy<Value = Fp<P0>> {
    any::<u64>().prop_map(Fp::new)
}

fn field_axioms<F: Scalar>(x: F, y: F, z: F) {
    assert_eq!(x.clone() + &y, y.clone() + &x);
    assert_eq!(x.clone() * &y, y.clone() * &x);
    assert_eq!((x.clone() + &y) + &z, x.clone() + &(y.clone() + &z));
    assert_eq!((x.clone() * &y) * &z, x.clone() * &(y.clone() * &z));
    assert_eq!((x.clone() + &y) * &z, x.clone() * &z + &(y.clone() * &z));
    assert_eq!(x.clone() - &x, F::zero());
    assert_eq!(x.clone() + &(-x.clone()), F::zero());
    assert_eq!(x.clone() * &F::one(), x);
    if let Some(i) = x.inv() {
        assert!((x.clone() * &i).is_one());
    } else {
        assert!(x.is_zero());
    }
    assert_eq!(F::parse_text(&x.to_string()).unwrap(), x);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_axioms(x in small_rational(), y in small_rational(), z in small_rational()) {
        field_axioms(x, y, z);
    }

    #[test]
    fn fp_field_axioms(x in small_fp(), y in small_fp(), z in small_fp()) {
        field_axioms(x, y, z);
    }

    #[test]
    fn ratfunc_field_axioms(x in small_ratfunc(), y in small_ratfunc(), z in small_ratfunc()) {
        field_axioms(x, y, z);
    }

    #[test]
    fn fp_matches_bigint_arithmetic(a in any::<i64>(), b in any::<i64>()) {
        let m = BigInt::from(P0);
        let (x, y) = (Fp::<P0>::from_i64(a), Fp::<P0>::from_i64(b));
        let prod = (BigInt::from(a) * BigInt::from(b)) % &m;
        prop_assert_eq!(x * y, Fp::from_bigint(&prod));
        prop_assert_eq!(x - y, Fp::from_bigint(&(BigInt::from(a) - BigInt::from(b))));
    }

    #[test]
    fn ratfunc_eval_is_a_homomorphism(f in small_ratfunc(), g in small_ratfunc(), k in 2i64..9) {
        let a0 = rat(k, 5);
        let (Some(fv), Some(gv)) = (f.eval_rational(&a0), g.eval_rational(&a0)) else { return Ok(()) };
        prop_assert_eq!((f.clone() + &g).eval_rational(&a0), Some(fv.clone() + &gv));
        prop_assert_eq!((f * &g).eval_rational(&a0), Some(fv * gv));
    }

    #[test]
    fn laurent_eval_in_fp_agrees_with_rational(f in small_laurent(), k in 2u64..1000) {
        let pf = Params::new(Fp::<P1>::new(k)).unwrap();
        let pr = Params::new(int(k as i64)).unwrap();
        let r = f.eval(&pr).unwrap();
        prop_assert_eq!(f.eval(&pf), Fp::from_rational(&r));
    }

    #[test]
    fn crt_reconstructs_signed_values(x in -(1i64 << 60)..(1i64 << 60)) {
        let (m1, m2) = (BigInt::from(P2), BigInt::from(P3));
        let x = BigInt::from(x);
        let r = crt_pair(&to_bigint(Fp::<P2>::from_bigint(&x)), &m1, &to_bigint(Fp::<P3>::from_bigint(&x)), &m2);
        let m = &m1 * &m2;
        let signed = if &r * 2 > m { r - m } else { r };
        prop_assert_eq!(signed, x);
    }

    #[test]
    fn sparse_ops_match_dense(
        a in prop::collection::vec(prop::collection::vec(-3i64..4, 3), 2),
        b in prop::collection::vec(prop::collection::vec(-3i64..4, 2), 3),
        v in prop::collection::vec(-3i64..4, 3),
    ) {
        let ad: Vec<Vec<Rational>> = a.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        let bd: Vec<Vec<Rational>> = b.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        let (sa, sb) = (SparseMatrix::from_dense(&ad), SparseMatrix::from_dense(&bd));
        prop_assert_eq!(sa.mul(&sb).to_dense(), naive_mul(&ad, &bd));
        prop_assert_eq!(dense_mul(&ad, &bd), naive_mul(&ad, &bd));
        let vv: Vec<Rational> = v.iter().map(|&x| int(x)).collect();
        let col: Vec<Vec<Rational>> = vv.iter().map(|x| vec![x.clone()]).collect();
        let expect: Vec<Rational> = naive_mul(&ad, &col).into_iter().map(|r| r[0].clone()).collect();
        prop_assert_eq!(sa.mul_vec(&vv), expect);
        prop_assert_eq!(sa.mul(&sb).transpose(), sb.transpose().mul(&sa.transpose()));
        prop_assert_eq!(SparseMatrix::<Rational>::parse_text(&sa.to_string()).unwrap(), sa.clone());
        prop_assert!(sa.sub(&sa).is_zero());
        let sq = sa.mul(&sb);
        prop_assert!(sq.commutator(&SparseMatrix::identity(2)).is_zero());
        prop_assert_eq!(dense_trace(&sq.to_dense()), dense_trace(&sb.mul(&sa).to_dense()));
    }

    #[test]
    fn kron_mixed_product(
        a in prop::collection::vec(-2i64..3, 4),
        b in prop::collection::vec(-2i64..3, 4),
        c in prop::collection::vec(-2i64..3, 4),
        d in prop::collection::vec(-2i64..3, 4),
    ) {
        let sq = |x: &Vec<i64>| rm(&[&x[0..2], &x[2..4]]);
        let (a, b, c, d) = (sq(&a), sq(&b), sq(&c), sq(&d));
        prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
        prop_assert_eq!(rank(&a.kron(&b)), rank(&a) * rank(&b));
    }

    #[test]
    fn rank_nullity(rows in prop::collection::vec(prop::collection::vec(-2i64..3, 4), 1..5)) {
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let m = rm(&refs);
        prop_assert_eq!(rank(&m) + null_space(&m).len(), 4);
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }
}

#[test]
fn big_rational_round_trip() {
    let x = Rational::new(BigInt::from(3).pow(80), BigInt::from(2).pow(70));
    assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    assert!(!Scalar::is_zero(&x) && !Scalar::is_one(&x));
}
