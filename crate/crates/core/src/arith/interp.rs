//! Reconstruction of Laurent polynomials from point values.

use super::laurent::LaurentPoly;
use super::rational::Rational;
use super::scalar::{pow_u, Scalar};
use crate::{Error, Result};

/// Coefficients of the unique Laurent polynomial with support in
/// `[min_deg, max_deg]` through the given points, listed from `min_deg`
/// upwards. Points beyond the first `width` must agree with the result.
pub fn interpolate_window<F: Scalar>(points: &[(F, F)], min_deg: i32, max_deg: i32) -> Result<Vec<F>> {
    if max_deg < min_deg {
        return Err(Error::Domain(format!("empty exponent window [{min_deg}, {max_deg}]")));
    }
    let width = (max_deg - min_deg + 1) as usize;
    if points.len() < width {
        return Err(Error::Domain(format!(
            "{} samples cannot determine {width} coefficients",
            points.len()
        )));
    }
    for (i, (x, _)) in points.iter().enumerate() {
        if x.is_zero() {
            return Err(Error::Domain("sample point a = 0".into()));
        }
        if points[..i].iter().any(|(y, _)| y == x) {
            return Err(Error::Domain(format!("duplicate sample point {x}")));
        }
    }
    // values of the ordinary polynomial a^{-min} p(a)
    let shifted: Vec<F> = points
        .iter()
        .map(|(x, y)| y.clone() * &int_pow(x, -min_deg))
        .collect();
    let xs: Vec<F> = points.iter().map(|p| p.0.clone()).collect();

    let mut dd: Vec<F> = shifted[..width].to_vec();
    for level in 1..width {
        for i in (level..width).rev() {
            let num = dd[i].clone() - &dd[i - 1];
            let den = xs[i].clone() - &xs[i - level];
            dd[i] = num.div(&den).expect("distinct points");
        }
    }
    // Newton form to monomial coefficients
    let mut coeffs = vec![F::zero(); width];
    coeffs[0] = dd[width - 1].clone();
    let mut deg = 0;
    for k in (0..width - 1).rev() {
        // coeffs <- coeffs * (x - xs[k]) + dd[k]
        deg += 1;
        for j in (1..=deg).rev() {
            coeffs[j] = coeffs[j - 1].clone() - &(coeffs[j].clone() * &xs[k]);
        }
        coeffs[0] = dd[k].clone() - &(coeffs[0].clone() * &xs[k]);
    }

    for (x, y) in &points[width..] {
        let v = horner(&coeffs, x);
        if v != y.clone() * &int_pow(x, -min_deg) {
            return Err(Error::DegreeBound(format!(
                "samples are inconsistent with exponent window [{min_deg}, {max_deg}]; widen the bounds"
            )));
        }
    }
    Ok(coeffs)
}

fn horner<F: Scalar>(c: &[F], x: &F) -> F {
    c.iter().rev().fold(F::zero(), |acc, k| acc * x + k)
}

fn int_pow<F: Scalar>(x: &F, k: i32) -> F {
    if k >= 0 {
        pow_u(x, k as u32)
    } else {
        pow_u(&x.inv().expect("nonzero point"), k.unsigned_abs())
    }
}

/// Exact Laurent interpolation over the rationals.
pub fn interpolate_laurent(samples: &[(Rational, Rational)], min_deg: i32, max_deg: i32) -> Result<LaurentPoly> {
    let c = interpolate_window(samples, min_deg, max_deg)?;
    Ok(LaurentPoly::from_dense(min_deg, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};
    use crate::arith::{Fp, P1};
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let s = vec![(int(1), int(0)), (int(2), int(3)), (int(3), int(8))];
        assert_eq!(interpolate_laurent(&s, 0, 2).unwrap(), "a^2 - 1".parse().unwrap());

        let s = vec![(int(1), int(1)), (int(2), rat(1, 2))];
        assert_eq!(interpolate_laurent(&s, -1, 0).unwrap(), "a^-1".parse().unwrap());

        // a^4 - 1 at five points
        let p: LaurentPoly = "a^4 - 1".parse().unwrap();
        let s: Vec<_> = [rat(2, 7), rat(3, 7), rat(4, 7), rat(5, 7), rat(6, 7)]
            .into_iter()
            .map(|x| {
                let y = p.eval_rational(&x).unwrap();
                (x, y)
            })
            .collect();
        assert_eq!(interpolate_laurent(&s, 0, 4).unwrap(), p);
    }

    #[test]
    fn errors() {
        let s = vec![(int(1), int(1)), (int(1), int(2))];
        assert!(matches!(interpolate_laurent(&s, 0, 1), Err(Error::Domain(_))));
        // a^3 sampled at 4 points but window [0, 2]
        let s: Vec<_> = (1..=4).map(|k| (int(k), int(k * k * k))).collect();
        assert!(matches!(interpolate_laurent(&s, 0, 2), Err(Error::DegreeBound(_))));
    }

    proptest! {
        #[test]
        fn interpolation_inverts_evaluation(low in -5i32..5, c in prop::collection::vec(-9i64..=9, 1..8), extra in 0usize..3) {
            let p = LaurentPoly::from_ints(low, &c);
            let width = c.len();
            let pts: Vec<_> = (0..width + extra)
                .map(|k| {
                    let x = rat(k as i64 + 2, 7);
                    (x.clone(), p.eval_rational(&x).unwrap())
                })
                .collect();
            prop_assert_eq!(interpolate_laurent(&pts, low, low + width as i32 - 1).unwrap(), p.clone());

            type F = Fp<P1>;
            let pts: Vec<(F, F)> = (0..width + extra)
                .map(|k| {
                    let x = F::from_i64(1000 + 37 * k as i64);
                    let params = crate::arith::Params::new(x).unwrap();
                    (x, p.eval(&params).unwrap())
                })
                .collect();
            let got = interpolate_window(&pts, low, low + width as i32 - 1).unwrap();
            let want: Vec<F> = (0..width).map(|i| F::from_rational(&p.coeff(low + i as i32)).unwrap()).collect();
            prop_assert_eq!(got, want);
        }
    }
}
