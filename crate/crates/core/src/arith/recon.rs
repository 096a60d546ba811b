//! Recovery of exact Laurent polynomials in `a` from a black box that can
//! be evaluated in any prime field, by interpolation modulo several primes,
//! Chinese remaindering and rational reconstruction.

use std::collections::BTreeMap;

use log::{debug, info};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::crt::{crt_pair, rational_reconstruct};
use super::fp::{Fp, P0, P1, P2, P3, P4, P5};
use super::interp::interpolate_window;
use super::laurent::LaurentPoly;
use super::rational::Rational;
use super::scalar::{Params, Scalar};
use crate::{Error, Result};

/// A function of `a` with several Laurent polynomial outputs.
pub trait BlackBox {
    fn outputs(&self) -> usize;
    fn eval<F: Scalar>(&self, params: &Params<F>) -> Result<Vec<F>>;
}

#[derive(Clone, Debug)]
pub struct ReconOptions {
    pub seed: u64,
    /// Held-out points checked after every interpolation.
    pub validation_points: usize,
    /// Starting half-width of the symmetric exponent window.
    pub initial_half_width: i32,
    pub max_half_width: i32,
    /// Consecutive failing sample points tolerated before giving up.
    pub max_resamples: usize,
}

impl Default for ReconOptions {
    fn default() -> Self {
        Self { seed: 1, validation_points: 8, initial_half_width: 16, max_half_width: 4096, max_resamples: 20 }
    }
}

#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub polys: Vec<LaurentPoly>,
    pub primes: Vec<u64>,
    pub samples_used: usize,
    /// `(prime, a)` for every point the black box was evaluated at.
    pub sample_points: Vec<(u64, u64)>,
}

/// Shape of one output: `p(a) = a^offset g(a^stride)`, with the support of
/// `g` in `[lo, hi]` once known.
#[derive(Clone, Copy, Debug, PartialEq)]
struct Shape {
    stride: i32,
    offset: i32,
    window: Option<(i32, i32)>,
}

/// One output modulo one prime: exponents of `a` with residues.
type ModImage = BTreeMap<i32, u64>;

struct Sampler<'a, B, const P: u64> {
    bb: &'a B,
    rng: ChaCha8Rng,
    max_resamples: usize,
    points: Vec<(Fp<P>, Vec<Fp<P>>)>,
    evaluations: usize,
}

impl<'a, B: BlackBox, const P: u64> Sampler<'a, B, P> {
    fn draw(&mut self) -> Fp<P> {
        Fp::new(self.rng.gen_range(2..P - 1))
    }

    fn eval_at(&mut self, x: Fp<P>) -> Result<Option<Vec<Fp<P>>>> {
        self.evaluations += 1;
        let params = Params::new(x)?;
        match self.bb.eval(&params) {
            Ok(v) => Ok(Some(v)),
            Err(e) if matches!(e, Error::Singular(_) | Error::Construction(_) | Error::Structure(_)) => {
                debug!("sample a = {} mod {P} rejected: {e}", x.value());
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }

    /// Adds a fresh point whose fourth power is new.
    fn add_point(&mut self) -> Result<()> {
        let mut failures = 0;
        loop {
            let x = self.draw();
            let y = x.pow(4);
            if self.points.iter().any(|(p, _)| p.pow(4) == y) {
                continue;
            }
            match self.eval_at(x)? {
                Some(v) => {
                    self.points.push((x, v));
                    return Ok(());
                }
                None => {
                    failures += 1;
                    if failures > self.max_resamples {
                        return Err(Error::Singular(format!(
                            "{failures} consecutive sample points mod {P} failed"
                        )));
                    }
                }
            }
        }
    }

    fn ensure(&mut self, n: usize) -> Result<()> {
        while self.points.len() < n {
            self.add_point()?;
        }
        Ok(())
    }
}

/// Exponent classes mod 4 carrying nonzero terms, from evaluations at
/// `x, ζx, ζ²x, ζ³x`.
fn detect_classes<B: BlackBox, const P: u64>(s: &mut Sampler<'_, B, P>, outputs: usize) -> Result<Vec<[bool; 4]>> {
    let zeta = Fp::<P>::fourth_root_of_unity();
    let mut active = vec![[false; 4]; outputs];
    let mut probes = 0;
    let mut failures = 0;
    while probes < 3 {
        let x = s.draw();
        let mut vals = Vec::with_capacity(4);
        for k in 0..4 {
            match s.eval_at(x * zeta.pow(k))? {
                Some(v) => vals.push(v),
                None => break,
            }
        }
        if vals.len() < 4 {
            failures += 1;
            if failures > s.max_resamples {
                return Err(Error::Singular(format!("class detection mod {P} failed repeatedly")));
            }
            continue;
        }
        probes += 1;
        for (o, act) in active.iter_mut().enumerate() {
            for (r, flag) in act.iter_mut().enumerate() {
                // sum_k ζ^{-rk} p(ζ^k x) = 4 x^r g_r(x^4)
                let mut acc = Fp::<P>::zero();
                for (k, v) in vals.iter().enumerate() {
                    acc = acc + zeta.pow(((4 - r) * k % 4) as u64) * v[o];
                }
                if !acc.is_zero() {
                    *flag = true;
                }
            }
        }
    }
    Ok(active)
}

fn shape_from_classes(active: [bool; 4]) -> Shape {
    let classes: Vec<i32> = (0..4).filter(|&r| active[r as usize]).collect();
    match classes.as_slice() {
        [] => Shape { stride: 4, offset: 0, window: Some((0, -1)) },
        [r] => Shape { stride: 4, offset: *r, window: None },
        _ => Shape { stride: 1, offset: 0, window: None },
    }
}

fn try_window<const P: u64>(
    pts: &[(Fp<P>, Vec<Fp<P>>)],
    out: usize,
    shape: &Shape,
    lo: i32,
    hi: i32,
) -> Result<ModImage> {
    let mapped: Vec<(Fp<P>, Fp<P>)> = pts
        .iter()
        .map(|(x, v)| {
            let xo = int_pow(*x, -shape.offset);
            (x.pow(shape.stride as u64), v[out] * xo)
        })
        .collect();
    let c = interpolate_window(&mapped, lo, hi)?;
    Ok(c.into_iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(j, x)| ((lo + j as i32) * shape.stride + shape.offset, x.value()))
        .collect())
}

fn int_pow<const P: u64>(x: Fp<P>, k: i32) -> Fp<P> {
    let b = if k < 0 { x.inv().expect("nonzero") } else { x };
    b.pow(k.unsigned_abs() as u64)
}

fn support(img: &ModImage, shape: &Shape) -> (i32, i32) {
    match (img.keys().next(), img.keys().next_back()) {
        (Some(l), Some(h)) => ((l - shape.offset) / shape.stride, (h - shape.offset) / shape.stride),
        _ => (0, -1),
    }
}

/// Images of every output modulo `P`. Outputs without a known window are
/// located by growing a symmetric window.
fn modular_images<B: BlackBox, const P: u64>(
    bb: &B,
    opts: &ReconOptions,
    shapes: &mut Option<Vec<Shape>>,
    prime_index: u64,
) -> Result<(Vec<ModImage>, Vec<u64>, usize)> {
    let mut s: Sampler<'_, B, P> = Sampler {
        bb,
        rng: ChaCha8Rng::seed_from_u64(opts.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ prime_index),
        max_resamples: opts.max_resamples,
        points: Vec::new(),
        evaluations: 0,
    };
    let n_out = bb.outputs();
    if shapes.is_none() {
        let classes = detect_classes(&mut s, n_out)?;
        *shapes = Some(classes.into_iter().map(shape_from_classes).collect());
    }
    let shapes_vec = shapes.as_mut().unwrap();
    let v = opts.validation_points;
    let mut images = Vec::with_capacity(n_out);
    for (o, shape) in shapes_vec.iter_mut().enumerate() {
        if let Some((lo, hi)) = shape.window {
            if hi < lo {
                images.push(ModImage::new());
                continue;
            }
            s.ensure((hi - lo + 1) as usize + v)?;
            match try_window(&s.points, o, shape, lo, hi) {
                Ok(img) => {
                    images.push(img);
                    continue;
                }
                Err(Error::DegreeBound(_)) => {
                    info!("output {o}: window [{lo}, {hi}] rejected mod {P}, searching again");
                    shape.window = None;
                }
                Err(e) => return Err(e),
            }
        }
        let mut n = opts.initial_half_width;
        let img = loop {
            s.ensure((2 * n + 1) as usize + v)?;
            match try_window(&s.points, o, shape, -n, n) {
                Ok(img) => break img,
                Err(Error::DegreeBound(_)) if n < opts.max_half_width => {
                    n = ((n * 3 + 1) / 2).min(opts.max_half_width);
                    debug!("output {o}: widening to half-width {n}");
                }
                Err(Error::DegreeBound(m)) => {
                    return Err(Error::DegreeBound(format!(
                        "{m}; the half-width limit {} was reached, raise it",
                        opts.max_half_width
                    )))
                }
                Err(e) => return Err(e),
            }
        };
        shape.window = Some(support(&img, shape));
        info!("output {o}: support {:?} (stride {}, offset {}) mod {P}", shape.window, shape.stride, shape.offset);
        images.push(img);
    }
    let pts = s.points.iter().map(|p| p.0.value()).collect();
    Ok((images, pts, s.evaluations))
}

fn lift(acc: &mut Option<(Vec<BTreeMap<i32, BigInt>>, BigInt)>, images: &[ModImage], p: u64) {
    let pb = BigInt::from(p);
    match acc {
        None => {
            let res = images
                .iter()
                .map(|img| img.iter().map(|(&e, &r)| (e, BigInt::from(r))).collect())
                .collect();
            *acc = Some((res, pb));
        }
        Some((res, m)) => {
            for (cur, img) in res.iter_mut().zip(images) {
                let keys: Vec<i32> = cur.keys().chain(img.keys()).copied().collect();
                for e in keys {
                    let r1 = cur.get(&e).cloned().unwrap_or_default();
                    let r2 = BigInt::from(img.get(&e).copied().unwrap_or(0));
                    cur.insert(e, crt_pair(&r1, m, &r2, &pb));
                }
            }
            *m *= &pb;
        }
    }
}

fn rational_images(acc: &(Vec<BTreeMap<i32, BigInt>>, BigInt)) -> Option<Vec<LaurentPoly>> {
    let (res, m) = acc;
    res.iter()
        .map(|cur| {
            let terms = cur
                .iter()
                .map(|(&e, r)| rational_reconstruct(r, m).map(|c| (e, c)))
                .collect::<Option<Vec<(i32, Rational)>>>()?;
            Some(LaurentPoly::from_terms(terms))
        })
        .collect()
}

macro_rules! with_prime {
    ($idx:expr, $f:ident, $($arg:expr),*) => {
        match $idx {
            0 => $f::<B, P0>($($arg),*),
            1 => $f::<B, P1>($($arg),*),
            2 => $f::<B, P2>($($arg),*),
            3 => $f::<B, P3>($($arg),*),
            4 => $f::<B, P4>($($arg),*),
            _ => $f::<B, P5>($($arg),*),
        }
    };
}

pub const PRIMES: [u64; 6] = [P0, P1, P2, P3, P4, P5];

/// Reconstructs every output of `bb` exactly. Primes are added until the
/// rational reconstruction is unchanged by one more prime.
pub fn reconstruct<B: BlackBox>(bb: &B, opts: &ReconOptions) -> Result<Reconstruction> {
    let mut shapes = None;
    let mut acc = None;
    let mut previous: Option<Vec<LaurentPoly>> = None;
    let mut primes = Vec::new();
    let mut samples_used = 0;
    let mut sample_points = Vec::new();
    for (idx, &p) in PRIMES.iter().enumerate() {
        let (images, pts, evals) = with_prime!(idx, modular_images, bb, opts, &mut shapes, idx as u64)?;
        samples_used += evals;
        sample_points.extend(pts.into_iter().map(|x| (p, x)));
        primes.push(p);
        lift(&mut acc, &images, p);
        let current = rational_images(acc.as_ref().unwrap());
        info!("prime {p}: reconstruction {}", if current.is_some() { "found" } else { "pending" });
        if let (Some(c), Some(prev)) = (&current, &previous) {
            if c == prev {
                return Ok(Reconstruction { polys: c.clone(), primes, samples_used, sample_points });
            }
        }
        previous = current;
    }
    Err(Error::DegreeBound(format!(
        "rational reconstruction did not stabilize over {} primes",
        PRIMES.len()
    )))
}
