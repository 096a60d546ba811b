use std::fmt;

use crate::arith::{Params, Scalar, SparseMatrix};
use crate::{Error, Result};

/// Exponents of `a` in the eigenvalues of `(K1, K2)`.
pub type Weight = (i32, i32);

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Generator {
    X1Plus,
    X2Plus,
    X1Minus,
    X2Minus,
    K1,
    K2,
}

impl Generator {
    pub const ALL: [Generator; 6] = [
        Generator::X1Plus,
        Generator::X2Plus,
        Generator::X1Minus,
        Generator::X2Minus,
        Generator::K1,
        Generator::K2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Generator::X1Plus => "X1+",
            Generator::X2Plus => "X2+",
            Generator::X1Minus => "X1-",
            Generator::X2Minus => "X2-",
            Generator::K1 => "K1",
            Generator::K2 => "K2",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|g| g.name() == s)
    }

    /// `X_i^±` as `(i, sign)` with `i` in `{0, 1}`.
    pub fn raising_lowering(self) -> Option<(usize, i32)> {
        match self {
            Generator::X1Plus => Some((0, 1)),
            Generator::X2Plus => Some((1, 1)),
            Generator::X1Minus => Some((0, -1)),
            Generator::X2Minus => Some((1, -1)),
            _ => None,
        }
    }

    pub fn x(i: usize, sign: i32) -> Self {
        match (i, sign > 0) {
            (0, true) => Generator::X1Plus,
            (1, true) => Generator::X2Plus,
            (0, false) => Generator::X1Minus,
            _ => Generator::X2Minus,
        }
    }

    pub fn k(i: usize) -> Self {
        if i == 0 {
            Generator::K1
        } else {
            Generator::K2
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub const CARTAN: [[i32; 2]; 2] = [[2, -1], [-1, 2]];

/// Quantum dimension `[m+1][n+1][m+n+2]/[2]` of the irreducible with
/// highest weight `(m, n)`, where `[k] = (s^k - s^-k)/(s - s^-1)`.
pub fn sl3_qdim(m: u32, n: u32) -> crate::arith::LaurentPoly {
    use crate::arith::LaurentPoly;
    let qint = |k: u32| {
        let k = k as i32;
        LaurentPoly::from_terms((0..k).map(|j| (2 * (k - 1 - 2 * j), crate::arith::rational::int(1))))
    };
    (qint(m + 1) * qint(n + 1) * qint(m + n + 2))
        .exact_div(&qint(2))
        .expect("[2] divides the Weyl numerator")
}

/// A finite-dimensional `sl(3)_q` module.
#[derive(Clone, Debug, PartialEq)]
pub struct QModule<F> {
    pub label: String,
    gens: Vec<SparseMatrix<F>>,
    weights: Vec<Weight>,
}

impl<F: Scalar> QModule<F> {
    /// Assembles a module from its generator matrices (in
    /// [`Generator::ALL`] order) and basis weights.
    pub fn from_parts(label: impl Into<String>, gens: Vec<SparseMatrix<F>>, weights: Vec<Weight>) -> Result<Self> {
        let n = weights.len();
        if gens.len() != 6 || gens.iter().any(|g| g.rows() != n || g.cols() != n) {
            return Err(Error::Construction("generator matrices do not match the basis".into()));
        }
        Ok(Self { label: label.into(), gens, weights })
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn gen(&self, g: Generator) -> &SparseMatrix<F> {
        &self.gens[g as usize]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// `K_i^{-1}`, from the stored diagonal `K_i`.
    pub fn k_inv(&self, i: usize) -> Result<SparseMatrix<F>> {
        let k = self.gen(Generator::k(i));
        if !k.is_diagonal() {
            return Err(Error::Construction(format!("{}: K{} is not diagonal", self.label, i + 1)));
        }
        let d = (0..self.dim())
            .map(|j| k.get(j, j).inv().ok_or_else(|| Error::Singular(format!("{}: K{} not invertible", self.label, i + 1))))
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseMatrix::diagonal(d))
    }

    /// Indices of basis vectors of the given weight.
    pub fn weight_indices(&self, w: Weight) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.weights[i] == w).collect()
    }

    /// Distinct dominant weights present, sorted.
    pub fn dominant_weights(&self) -> Vec<Weight> {
        let mut ws: Vec<Weight> = self.weights.iter().copied().filter(|w| w.0 >= 0 && w.1 >= 0).collect();
        ws.sort_unstable();
        ws.dedup();
        ws
    }

    /// Trace of `K1^i K2^j`.
    pub fn character(&self, params: &Params<F>, i: i32, j: i32) -> F {
        self.weights
            .iter()
            .fold(F::zero(), |acc, w| acc + &params.a_pow(i * w.0 + j * w.1))
    }

    /// The twist element `T = K1^4 K2^4`, diagonal.
    pub fn twist_element(&self, params: &Params<F>) -> SparseMatrix<F> {
        SparseMatrix::diagonal(self.weights.iter().map(|w| params.a_pow(4 * (w.0 + w.1))).collect())
    }

    /// Quantum dimension: trace of the twist element.
    pub fn quantum_dimension(&self, params: &Params<F>) -> F {
        self.character(params, 4, 4)
    }

    pub fn trivial() -> Self {
        let z = SparseMatrix::zeros(1, 1);
        let one = SparseMatrix::identity(1);
        Self {
            label: "I".into(),
            gens: vec![z.clone(), z.clone(), z.clone(), z, one.clone(), one],
            weights: vec![(0, 0)],
        }
    }

    /// The fundamental 3-dimensional module `E`.
    pub fn fundamental(params: &Params<F>) -> Self {
        let unit = |i, j| SparseMatrix::from_triplets(3, 3, [(i, j, F::one())]);
        let weights = vec![(1, 0), (-1, 1), (0, -1)];
        let k1 = SparseMatrix::diagonal(weights.iter().map(|w: &Weight| params.a_pow(w.0)).collect());
        let k2 = SparseMatrix::diagonal(weights.iter().map(|w: &Weight| params.a_pow(w.1)).collect());
        Self {
            label: "E".into(),
            gens: vec![unit(0, 1), unit(1, 2), unit(1, 0), unit(2, 1), k1, k2],
            weights,
        }
    }

    /// Dual module on the dual basis: `Y* = S(Y)^T` with antipode
    /// `S(X_i^±) = -s^{±1} X_i^±`, `S(K_i) = K_i^{-1}`.
    pub fn dual(&self, params: &Params<F>) -> Result<Self> {
        let mut gens = Vec::with_capacity(6);
        for g in Generator::ALL {
            let m = match g.raising_lowering() {
                Some((_, sign)) => {
                    let c = -params.a_pow(2 * sign);
                    self.gen(g).transpose().scale(&c)
                }
                None => {
                    let i = if g == Generator::K1 { 0 } else { 1 };
                    self.k_inv(i)?.transpose()
                }
            };
            gens.push(m);
        }
        let weights = self.weights.iter().map(|w| (-w.0, -w.1)).collect();
        Ok(Self { label: dual_label(&self.label), gens, weights })
    }

    /// Tensor product via `Δ(X_i^±) = X_i^± ⊗ K_i + K_i^{-1} ⊗ X_i^±` and
    /// `Δ(K_i) = K_i ⊗ K_i`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let mut gens = Vec::with_capacity(6);
        let kinv = [self.k_inv(0)?, self.k_inv(1)?];
        for g in Generator::ALL {
            let m = match g.raising_lowering() {
                Some((i, _)) => {
                    let left = self.gen(g).kron(other.gen(Generator::k(i)));
                    let right = kinv[i].kron(other.gen(g));
                    left.add(&right)
                }
                None => self.gen(g).kron(other.gen(g)),
            };
            gens.push(m);
        }
        let weights = self
            .weights
            .iter()
            .flat_map(|a| other.weights.iter().map(move |b| (a.0 + b.0, a.1 + b.1)))
            .collect();
        Ok(Self { label: format!("{}{}", self.label, other.label), gens, weights })
    }

    /// Module on `proj · M · inj`; weights are read off the columns of `inj`.
    pub fn restrict(&self, label: impl Into<String>, inj: &SparseMatrix<F>, proj: &SparseMatrix<F>) -> Result<Self> {
        let label = label.into();
        let gens = Generator::ALL.iter().map(|&g| proj.mul(&self.gen(g).mul(inj))).collect();
        let inj_t = inj.transpose();
        let mut weights = Vec::with_capacity(inj.cols());
        for j in 0..inj.cols() {
            let mut ws = inj_t.row(j).iter().map(|(i, _)| self.weights[*i]);
            let w = ws.next().ok_or_else(|| Error::Construction(format!("{label}: zero inclusion column {j}")))?;
            if ws.any(|x| x != w) {
                return Err(Error::Construction(format!("{label}: inclusion column {j} is not a weight vector")));
            }
            weights.push(w);
        }
        Ok(Self { label, gens, weights })
    }

    /// Replaces one generator matrix; for negative controls in tests.
    pub fn with_generator(mut self, g: Generator, m: SparseMatrix<F>) -> Self {
        self.gens[g as usize] = m;
        self
    }

    /// Maps every generator matrix entrywise into another field.
    pub fn try_map<G: Scalar>(&self, f: impl Fn(&F) -> Option<G>) -> Result<QModule<G>> {
        let gens = self
            .gens
            .iter()
            .map(|m| m.try_map(|x| f(x).ok_or_else(|| Error::Singular("entry has no image".into()))))
            .collect::<Result<Vec<_>>>()?;
        Ok(QModule { label: self.label.clone(), gens, weights: self.weights.clone() })
    }
}

fn dual_label(label: &str) -> String {
    match label {
        "E" => "F".into(),
        "F" => "E".into(),
        l => format!("{l}*"),
    }
}

/// Outcome of [`verify_module_axioms`]; empty `violations` means the module
/// satisfies every relation exactly.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct AxiomReport {
    pub module: String,
    pub checked: Vec<String>,
    pub violations: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the `sl(3)_q` relations in exponentiated form:
/// `K_i X_j^± K_i^{-1} = a^{±a_ij} X_j^±`,
/// `[X_i^+, X_i^-] = (K_i^2 - K_i^{-2})/(s - s^{-1})`, `[X_i^+, X_j^-] = 0`
/// for `i ≠ j`, commuting diagonal `K_i` matching the weights, and the cubic
/// Serre relations.
#[allow(clippy::needless_range_loop)]
pub fn verify_module_axioms<F: Scalar>(m: &QModule<F>, params: &Params<F>) -> AxiomReport {
    let mut report = AxiomReport { module: m.label.clone(), ..Default::default() };
    let mut check = |name: String, ok: bool| {
        if !ok {
            report.violations.push(name.clone());
        }
        report.checked.push(name);
    };
    let n = m.dim();

    let mut kinv = Vec::new();
    for i in 0..2 {
        let k = m.gen(Generator::k(i));
        let expected = SparseMatrix::diagonal(
            m.weights().iter().map(|w| params.a_pow(if i == 0 { w.0 } else { w.1 })).collect(),
        );
        check(format!("K{} diagonal with weight eigenvalues", i + 1), *k == expected);
        kinv.push(SparseMatrix::diagonal(
            m.weights().iter().map(|w| params.a_pow(-(if i == 0 { w.0 } else { w.1 }))).collect(),
        ));
    }
    let k1 = m.gen(Generator::K1);
    let k2 = m.gen(Generator::K2);
    check("K1 K2 = K2 K1".into(), k1.commutator(k2).is_zero());

    for i in 0..2 {
        for j in 0..2 {
            for sign in [1, -1] {
                let x = m.gen(Generator::x(j, sign));
                let lhs = m.gen(Generator::k(i)).mul(x).mul(&kinv[i]);
                let rhs = x.scale(&params.a_pow(sign * CARTAN[i][j]));
                check(
                    format!("K{} X{}{} K{}^-1 = a^({}) X{}{}", i + 1, j + 1, sgn(sign), i + 1, sign * CARTAN[i][j], j + 1, sgn(sign)),
                    lhs == rhs,
                );
            }
        }
    }

    let denom_inv = params.s_minus_inv().inv();
    for i in 0..2 {
        let xp = m.gen(Generator::x(i, 1));
        let xm = m.gen(Generator::x(i, -1));
        let k = m.gen(Generator::k(i));
        let ksq = k.mul(k);
        let kinvsq = kinv[i].mul(&kinv[i]);
        let ok = match &denom_inv {
            Some(d) => xp.commutator(xm) == ksq.sub(&kinvsq).scale(d),
            None => false,
        };
        check(format!("[X{0}+, X{0}-] = (K{0}^2 - K{0}^-2)/(s - s^-1)", i + 1), ok);
    }
    check(
        "[X1+, X2-] = 0".into(),
        m.gen(Generator::X1Plus).commutator(m.gen(Generator::X2Minus)).is_zero(),
    );
    check(
        "[X2+, X1-] = 0".into(),
        m.gen(Generator::X2Plus).commutator(m.gen(Generator::X1Minus)).is_zero(),
    );

    let two = params.qint(2);
    for sign in [1, -1] {
        for (i, j) in [(0, 1), (1, 0)] {
            let xi = m.gen(Generator::x(i, sign));
            let xj = m.gen(Generator::x(j, sign));
            let xi2 = xi.mul(xi);
            let serre = xi2.mul(xj).sub(&xi.mul(xj).mul(xi).scale(&two)).add(&xj.mul(&xi2));
            check(
                format!("Serre (X{}{})^2 X{}{}", i + 1, sgn(sign), j + 1, sgn(sign)),
                serre.is_zero(),
            );
        }
    }
    debug_assert!(n == k1.rows());
    report
}

fn sgn(s: i32) -> &'static str {
    if s > 0 {
        "+"
    } else {
        "-"
    }
}
