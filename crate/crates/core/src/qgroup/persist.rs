//! Text serialization of tower stages.
//!
//! A bundle starts with the line `satmut-bundle 1` and is followed by named
//! sections:
//!
//! ```text
//! [matrix NAME]     sparse triplet text (header `rows cols nnz`, sorted entries)
//! [weights NAME N]  N lines `i j`
//! [scalar NAME]     one line of scalar text
//! [text NAME]       one line
//! ```

use std::collections::HashMap;
use std::fmt::Write;

use crate::arith::{Scalar, SparseMatrix};
use crate::{Error, Result};

use super::cupcap::CupCap;
use super::module::{Generator, QModule, Weight};
use super::rmatrix::RMatrix;
use super::split::InjProj;
use super::tower::{BaseStage, MidStage, TopStage};

const MAGIC: &str = "satmut-bundle 1";

enum Section<F> {
    Matrix(SparseMatrix<F>),
    Weights(Vec<Weight>),
    Scalar(F),
    Text(String),
}

#[derive(Default)]
pub struct BundleWriter {
    out: String,
}

impl BundleWriter {
    pub fn new() -> Self {
        Self { out: format!("{MAGIC}\n") }
    }

    pub fn finish(self) -> String {
        self.out
    }

    pub fn matrix<F: Scalar>(&mut self, name: &str, m: &SparseMatrix<F>) {
        let _ = write!(self.out, "[matrix {name}]\n{m}");
    }

    pub fn weights(&mut self, name: &str, w: &[Weight]) {
        let _ = writeln!(self.out, "[weights {name} {}]", w.len());
        for (i, j) in w {
            let _ = writeln!(self.out, "{i} {j}");
        }
    }

    pub fn scalar<F: Scalar>(&mut self, name: &str, x: &F) {
        let _ = writeln!(self.out, "[scalar {name}]\n{x}");
    }

    pub fn text(&mut self, name: &str, s: &str) {
        let _ = writeln!(self.out, "[text {name}]\n{s}");
    }

    pub fn module<F: Scalar>(&mut self, name: &str, m: &QModule<F>) {
        self.text(&format!("{name}.label"), &m.label);
        self.weights(&format!("{name}.weights"), m.weights());
        for g in Generator::ALL {
            self.matrix(&format!("{name}.{}", g.name()), m.gen(g));
        }
    }

    pub fn r_matrix<F: Scalar>(&mut self, name: &str, r: &RMatrix<F>) {
        self.text(&format!("{name}.source"), &format!("{} {} {} {}", r.source.0, r.source.1, r.dims.0, r.dims.1));
        self.matrix(&format!("{name}.matrix"), &r.matrix);
        self.matrix(&format!("{name}.inverse"), &r.inverse);
    }

    pub fn inj_proj<F: Scalar>(&mut self, name: &str, ip: &InjProj<F>) {
        self.matrix(&format!("{name}.inj"), &ip.inj);
        self.matrix(&format!("{name}.proj"), &ip.proj);
        self.scalar(&format!("{name}.eigenvalue"), &ip.eigenvalue);
        self.weights(&format!("{name}.highest"), &ip.highest_weights);
    }

    pub fn split<F: Scalar>(&mut self, name: &str, parts: &[InjProj<F>]) {
        self.text(&format!("{name}.count"), &parts.len().to_string());
        for (i, p) in parts.iter().enumerate() {
            self.inj_proj(&format!("{name}.{i}"), p);
        }
    }
}

pub struct Bundle<F> {
    entry: String,
    sections: HashMap<String, Section<F>>,
}

impl<F: Scalar> Bundle<F> {
    /// Parses a bundle; `entry` names it in error messages.
    pub fn parse(entry: &str, s: &str) -> Result<Self> {
        let bad = |reason: String| Error::Cache { entry: entry.to_string(), reason };
        let mut lines = s.lines();
        if lines.next() != Some(MAGIC) {
            return Err(bad("missing bundle header".into()));
        }
        let mut sections = HashMap::new();
        while let Some(line) = lines.next() {
            let head = line
                .strip_prefix('[')
                .and_then(|l| l.strip_suffix(']'))
                .ok_or_else(|| bad(format!("expected a section header, found '{line}'")))?;
            let words: Vec<&str> = head.split(' ').collect();
            let (kind, name) = match words[..] {
                [k, n] | [k, n, _] => (k, n.to_string()),
                _ => return Err(bad(format!("bad section header '{line}'"))),
            };
            let section = match kind {
                "matrix" => {
                    let header = lines.next().ok_or_else(|| bad(format!("{name}: missing header")))?;
                    let nnz: usize = header
                        .split(' ')
                        .nth(2)
                        .and_then(|x| x.parse().ok())
                        .ok_or_else(|| bad(format!("{name}: bad header")))?;
                    let mut text = format!("{header}\n");
                    for _ in 0..nnz {
                        text.push_str(lines.next().ok_or_else(|| bad(format!("{name}: truncated")))?);
                        text.push('\n');
                    }
                    Section::Matrix(SparseMatrix::parse_text(&text).map_err(|e| bad(format!("{name}: {e}")))?)
                }
                "weights" => {
                    let n: usize = words.get(2).and_then(|x| x.parse().ok()).ok_or_else(|| bad(format!("{name}: count")))?;
                    let mut w = Vec::with_capacity(n);
                    for _ in 0..n {
                        let l = lines.next().ok_or_else(|| bad(format!("{name}: truncated")))?;
                        let (i, j) = l.split_once(' ').ok_or_else(|| bad(format!("{name}: bad weight")))?;
                        let p = |x: &str| x.parse::<i32>().map_err(|_| bad(format!("{name}: bad weight")));
                        w.push((p(i)?, p(j)?));
                    }
                    Section::Weights(w)
                }
                "scalar" => {
                    let l = lines.next().ok_or_else(|| bad(format!("{name}: missing value")))?;
                    Section::Scalar(F::parse_text(l).map_err(|e| bad(format!("{name}: {e}")))?)
                }
                "text" => Section::Text(lines.next().ok_or_else(|| bad(format!("{name}: missing text")))?.to_string()),
                _ => return Err(bad(format!("unknown section kind '{kind}'"))),
            };
            sections.insert(name, section);
        }
        Ok(Self { entry: entry.to_string(), sections })
    }

    fn missing(&self, name: &str) -> Error {
        Error::Cache { entry: self.entry.clone(), reason: format!("missing or mistyped section {name}") }
    }

    pub fn matrix(&self, name: &str) -> Result<SparseMatrix<F>> {
        match self.sections.get(name) {
            Some(Section::Matrix(m)) => Ok(m.clone()),
            _ => Err(self.missing(name)),
        }
    }

    pub fn weights(&self, name: &str) -> Result<Vec<Weight>> {
        match self.sections.get(name) {
            Some(Section::Weights(w)) => Ok(w.clone()),
            _ => Err(self.missing(name)),
        }
    }

    pub fn scalar(&self, name: &str) -> Result<F> {
        match self.sections.get(name) {
            Some(Section::Scalar(x)) => Ok(x.clone()),
            _ => Err(self.missing(name)),
        }
    }

    pub fn text(&self, name: &str) -> Result<String> {
        match self.sections.get(name) {
            Some(Section::Text(t)) => Ok(t.clone()),
            _ => Err(self.missing(name)),
        }
    }

    pub fn module(&self, name: &str) -> Result<QModule<F>> {
        let gens = Generator::ALL
            .iter()
            .map(|g| self.matrix(&format!("{name}.{}", g.name())))
            .collect::<Result<Vec<_>>>()?;
        QModule::from_parts(self.text(&format!("{name}.label"))?, gens, self.weights(&format!("{name}.weights"))?)
    }

    pub fn r_matrix(&self, name: &str) -> Result<RMatrix<F>> {
        let src = self.text(&format!("{name}.source"))?;
        let f: Vec<&str> = src.split(' ').collect();
        let [v, w, d0, d1] = f[..] else { return Err(self.missing(&format!("{name}.source"))) };
        let dim = |x: &str| x.parse::<usize>().map_err(|_| self.missing(&format!("{name}.source")));
        Ok(RMatrix {
            source: (v.to_string(), w.to_string()),
            dims: (dim(d0)?, dim(d1)?),
            matrix: self.matrix(&format!("{name}.matrix"))?,
            inverse: self.matrix(&format!("{name}.inverse"))?,
        })
    }

    pub fn inj_proj(&self, name: &str) -> Result<InjProj<F>> {
        Ok(InjProj {
            inj: self.matrix(&format!("{name}.inj"))?,
            proj: self.matrix(&format!("{name}.proj"))?,
            eigenvalue: self.scalar(&format!("{name}.eigenvalue"))?,
            highest_weights: self.weights(&format!("{name}.highest"))?,
        })
    }

    pub fn split(&self, name: &str) -> Result<Vec<InjProj<F>>> {
        let n: usize = self.text(&format!("{name}.count"))?.parse().map_err(|_| self.missing(&format!("{name}.count")))?;
        (0..n).map(|i| self.inj_proj(&format!("{name}.{i}"))).collect()
    }
}

/// Conversion of a tower stage to and from a bundle.
pub trait Persist: Sized {
    type Field: Scalar;
    fn write(&self, w: &mut BundleWriter);
    fn read(b: &Bundle<Self::Field>) -> Result<Self>;

    fn to_text(&self) -> String {
        let mut w = BundleWriter::new();
        self.write(&mut w);
        w.finish()
    }

    fn from_text(entry: &str, s: &str) -> Result<Self> {
        Self::read(&Bundle::parse(entry, s)?)
    }
}

impl<F: Scalar> Persist for BaseStage<F> {
    type Field = F;

    fn write(&self, w: &mut BundleWriter) {
        w.module("e", &self.e);
        w.module("f", &self.f);
        w.matrix("cup_ef", &self.cupcap.cup_ef);
        w.matrix("cup_fe", &self.cupcap.cup_fe);
        w.matrix("cap_ef", &self.cupcap.cap_ef);
        w.matrix("cap_fe", &self.cupcap.cap_fe);
        w.r_matrix("r_ee", &self.r_ee);
        w.r_matrix("r_ef", &self.r_ef);
        w.r_matrix("r_fe", &self.r_fe);
        w.r_matrix("r_ff", &self.r_ff);
    }

    fn read(b: &Bundle<F>) -> Result<Self> {
        Ok(Self {
            e: b.module("e")?,
            f: b.module("f")?,
            cupcap: CupCap {
                cup_ef: b.matrix("cup_ef")?,
                cup_fe: b.matrix("cup_fe")?,
                cap_ef: b.matrix("cap_ef")?,
                cap_fe: b.matrix("cap_fe")?,
            },
            r_ee: b.r_matrix("r_ee")?,
            r_ef: b.r_matrix("r_ef")?,
            r_fe: b.r_matrix("r_fe")?,
            r_ff: b.r_matrix("r_ff")?,
        })
    }
}

impl<F: Scalar> Persist for MidStage<F> {
    type Field = F;

    fn write(&self, w: &mut BundleWriter) {
        w.module("ee", &self.ee);
        w.module("ff", &self.ff);
        w.split("ee_split", &self.ee_split);
        w.split("ff_split", &self.ff_split);
        w.inj_proj("m1_ip", &self.m1_ip);
        w.inj_proj("m2_ip", &self.m2_ip);
        w.module("m1", &self.m1);
        w.module("m2", &self.m2);
        w.r_matrix("r_m1m1", &self.r_m1m1);
        w.r_matrix("r_m1m2", &self.r_m1m2);
        w.r_matrix("r_m2m1", &self.r_m2m1);
        w.r_matrix("r_m2m2", &self.r_m2m2);
    }

    fn read(b: &Bundle<F>) -> Result<Self> {
        Ok(Self {
            ee: b.module("ee")?,
            ff: b.module("ff")?,
            ee_split: b.split("ee_split")?,
            ff_split: b.split("ff_split")?,
            m1_ip: b.inj_proj("m1_ip")?,
            m2_ip: b.inj_proj("m2_ip")?,
            m1: b.module("m1")?,
            m2: b.module("m2")?,
            r_m1m1: b.r_matrix("r_m1m1")?,
            r_m1m2: b.r_matrix("r_m1m2")?,
            r_m2m1: b.r_matrix("r_m2m1")?,
            r_m2m2: b.r_matrix("r_m2m2")?,
        })
    }
}

impl<F: Scalar> Persist for TopStage<F> {
    type Field = F;

    fn write(&self, w: &mut BundleWriter) {
        w.module("m1m2", &self.m1m2);
        w.split("m1m2_split", &self.m1m2_split);
        w.inj_proj("m_ip", &self.m_ip);
        w.module("m", &self.m);
        w.r_matrix("r_mm", &self.r_mm);
        w.matrix("t_m", &self.t_m);
    }

    fn read(b: &Bundle<F>) -> Result<Self> {
        Ok(Self {
            m1m2: b.module("m1m2")?,
            m1m2_split: b.split("m1m2_split")?,
            m_ip: b.inj_proj("m_ip")?,
            m: b.module("m")?,
            r_mm: b.r_matrix("r_mm")?,
            t_m: b.matrix("t_m")?,
        })
    }
}
