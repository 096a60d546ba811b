use std::fmt;

use serde::{Deserialize, Serialize};

use super::expansion::SchurExpansion;
use super::partition::Partition;
use super::plethysm::PlethysmTable;
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SquarePart {
    Sym,
    Ext,
}

impl fmt::Display for SquarePart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SquarePart::Sym => "sym",
            SquarePart::Ext => "ext",
        })
    }
}

/// A constituent `s_nu` of the symmetric or exterior square of `s_mu`
/// occurring more than once.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct ScanEntry {
    pub size: u32,
    pub mu: Partition,
    pub nu: Partition,
    pub part: SquarePart,
    pub multiplicity: i64,
}

impl fmt::Display for ScanEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} mu={} {} nu={} mult={}", self.size, self.mu, self.part, self.nu, self.multiplicity)
    }
}

fn exceptions(size: u32, mu: &Partition, part: SquarePart, e: &SchurExpansion, out: &mut Vec<ScanEntry>) -> Result<()> {
    for (nu, m) in e.terms() {
        if m < 0 {
            return Err(Error::Consistency(format!("negative multiplicity {m} of {nu} in {part} square of {mu}")));
        }
        if m > 1 {
            out.push(ScanEntry { size, mu: mu.clone(), nu: nu.clone(), part, multiplicity: m });
        }
    }
    Ok(())
}

fn scan(max_size: u32, select: impl Fn(u32) -> Vec<Partition>) -> Result<Vec<ScanEntry>> {
    if max_size == 0 {
        return Err(Error::Domain("max size must be at least 1".into()));
    }
    let mut out = Vec::new();
    for n in 1..=max_size {
        let mut table = PlethysmTable::new(n);
        for mu in select(n) {
            let (sym, ext) = table.square_split(&mu)?;
            exceptions(n, &mu, SquarePart::Sym, &sym, &mut out)?;
            exceptions(n, &mu, SquarePart::Ext, &ext, &mut out)?;
        }
    }
    out.sort();
    Ok(out)
}

/// Every `(mu, part, nu)` with `|mu| <= max_size` where `s_nu` occurs more
/// than once in `h2[s_mu]` or `e2[s_mu]`, ordered by `(n, mu, nu)`.
pub fn multiplicity_scan(max_size: u32) -> Result<Vec<ScanEntry>> {
    scan(max_size, Partition::all)
}

/// [`multiplicity_scan`] restricted to hook partitions.
pub fn hook_scan(max_size: u32) -> Result<Vec<ScanEntry>> {
    scan(max_size, Partition::hooks)
}

/// Distinct `mu` among the entries of one square part.
pub fn exceptional_mus(entries: &[ScanEntry], part: SquarePart) -> Vec<Partition> {
    let mut v: Vec<Partition> = entries.iter().filter(|e| e.part == part).map(|e| e.mu.clone()).collect();
    v.sort();
    v.dedup();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nothing_below_six() {
        assert!(multiplicity_scan(5).unwrap().is_empty());
        assert!(hook_scan(6).unwrap().is_empty());
        assert!(multiplicity_scan(0).is_err());
    }
}
