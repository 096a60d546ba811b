use std::collections::BTreeMap;

use super::expansion::SchurExpansion;
use super::lr::lr_mult;
use super::partition::Partition;
use super::plethysm::PlethysmTable;
use crate::Result;

/// `sl(3)` normal form of a partition with at most three rows.
fn sl3_normal(p: &Partition) -> Partition {
    p.strip_columns(3).expect("at most three rows")
}

/// Multiplicities of the `sl(3)` irreducibles in `V^{⊗r} ⊗ (V*)^{⊗t}`,
/// keyed by normalized partitions. `V*` is the partition `(1,1)`.
pub fn mixed_sl3_decomp(r: u32, t: u32) -> BTreeMap<Partition, u64> {
    let v = Partition::new(vec![1]).unwrap();
    let dual = Partition::new(vec![1, 1]).unwrap();
    let mut cur: BTreeMap<Partition, u64> = BTreeMap::from([(Partition::empty(), 1)]);
    let factors = std::iter::repeat_n(&v, r as usize).chain(std::iter::repeat_n(&dual, t as usize));
    for f in factors {
        let mut next = BTreeMap::new();
        for (lam, &m) in &cur {
            for (nu, c) in lr_mult(lam, f).terms() {
                if nu.len() <= 3 {
                    *next.entry(sl3_normal(nu)).or_insert(0) += m * c as u64;
                }
            }
        }
        cur = next;
    }
    cur
}

/// Constituents `lambda` of the mixed tensor power whose `sl(3)` symmetric
/// or exterior square has a repeated summand.
pub fn mixed_square_exceptions(r: u32, t: u32) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for lam in mixed_sl3_decomp(r, t).keys() {
        let (sym, ext) = PlethysmTable::new(lam.size()).square_split(lam)?;
        let three = |e: &SchurExpansion| e.filter(|p| p.len() <= 3).max_coeff();
        if three(&sym) > 1 || three(&ext) > 1 {
            out.push(lam.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::dims::sl_dim;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_decompositions() {
        assert_eq!(mixed_sl3_decomp(1, 0), BTreeMap::from([(p("1"), 1)]));
        assert_eq!(mixed_sl3_decomp(1, 1), BTreeMap::from([(p("2,1"), 1), (Partition::empty(), 1)]));
        for (r, t) in [(2, 2), (3, 1), (0, 3)] {
            let total: u64 = mixed_sl3_decomp(r, t).iter().map(|(l, m)| m * sl_dim(l, 3)).sum();
            assert_eq!(total, 3u64.pow(r + t));
        }
    }

    #[test]
    fn only_four_two_in_mixed_square() {
        assert_eq!(mixed_square_exceptions(2, 2).unwrap(), vec![p("4,2")]);
    }
}
