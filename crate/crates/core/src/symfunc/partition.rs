use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("parts {parts:?} are not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::Domain(format!("parts {parts:?} contain a zero")));
        }
        Ok(Self(parts))
    }

    /// Drops trailing zeros; the parts must otherwise be decreasing.
    pub fn from_trailing_zeros(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Row `i` (0-based), zero beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// `(a, 1, ..., 1)`; the empty partition is not a hook.
    pub fn is_hook(&self) -> bool {
        !self.0.is_empty() && self.0[1..].iter().all(|&p| p == 1)
    }

    pub fn conjugate(&self) -> Self {
        let n = self.part(0) as usize;
        Self((0..n).map(|j| self.0.iter().filter(|&&p| p as usize > j).count() as u32).collect())
    }

    /// Hook length of the cell in row `i`, column `j` (0-based).
    pub fn hook(&self, i: usize, j: usize) -> u32 {
        let arm = self.0[i] - j as u32 - 1;
        let leg = self.0[i + 1..].iter().filter(|&&p| p as usize > j).count() as u32;
        arm + leg + 1
    }

    /// `(row, column)` of every cell, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
    }

    /// Removes full columns of height `n`: `λ ↦ λ - λ_n` on the first `n`
    /// rows. Requires at most `n` rows.
    pub fn strip_columns(&self, n: usize) -> Result<Self> {
        if self.len() > n {
            return Err(Error::Domain(format!("{self} has more than {n} rows")));
        }
        let c = self.part(n - 1);
        Self::from_trailing_zeros(self.0.iter().map(|p| p - c).collect())
    }

    /// Every partition of `n`, in decreasing lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for k in (1..=n.min(max)).rev() {
                cur.push(k);
                rec(n - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// The hooks `(n-k, 1^k)` of `n`, largest first part first.
    pub fn hooks(n: u32) -> Vec<Partition> {
        if n == 0 {
            return Vec::new();
        }
        (0..n).map(|k| Partition(std::iter::once(n - k).chain(std::iter::repeat_n(1, k as usize)).collect())).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `4,2`, `(4,2)`, `[4,2]`, `4 2` and the empty forms `()`, `[]`, ``.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let parts = t
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<u32>().map_err(|_| Error::Parse(format!("partition '{s}'"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<u32>::deserialize(d)?;
        Partition::new(v).map_err(serde::de::Error::custom)
    }
}
