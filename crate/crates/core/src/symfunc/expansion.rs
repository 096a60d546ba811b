use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

use super::partition::Partition;

/// An integer combination of Schur functions.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, i64>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(p: Partition) -> Self {
        let mut e = Self::new();
        e.add_term(p, 1);
        e
    }

    pub fn add_term(&mut self, p: Partition, c: i64) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(p) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, p: &Partition) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic order of partitions.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, i64)> + '_ {
        self.terms.iter().map(|(p, c)| (p, *c))
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (p, c) in o.terms() {
            r.add_term(p.clone(), c);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (p, c) in o.terms() {
            r.add_term(p.clone(), -c);
        }
        r
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut r = Self::new();
        for (p, c) in self.terms() {
            r.add_term(p.clone(), c * k);
        }
        r
    }

    /// Divides every coefficient by two; fails on an odd coefficient.
    pub fn halve(&self) -> Result<Self> {
        let mut r = Self::new();
        for (p, c) in self.terms() {
            if c % 2 != 0 {
                return Err(Error::Consistency(format!("odd coefficient {c} on s{p} before halving")));
            }
            r.add_term(p.clone(), c / 2);
        }
        Ok(r)
    }

    /// Keeps the terms whose partitions satisfy `keep`.
    pub fn filter(&self, keep: impl Fn(&Partition) -> bool) -> Self {
        Self { terms: self.terms.iter().filter(|(p, _)| keep(p)).map(|(p, c)| (p.clone(), *c)).collect() }
    }

    pub fn max_coeff(&self) -> i64 {
        self.terms.values().copied().max().unwrap_or(0)
    }

    pub fn min_coeff(&self) -> i64 {
        self.terms.values().copied().min().unwrap_or(0)
    }
}

impl FromIterator<(Partition, i64)> for SchurExpansion {
    fn from_iter<I: IntoIterator<Item = (Partition, i64)>>(iter: I) -> Self {
        let mut e = Self::new();
        for (p, c) in iter {
            e.add_term(p, c);
        }
        e
    }
}

fn term_text(p: &Partition) -> String {
    let s: Vec<String> = p.parts().iter().map(u32::to_string).collect();
    format!("s[{}]", s.join(","))
}

/// `s[8,4] + s[8,2,2] - 3*s[2]`, largest partition first; `0` when empty.
impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.unsigned_abs();
            let body = if mag == 1 { term_text(p) } else { format!("{mag}*{}", term_text(p)) };
            match (i, *c < 0) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for SchurExpansion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("Schur expansion '{s}'"));
        let t = s.trim();
        if t == "0" {
            return Ok(Self::new());
        }
        let mut out = Self::new();
        let mut rest = t;
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r.trim_start();
        }
        loop {
            let end = rest.find(']').ok_or_else(bad)?;
            let (term, tail) = rest.split_at(end + 1);
            let (coeff, body) = match term.split_once('*') {
                Some((k, b)) => (k.trim().parse::<i64>().map_err(|_| bad())?, b.trim()),
                None => (1, term.trim()),
            };
            let inner = body.strip_prefix("s[").and_then(|b| b.strip_suffix(']')).ok_or_else(bad)?;
            out.add_term(inner.parse()?, sign * coeff);
            let tail = tail.trim_start();
            if tail.is_empty() {
                break;
            }
            let (sg, r) = if let Some(r) = tail.strip_prefix('+') {
                (1, r)
            } else if let Some(r) = tail.strip_prefix('-') {
                (-1, r)
            } else {
                return Err(bad());
            };
            sign = sg;
            rest = r.trim_start();
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn text_format() {
        let e: SchurExpansion = "s[2] - s[1,1]".parse().unwrap();
        assert_eq!(e.coeff(&"2".parse().unwrap()), 1);
        assert_eq!(e.coeff(&"1,1".parse().unwrap()), -1);
        assert_eq!(e.to_string(), "s[2] - s[1,1]");
        let e: SchurExpansion = "s[8,4] + 2*s[6,4,2] + s[8,2,2]".parse().unwrap();
        assert_eq!(e.to_string(), "s[8,4] + s[8,2,2] + 2*s[6,4,2]");
        assert_eq!("0".parse::<SchurExpansion>().unwrap(), SchurExpansion::new());
        assert_eq!(SchurExpansion::single(Partition::empty()).to_string(), "s[]");
        assert!("s[1,2]".parse::<SchurExpansion>().is_err());
        assert!("2 s[1]".parse::<SchurExpansion>().is_err());
    }

    #[test]
    fn cancellation_drops_terms() {
        let a: SchurExpansion = "s[2] + s[1,1]".parse().unwrap();
        let b: SchurExpansion = "s[2]".parse().unwrap();
        assert_eq!(a.sub(&b).to_string(), "s[1,1]");
        assert!(a.sub(&a).is_zero());
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1u32..6, 0..5).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn text_round_trip(terms in proptest::collection::vec((arb_partition(), -5i64..6), 0..6)) {
            let e: SchurExpansion = terms.into_iter().collect();
            let back: SchurExpansion = e.to_string().parse().unwrap();
            prop_assert_eq!(back, e);
        }
    }
}
