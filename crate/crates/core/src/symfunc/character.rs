//! Symmetric-group characters by the Murnaghan–Nakayama rule.

use std::collections::HashMap;

use super::partition::Partition;

/// Memoized `chi^lambda(rho)` on beta-sets.
#[derive(Default)]
pub struct CharacterTable {
    memo: HashMap<(Vec<u32>, Vec<u32>), i64>,
}

impl CharacterTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Character of the irreducible `lambda` on the class of cycle type `rho`.
    /// Zero unless `|lambda| = |rho|`.
    pub fn chi(&mut self, lambda: &Partition, rho: &[u32]) -> i64 {
        if lambda.size() != rho.iter().sum::<u32>() {
            return 0;
        }
        let l = lambda.len() as u32;
        let beta: Vec<u32> = lambda.parts().iter().enumerate().map(|(i, &p)| p + l - 1 - i as u32).collect();
        let mut rho = rho.to_vec();
        rho.sort_unstable_by(|a, b| b.cmp(a));
        self.chi_beta(beta, &rho)
    }

    /// `beta` is strictly decreasing.
    fn chi_beta(&mut self, beta: Vec<u32>, rho: &[u32]) -> i64 {
        let Some((&k, rest)) = rho.split_first() else {
            return 1;
        };
        let key = (normalize(&beta), rho.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for i in 0..beta.len() {
            let b = beta[i];
            if b < k || beta.contains(&(b - k)) {
                continue;
            }
            let target = b - k;
            let between = beta.iter().filter(|&&x| x > target && x < b).count();
            let mut next = beta.clone();
            next[i] = target;
            next.sort_unstable_by(|a, b| b.cmp(a));
            let sign = if between % 2 == 0 { 1 } else { -1 };
            total += sign * self.chi_beta(next, rest);
        }
        self.memo.insert(key, total);
        total
    }
}

/// Drops beads that sit on the bottom of the abacus, so equal partitions
/// share a key.
fn normalize(beta: &[u32]) -> Vec<u32> {
    let mut v = beta.to_vec();
    let mut shift = 0;
    while let Some(&last) = v.last() {
        if last == shift {
            v.pop();
            shift += 1;
        } else {
            break;
        }
    }
    v.iter().map(|x| x - shift).collect()
}

/// Size of the conjugacy class of cycle type `rho` in `S_n`.
pub fn class_size(rho: &[u32]) -> u128 {
    let n: u32 = rho.iter().sum();
    let mut z: u128 = 1;
    let mut mult: HashMap<u32, u32> = HashMap::new();
    for &r in rho {
        z *= r as u128;
        *mult.entry(r).or_insert(0) += 1;
    }
    for &m in mult.values() {
        z *= (1..=m as u128).product::<u128>();
    }
    (1..=n as u128).product::<u128>() / z
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_tables() {
        let mut t = CharacterTable::new();
        // S_3: trivial, sign, standard.
        assert_eq!(t.chi(&p("3"), &[2, 1]), 1);
        assert_eq!(t.chi(&p("1,1,1"), &[2, 1]), -1);
        assert_eq!(t.chi(&p("2,1"), &[1, 1, 1]), 2);
        assert_eq!(t.chi(&p("2,1"), &[3]), -1);
        assert_eq!(t.chi(&p("2,1"), &[2, 1]), 0);
        assert_eq!(t.chi(&p("2,2"), &[2, 2]), 2);
        assert_eq!(t.chi(&p("4,2"), &[1; 6]), 9);
    }

    #[test]
    fn column_orthogonality() {
        let mut t = CharacterTable::new();
        for n in 1..=7u32 {
            let parts = Partition::all(n);
            let classes: Vec<Vec<u32>> = parts.iter().map(|p| p.parts().to_vec()).collect();
            for (i, l) in parts.iter().enumerate() {
                for m in &parts[i..] {
                    let s: i128 = classes
                        .iter()
                        .map(|c| class_size(c) as i128 * (t.chi(l, c) * t.chi(m, c)) as i128)
                        .sum();
                    let fact: i128 = (1..=n as i128).product();
                    assert_eq!(s, if l == m { fact } else { 0 }, "{l} {m}");
                }
            }
        }
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(&[2, 1]), 3);
        assert_eq!(class_size(&[1, 1, 1, 1]), 1);
        assert_eq!(class_size(&[2, 2]), 3);
    }
}
