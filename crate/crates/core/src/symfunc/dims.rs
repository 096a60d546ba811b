use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::partition::Partition;

/// Dimension of the `sl(N)` irreducible with highest weight `mu`, by the
/// hook-content formula. Zero when `mu` has more than `n` rows.
pub fn sl_dim(mu: &Partition, n: u32) -> u64 {
    if mu.len() > n as usize {
        return 0;
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, j) in mu.cells() {
        num *= n as i64 + j as i64 - i as i64;
        den *= mu.hook(i, j);
    }
    let q = num / den;
    q.to_u64().expect("dimension fits in u64")
}

/// Number of standard Young tableaux of shape `mu`.
pub fn syt_count(mu: &Partition) -> u64 {
    let mut num = BigInt::one();
    for k in 1..=mu.size() {
        num *= k;
    }
    let mut den = BigInt::one();
    for (i, j) in mu.cells() {
        den *= mu.hook(i, j);
    }
    debug_assert!((&num % &den).is_zero());
    (num / den).to_u64().expect("tableau count fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(sl_dim(&p("4,2"), 3), 27);
        assert_eq!(sl_dim(&p("3,2,1"), 3), 8);
        assert_eq!(sl_dim(&p("2,2,2"), 3), 1);
        assert_eq!(sl_dim(&p("1"), 5), 5);
        assert_eq!(sl_dim(&p("1,1,1,1"), 3), 0);
        assert_eq!(sl_dim(&Partition::empty(), 3), 1);
        assert_eq!(syt_count(&p("4,2")), 9);
        assert_eq!(syt_count(&p("3,2,1")), 16);
        assert_eq!(syt_count(&Partition::empty()), 1);
    }
}
