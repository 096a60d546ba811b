use super::character::{class_size, CharacterTable};
use super::expansion::SchurExpansion;
use super::lr::lr_mult;
use super::partition::Partition;
use crate::Result;

/// Characters `chi^lambda(2 rho)` for every `lambda` of `2n` and `rho` of `n`.
pub struct PlethysmTable {
    n: u32,
    classes: Vec<Vec<u32>>,
    sizes: Vec<i128>,
    targets: Vec<(Partition, Vec<i64>)>,
    chars: CharacterTable,
}

impl PlethysmTable {
    pub fn new(n: u32) -> Self {
        let mut chars = CharacterTable::new();
        let classes: Vec<Vec<u32>> = Partition::all(n).iter().map(|p| p.parts().to_vec()).collect();
        let sizes = classes.iter().map(|c| class_size(c) as i128).collect();
        let targets = Partition::all(2 * n)
            .into_iter()
            .map(|l| {
                let row = classes
                    .iter()
                    .map(|c| {
                        let doubled: Vec<u32> = c.iter().map(|x| 2 * x).collect();
                        chars.chi(&l, &doubled)
                    })
                    .collect();
                (l, row)
            })
            .collect();
        Self { n, classes, sizes, targets, chars }
    }

    /// `s_mu[p2]` via `s_mu = sum_rho chi^mu(rho) p_rho / z_rho` and
    /// `p_{2 rho} = sum_lambda chi^lambda(2 rho) s_lambda`.
    pub fn plethysm(&mut self, mu: &Partition) -> SchurExpansion {
        assert_eq!(mu.size(), self.n, "table built for another degree");
        let weights: Vec<i128> = self
            .classes
            .iter()
            .zip(&self.sizes)
            .map(|(c, &z)| z * self.chars.chi(mu, c) as i128)
            .collect();
        let fact: i128 = (1..=self.n as i128).product();
        let mut out = SchurExpansion::new();
        for (l, row) in &self.targets {
            let s: i128 = row.iter().zip(&weights).map(|(&x, &w)| x as i128 * w).sum();
            assert!(s % fact == 0, "non-integral plethysm coefficient on {l}");
            out.add_term(l.clone(), (s / fact) as i64);
        }
        out
    }

    /// Symmetric and exterior squares of `s_mu`.
    pub fn square_split(&mut self, mu: &Partition) -> Result<(SchurExpansion, SchurExpansion)> {
        let sq = lr_mult(mu, mu);
        let p2 = self.plethysm(mu);
        Ok((sq.add(&p2).halve()?, sq.sub(&p2).halve()?))
    }
}

/// Expansion of `s_mu(x^2)` in Schur functions.
pub fn plethysm_p2(mu: &Partition) -> SchurExpansion {
    PlethysmTable::new(mu.size()).plethysm(mu)
}

/// `(h2[s_mu], e2[s_mu])`.
pub fn square_split(mu: &Partition) -> Result<(SchurExpansion, SchurExpansion)> {
    PlethysmTable::new(mu.size()).square_split(mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_plethysms() {
        assert_eq!(plethysm_p2(&p("1")).to_string(), "s[2] - s[1,1]");
        assert_eq!(plethysm_p2(&p("2")).to_string(), "s[4] - s[3,1] + s[2,2]");
        assert_eq!(plethysm_p2(&Partition::empty()).to_string(), "s[]");
    }

    #[test]
    fn small_squares() {
        let (s, e) = square_split(&p("1")).unwrap();
        assert_eq!(s.to_string(), "s[2]");
        assert_eq!(e.to_string(), "s[1,1]");
        let (s, e) = square_split(&p("4,2")).unwrap();
        assert_eq!(s.coeff(&p("6,4,2")), 2);
        assert_eq!(e.coeff(&p("6,4,2")), 1);
    }
}
