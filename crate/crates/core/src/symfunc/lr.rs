use super::expansion::SchurExpansion;
use super::partition::Partition;

/// `s_mu * s_nu` by enumerating Littlewood–Richardson tableaux of shape
/// `lambda / mu` and content `nu`.
pub fn lr_mult(mu: &Partition, nu: &Partition) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    let shape: Vec<u32> = mu.parts().to_vec();
    let mut counts: Vec<Vec<u32>> = Vec::new();
    fill_letter(0, nu.parts(), shape, &mut counts, &mut out);
    out
}

/// Adds the strip of letter `k` (0-based) and recurses to the next letter.
fn fill_letter(k: usize, content: &[u32], shape: Vec<u32>, counts: &mut Vec<Vec<u32>>, out: &mut SchurExpansion) {
    if k == content.len() {
        out.add_term(Partition::from_trailing_zeros(shape).expect("LR shape"), 1);
        return;
    }
    let rows = shape.len() + 1;
    let mut added = vec![0u32; rows];
    strip(k, 0, content[k], &shape, &mut added, counts, content, out);
}

/// Chooses how many cells of letter `k` go in row `r` and below.
#[allow(clippy::too_many_arguments)]
fn strip(
    k: usize,
    r: usize,
    remaining: u32,
    shape: &[u32],
    added: &mut Vec<u32>,
    counts: &mut Vec<Vec<u32>>,
    content: &[u32],
    out: &mut SchurExpansion,
) {
    if remaining == 0 {
        let mut next: Vec<u32> = (0..added.len()).map(|i| shape.get(i).copied().unwrap_or(0) + added[i]).collect();
        while next.last() == Some(&0) {
            next.pop();
        }
        counts.push(added.clone());
        fill_letter(k + 1, content, next, counts, out);
        counts.pop();
        return;
    }
    if r >= added.len() {
        return;
    }
    let cur = shape.get(r).copied().unwrap_or(0);
    // Horizontal strip: row r may grow up to the old length of row r - 1.
    let cap = if r == 0 { remaining } else { (shape[r - 1] - cur).min(remaining) };
    // Lattice condition: letter k in rows <= r is bounded by letter k-1 in rows < r.
    let lattice_cap = if k == 0 {
        u32::MAX
    } else {
        let prev: u32 = counts[k - 1].iter().take(r).sum();
        let mine: u32 = added.iter().take(r).sum();
        prev.saturating_sub(mine)
    };
    for take in (0..=cap.min(lattice_cap)).rev() {
        added[r] = take;
        strip(k, r + 1, remaining - take, shape, added, counts, content, out);
    }
    added[r] = 0;
}
