//! Ribbon (border strip) additions and removals via beta-numbers.
//!
//! With `β_k = λ_k + L − k` for a long enough `L`, adding an `n`-ribbon moves
//! one bead from `β_k` to the vacant position `β_k + n`; the ribbon's height is
//! the number of beads jumped over.

use super::Partition;

fn beta_set(lam: &Partition, len: usize) -> Vec<usize> {
    (0..len).map(|k| lam.part(k) + len - 1 - k).collect()
}

fn from_beta(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    Partition::from_decreasing(beta.iter().enumerate().map(|(k, &b)| b + k + 1 - len).collect())
}

/// All `(μ, height)` with `μ ⊇ λ` and `μ/λ` a ribbon of `n` cells, sorted by `μ`.
pub fn add_ribbons(lam: &Partition, n: usize) -> Vec<(Partition, usize)> {
    if n == 0 {
        return Vec::new();
    }
    let beta = beta_set(lam, lam.len() + n);
    let mut out: Vec<(Partition, usize)> = beta
        .iter()
        .enumerate()
        .filter(|(_, &b)| !beta.contains(&(b + n)))
        .map(|(k, &b)| {
            let height = beta.iter().filter(|&&x| x > b && x < b + n).count();
            let mut moved = beta.clone();
            moved[k] = b + n;
            (from_beta(moved), height)
        })
        .collect();
    out.sort();
    out
}

/// All `(μ, height)` with `μ ⊆ λ` and `λ/μ` a ribbon of `n` cells, sorted by `μ`.
pub fn remove_ribbons(lam: &Partition, n: usize) -> Vec<(Partition, usize)> {
    if n == 0 {
        return Vec::new();
    }
    let beta = beta_set(lam, lam.len());
    let mut out: Vec<(Partition, usize)> = beta
        .iter()
        .enumerate()
        .filter(|(_, &b)| b >= n && !beta.contains(&(b - n)))
        .map(|(k, &b)| {
            let height = beta.iter().filter(|&&x| x > b - n && x < b).count();
            let mut moved = beta.clone();
            moved[k] = b - n;
            (from_beta(moved), height)
        })
        .collect();
    out.sort();
    out
}
