//! Production Littlewood–Richardson path.
//!
//! Skew Schur functions are expanded through the Jacobi–Trudi determinant
//! (in `h` or `e`, whichever matrix is smaller), and every product of
//! complete/elementary functions is evaluated by iterated Pieri rules.
//! All intermediate expansions are memoized behind `RwLock`s.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;
use std::sync::{Arc, OnceLock, RwLock};

use super::Partition;

/// Integer Schur-basis expansion.
pub type SchurExpansion = BTreeMap<Partition, i64>;

struct Memo<K, V> {
    map: OnceLock<RwLock<HashMap<K, Arc<V>>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    const fn new() -> Self {
        Memo { map: OnceLock::new() }
    }

    fn get_or_insert_with(&self, key: &K, f: impl FnOnce() -> V) -> Arc<V> {
        let map = self.map.get_or_init(|| RwLock::new(HashMap::new()));
        if let Some(v) = map.read().unwrap().get(key) {
            return Arc::clone(v);
        }
        let value = Arc::new(f());
        map.write().unwrap().entry(key.clone()).or_insert(value).clone()
    }
}

static SKEW: Memo<(Partition, Partition), SchurExpansion> = Memo::new();
static H_PRODUCT: Memo<Vec<usize>, SchurExpansion> = Memo::new();
static E_PRODUCT: Memo<Vec<usize>, SchurExpansion> = Memo::new();

/// Partitions obtained from `lam` by adding a horizontal strip of `r` boxes.
pub fn pieri_h(r: usize, lam: &Partition) -> Vec<Partition> {
    let len = lam.len();
    let mut out = Vec::new();
    let mut parts = vec![0; len + 1];
    fn go(lam: &Partition, row: usize, remaining: usize, parts: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row == parts.len() {
            if remaining == 0 {
                out.push(Partition::from_decreasing(parts.clone()));
            }
            return;
        }
        let base = lam.part(row);
        let cap = if row == 0 { base + remaining } else { lam.part(row - 1).min(base + remaining) };
        for p in base..=cap {
            parts[row] = p;
            go(lam, row + 1, remaining - (p - base), parts, out);
        }
    }
    go(lam, 0, r, &mut parts, &mut out);
    out
}

/// Partitions obtained from `lam` by adding a vertical strip of `r` boxes.
pub fn pieri_e(r: usize, lam: &Partition) -> Vec<Partition> {
    pieri_h(r, &lam.conjugate()).into_iter().map(|mu| mu.conjugate()).collect()
}

fn apply_strips(
    start: &SchurExpansion,
    factors: &[usize],
    strip: fn(usize, &Partition) -> Vec<Partition>,
) -> SchurExpansion {
    let mut current = start.clone();
    for &k in factors {
        let mut next = SchurExpansion::new();
        for (lam, &c) in &current {
            for mu in strip(k, lam) {
                *next.entry(mu).or_insert(0) += c;
            }
        }
        next.retain(|_, c| *c != 0);
        current = next;
    }
    current
}

fn unit() -> SchurExpansion {
    SchurExpansion::from([(Partition::empty(), 1)])
}

/// Schur expansion of `h_{k_1} ⋯ h_{k_n}`.
pub(crate) fn h_product(factors: &[usize]) -> Arc<SchurExpansion> {
    let mut key: Vec<usize> = factors.iter().copied().filter(|&k| k > 0).collect();
    key.sort_unstable_by(|a, b| b.cmp(a));
    H_PRODUCT.get_or_insert_with(&key, || apply_strips(&unit(), &key, pieri_h))
}

/// Schur expansion of `e_{k_1} ⋯ e_{k_n}`.
pub(crate) fn e_product(factors: &[usize]) -> Arc<SchurExpansion> {
    let mut key: Vec<usize> = factors.iter().copied().filter(|&k| k > 0).collect();
    key.sort_unstable_by(|a, b| b.cmp(a));
    E_PRODUCT.get_or_insert_with(&key, || apply_strips(&unit(), &key, pieri_e))
}

/// Signed terms of det(a_{ij}) with a_{ij} = outer_i − inner_j − i + j over
/// an n×n matrix; entries below zero vanish. Each term lists the matrix
/// entries along the permutation.
fn jacobi_trudi_terms(outer: &Partition, inner: &Partition, n: usize) -> Vec<(i64, Vec<usize>)> {
    let entry = |i: usize, j: usize| -> Option<usize> {
        let v = outer.part(i) as i64 - inner.part(j) as i64 - i as i64 + j as i64;
        (v >= 0).then_some(v as usize)
    };
    let mut out = Vec::new();
    let mut used = vec![false; n];
    let mut chosen = Vec::with_capacity(n);
    fn go(
        row: usize,
        n: usize,
        sign: i64,
        entry: &dyn Fn(usize, usize) -> Option<usize>,
        used: &mut Vec<bool>,
        chosen: &mut Vec<usize>,
        out: &mut Vec<(i64, Vec<usize>)>,
    ) {
        if row == n {
            out.push((sign, chosen.clone()));
            return;
        }
        for col in 0..n {
            if used[col] {
                continue;
            }
            if let Some(v) = entry(row, col) {
                // inversions contributed: unused columns to the left of `col`
                let inv = used[..col].iter().filter(|u| !**u).count();
                let s = if inv % 2 == 0 { sign } else { -sign };
                used[col] = true;
                chosen.push(v);
                go(row + 1, n, s, entry, used, chosen, out);
                chosen.pop();
                used[col] = false;
            }
        }
    }
    go(0, n, 1, &entry, &mut used, &mut chosen, &mut out);
    out
}

fn add_scaled(target: &mut SchurExpansion, source: &SchurExpansion, scale: i64) {
    for (mu, &c) in source {
        *target.entry(mu.clone()).or_insert(0) += scale * c;
    }
}

/// Schur expansion of the skew Schur function s_{outer/inner}; empty unless `inner ⊆ outer`.
pub fn skew_expansion(outer: &Partition, inner: &Partition) -> Arc<SchurExpansion> {
    if !outer.contains(inner) {
        return Arc::new(SchurExpansion::new());
    }
    SKEW.get_or_insert_with(&(outer.clone(), inner.clone()), || {
        let mut out = SchurExpansion::new();
        if outer.len() <= outer.part(0) {
            for (sign, factors) in jacobi_trudi_terms(outer, inner, outer.len()) {
                add_scaled(&mut out, &h_product(&factors), sign);
            }
        } else {
            let (oc, ic) = (outer.conjugate(), inner.conjugate());
            for (sign, factors) in jacobi_trudi_terms(&oc, &ic, oc.len()) {
                add_scaled(&mut out, &e_product(&factors), sign);
            }
        }
        out.retain(|_, c| *c != 0);
        out
    })
}

/// Product s_nu · s_lam in the Schur basis, by Jacobi–Trudi on `nu` and Pieri on `lam`.
pub(crate) fn schur_product(nu: &Partition, lam: &Partition) -> SchurExpansion {
    let start = SchurExpansion::from([(lam.clone(), 1)]);
    let mut out = SchurExpansion::new();
    let empty = Partition::empty();
    if nu.len() <= nu.part(0) {
        for (sign, factors) in jacobi_trudi_terms(nu, &empty, nu.len()) {
            add_scaled(&mut out, &apply_strips(&start, &factors, pieri_h), sign);
        }
    } else {
        let nc = nu.conjugate();
        for (sign, factors) in jacobi_trudi_terms(&nc, &empty, nc.len()) {
            add_scaled(&mut out, &apply_strips(&start, &factors, pieri_e), sign);
        }
    }
    if nu.is_empty() {
        out = start;
    }
    out.retain(|_, c| *c != 0);
    out
}

/// The Littlewood–Richardson coefficient N^λ_{μ,ν}: the multiplicity of s_λ in s_μ·s_ν.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if mu.size() + nu.size() != lam.size() || !lam.contains(mu) || !lam.contains(nu) {
        return 0;
    }
    let c = skew_expansion(lam, mu).get(nu).copied().unwrap_or(0);
    debug_assert!(c >= 0, "negative LR coefficient");
    c as u64
}
