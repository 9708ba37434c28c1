//! Brute-force reference computations.
//!
//! Nothing here shares code with the production paths in [`crate::partitions`]
//! and [`crate::symring`]: Littlewood–Richardson numbers are counted as LR
//! tableaux, ribbons are found by scanning cell sets, and Schur polynomials
//! are expanded monomial by monomial from semistandard tableaux.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partitions::Partition;
use crate::symring::{Rational, SymFunc};

/// Cells of the skew diagram `outer/inner` in row-major order.
fn skew_cells(outer: &Partition, inner: &Partition) -> Vec<(usize, usize)> {
    outer.cells().filter(|&(r, c)| c >= inner.part(r)).collect()
}

/// Counts semistandard fillings of `outer/inner` with exactly `content[v]`
/// copies of `v + 1`, optionally requiring the reverse reading word to be a
/// lattice word.
fn count_fillings(outer: &Partition, inner: &Partition, content: &[usize], lattice: bool) -> u64 {
    let cells = skew_cells(outer, inner);
    if cells.len() != content.iter().sum::<usize>() {
        return 0;
    }
    let mut grid: HashMap<(usize, usize), usize> = HashMap::new();
    let mut remaining = content.to_vec();
    let mut count = 0;
    fill(&cells, 0, &mut grid, &mut remaining, inner, lattice, &mut count);
    count
}

fn fill(
    cells: &[(usize, usize)],
    idx: usize,
    grid: &mut HashMap<(usize, usize), usize>,
    remaining: &mut Vec<usize>,
    inner: &Partition,
    lattice: bool,
    count: &mut u64,
) {
    if idx == cells.len() {
        if !lattice || is_reverse_lattice(cells, grid) {
            *count += 1;
        }
        return;
    }
    let (r, c) = cells[idx];
    let left = if c > inner.part(r) { grid.get(&(r, c - 1)).copied() } else { None };
    let above = if r > 0 && c >= inner.part(r - 1) { grid.get(&(r - 1, c)).copied() } else { None };
    let lo = left.unwrap_or(0).max(above.map_or(0, |a| a + 1));
    for v in lo..remaining.len() {
        if remaining[v] == 0 {
            continue;
        }
        remaining[v] -= 1;
        grid.insert((r, c), v);
        fill(cells, idx + 1, grid, remaining, inner, lattice, count);
        grid.remove(&(r, c));
        remaining[v] += 1;
    }
}

fn is_reverse_lattice(cells: &[(usize, usize)], grid: &HashMap<(usize, usize), usize>) -> bool {
    let mut rows: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(r, c) in cells {
        rows.entry(r).or_default().push(c);
    }
    let max = grid.values().copied().max().map_or(0, |m| m + 1);
    let mut seen = vec![0usize; max + 1];
    for (r, cols) in rows {
        for &c in cols.iter().rev() {
            let v = grid[&(r, c)];
            seen[v] += 1;
            if v > 0 && seen[v] > seen[v - 1] {
                return false;
            }
        }
    }
    true
}

/// N^λ_{μ,ν} as the number of LR tableaux of shape λ/μ and content ν.
pub fn lr_by_tableaux(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !lam.contains(mu) || lam.size() != mu.size() + nu.size() {
        return 0;
    }
    count_fillings(lam, mu, nu.parts(), true)
}

/// Number of semistandard tableaux of shape `shape` with content `weight` (a composition).
pub fn kostka(shape: &Partition, weight: &[usize]) -> u64 {
    count_fillings(shape, &Partition::empty(), weight, false)
}

fn is_ribbon(cells: &BTreeSet<(usize, usize)>) -> bool {
    if cells.is_empty() {
        return false;
    }
    if cells.iter().any(|&(r, c)| {
        cells.contains(&(r + 1, c)) && cells.contains(&(r, c + 1)) && cells.contains(&(r + 1, c + 1))
    }) {
        return false;
    }
    let start = *cells.iter().next().unwrap();
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some((r, c)) = stack.pop() {
        let mut nbrs = vec![(r + 1, c), (r, c + 1)];
        if r > 0 {
            nbrs.push((r - 1, c));
        }
        if c > 0 {
            nbrs.push((r, c - 1));
        }
        for nb in nbrs {
            if cells.contains(&nb) && seen.insert(nb) {
                stack.push(nb);
            }
        }
    }
    seen.len() == cells.len()
}

fn ribbon_height(cells: &BTreeSet<(usize, usize)>) -> usize {
    cells.iter().map(|&(r, _)| r).collect::<BTreeSet<_>>().len() - 1
}

/// Ribbon additions found by scanning every μ with |μ| = |λ| + n.
pub fn ribbons_added(lam: &Partition, n: usize) -> Vec<(Partition, usize)> {
    let mut out: Vec<(Partition, usize)> = Partition::all_of_size(lam.size() + n)
        .into_iter()
        .filter(|mu| mu.contains(lam))
        .filter_map(|mu| {
            let cells: BTreeSet<_> = skew_cells(&mu, lam).into_iter().collect();
            is_ribbon(&cells).then(|| (mu, ribbon_height(&cells)))
        })
        .collect();
    out.sort();
    out
}

/// Ribbon removals found by scanning every μ with |μ| = |λ| − n.
pub fn ribbons_removed(lam: &Partition, n: usize) -> Vec<(Partition, usize)> {
    if n > lam.size() {
        return Vec::new();
    }
    let mut out: Vec<(Partition, usize)> = Partition::all_of_size(lam.size() - n)
        .into_iter()
        .filter(|mu| lam.contains(mu))
        .filter_map(|mu| {
            let cells: BTreeSet<_> = skew_cells(lam, &mu).into_iter().collect();
            is_ribbon(&cells).then(|| (mu, ribbon_height(&cells)))
        })
        .collect();
    out.sort();
    out
}

/// Exponent vectors of length `n_vars` that are weakly decreasing and of total `degree`.
fn dominant_exponents(degree: usize, n_vars: usize) -> Vec<Vec<usize>> {
    Partition::all_of_size(degree)
        .into_iter()
        .filter(|p| p.len() <= n_vars)
        .map(|p| (0..n_vars).map(|i| p.part(i)).collect())
        .collect()
}

fn compositions_below(bound: &[usize], total: usize) -> Vec<Vec<usize>> {
    fn go(bound: &[usize], i: usize, remaining: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == bound.len() {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in 0..=bound[i].min(remaining) {
            cur.push(v);
            go(bound, i + 1, remaining - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(bound, 0, total, &mut Vec::new(), &mut out);
    out
}

/// Coefficients of the polynomial s_μ(x)·s_ν(x) in `n_vars` variables at every
/// dominant monomial. A symmetric polynomial is determined by these values.
pub fn product_monomials(mu: &Partition, nu: &Partition, n_vars: usize) -> BTreeMap<Vec<usize>, i64> {
    let mut kostka_memo: HashMap<(Partition, Vec<usize>), u64> = HashMap::new();
    let mut k = |shape: &Partition, w: &[usize]| -> u64 {
        *kostka_memo.entry((shape.clone(), w.to_vec())).or_insert_with(|| kostka(shape, w))
    };
    let degree = mu.size() + nu.size();
    let mut out = BTreeMap::new();
    for alpha in dominant_exponents(degree, n_vars) {
        let mut total = 0i64;
        for beta in compositions_below(&alpha, mu.size()) {
            let gamma: Vec<usize> = alpha.iter().zip(&beta).map(|(a, b)| a - b).collect();
            total += (k(mu, &beta) * k(nu, &gamma)) as i64;
        }
        out.insert(alpha, total);
    }
    out
}

/// Coefficients at every dominant monomial of Σ c_λ s_λ(x) in `n_vars` variables.
pub fn expansion_monomials(
    expansion: &BTreeMap<Partition, i64>,
    degree: usize,
    n_vars: usize,
) -> BTreeMap<Vec<usize>, i64> {
    dominant_exponents(degree, n_vars)
        .into_iter()
        .map(|alpha| {
            let total = expansion
                .iter()
                .filter(|(lam, _)| lam.size() == degree)
                .map(|(lam, &c)| c * kostka(lam, &alpha) as i64)
                .sum();
            (alpha, total)
        })
        .collect()
}

/// The Maya-diagram sign count done the slow way: explicit occupied sets.
pub fn occupied_positions(charge: i64, shape: &Partition, floor: i64) -> BTreeSet<i64> {
    (1..)
        .map(|k: i64| shape.part((k - 1) as usize) as i64 - k + charge)
        .take_while(|&x| x >= floor)
        .collect()
}

/// A polynomial in the power sums, keyed by the multiset of indices (sorted, decreasing).
type PowerPoly = BTreeMap<Vec<usize>, Rational>;

fn add_power(poly: &mut PowerPoly, key: Vec<usize>, c: Rational) {
    let slot = poly.entry(key.clone()).or_insert_with(Rational::zero);
    *slot += c;
    if slot.is_zero() {
        poly.remove(&key);
    }
}

fn sorted_desc(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// χ^λ(ρ) from the cell-scanning ribbon search.
fn slow_character(lam: &Partition, rho: &[usize]) -> i64 {
    let Some((&first, rest)) = rho.split_first() else {
        return if lam.is_empty() { 1 } else { 0 };
    };
    ribbons_removed(lam, first)
        .into_iter()
        .map(|(mu, h)| if h % 2 == 0 { 1 } else { -1 } * slow_character(&mu, rest))
        .sum()
}

fn centralizer(rho: &[usize]) -> Rational {
    let mut mult: BTreeMap<usize, i64> = BTreeMap::new();
    for &k in rho {
        *mult.entry(k).or_insert(0) += 1;
    }
    let mut z = Rational::one();
    for (k, m) in mult {
        for j in 1..=m {
            z *= Rational::from_integer(BigInt::from(k as i64 * j));
        }
    }
    z
}

fn cycle_types(n: usize) -> Vec<Vec<usize>> {
    Partition::all_of_size(n).into_iter().map(|r| r.parts().to_vec()).collect()
}

fn schur_to_power(f: &SymFunc) -> PowerPoly {
    let mut out = PowerPoly::new();
    for (lam, c) in f.terms() {
        for rho in cycle_types(lam.size()) {
            let chi = slow_character(lam, &rho);
            if chi != 0 {
                let w = c * Rational::from_integer(BigInt::from(chi)) / centralizer(&rho);
                add_power(&mut out, rho, w);
            }
        }
    }
    out
}

fn power_to_schur(poly: &PowerPoly) -> SymFunc {
    let mut out = SymFunc::zero();
    for (rho, c) in poly {
        let n = rho.iter().sum();
        for lam in Partition::all_of_size(n) {
            let chi = slow_character(&lam, rho);
            if chi != 0 {
                out.add_term(lam, c * Rational::from_integer(BigInt::from(chi)));
            }
        }
    }
    out
}

/// h_n (sign = false) or e_n (sign = true) as Σ_ρ ε_ρ p_ρ / z_ρ.
fn complete_or_elementary(n: usize, elementary: bool) -> PowerPoly {
    let mut out = PowerPoly::new();
    for rho in cycle_types(n) {
        let odd = elementary && (n - rho.len()) % 2 == 1;
        let c = Rational::one() / centralizer(&rho);
        add_power(&mut out, rho, if odd { -c } else { c });
    }
    out
}

fn power_product(a: &PowerPoly, b: &PowerPoly) -> PowerPoly {
    let mut out = PowerPoly::new();
    for (x, c) in a {
        for (y, d) in b {
            add_power(&mut out, sorted_desc([x.as_slice(), y.as_slice()].concat()), c * d);
        }
    }
    out
}

/// p_ρ^⊥ as the differential operator Π_k (k ∂/∂p_k).
fn power_skew(rho: &[usize], f: &PowerPoly) -> PowerPoly {
    let mut cur = f.clone();
    for &k in rho {
        let mut next = PowerPoly::new();
        for (mono, c) in &cur {
            let m = mono.iter().filter(|&&x| x == k).count();
            if m == 0 {
                continue;
            }
            let mut rest = mono.clone();
            let at = rest.iter().position(|&x| x == k).unwrap();
            rest.remove(at);
            add_power(&mut next, rest, c * Rational::from_integer(BigInt::from((k * m) as i64)));
        }
        cur = next;
    }
    cur
}

/// f^⊥ g for f given in the power-sum basis.
fn power_skew_by(f: &PowerPoly, g: &PowerPoly) -> PowerPoly {
    let mut out = PowerPoly::new();
    for (rho, c) in f {
        for (mono, d) in power_skew(rho, g) {
            add_power(&mut out, mono, c * d);
        }
    }
    out
}

fn max_degree(poly: &PowerPoly) -> usize {
    poly.keys().map(|k| k.iter().sum::<usize>()).max().unwrap_or(0)
}

/// The vertex coefficients computed entirely in the power-sum basis:
/// X_a = Σ_q (−1)^q h_{a+q} e_q^⊥ and X*_a = Σ_q (−1)^{a+q} e_{a+q} h_q^⊥,
/// i.e. coefficient extraction from H(z)E^⊥(−1/z) and E(−z)H^⊥(1/z).
pub fn vertex_by_power_sums(a: i64, star: bool, f: &SymFunc) -> SymFunc {
    let g = schur_to_power(f);
    let mut out = PowerPoly::new();
    for q in 0..=max_degree(&g) as i64 {
        let p = a + q;
        if p < 0 {
            continue;
        }
        let lowered = power_skew_by(&complete_or_elementary(q as usize, !star), &g);
        let raised = power_product(&complete_or_elementary(p as usize, star), &lowered);
        let negative = if star { p % 2 == 1 } else { q % 2 == 1 };
        for (mono, c) in raised {
            add_power(&mut out, mono, if negative { -c } else { c });
        }
    }
    power_to_schur(&out)
}
